#ifndef WINSHIFT_AUTOMATA_IO_HPP
#define WINSHIFT_AUTOMATA_IO_HPP

#include <iostream>
#include <sstream>

#include "automata.hpp"

namespace winshift {

// Structured text format:
//
//   tracks=<d> symbols=<list;per;track> pad=<symbol or ->
//   states <n>
//   initial <q>
//   accept <q list>
//   <q> <a> -> <q'>        one line per transition, letters as c,s,v columns
//   output <q> <v>         DFAOs only
//
// Serialization is deterministic (states ascending, letters in packed order),
// so round trips are bit-exact.

inline std::string format_letter(const TrackAlphabet& alpha, int letter) {
  std::vector<int> col = alpha.unpack(letter);
  std::string s;
  for (int t = 0; t < alpha.tracks(); ++t) {
    if (t) s += ',';
    if (alpha.has_pad && col[t] == alpha.pad_value(t))
      s += '#';
    else
      s += std::to_string(col[t]);
  }
  return s;
}

inline int parse_letter(const TrackAlphabet& alpha, const std::string& s) {
  std::vector<int> col;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    int t = static_cast<int>(col.size());
    if (t >= alpha.tracks()) throw ParseError("letter has too many tracks: " + s);
    if (part == "#") {
      if (!alpha.has_pad) throw ParseError("pad symbol in pad-free alphabet");
      col.push_back(alpha.pad_value(t));
    } else {
      int v = std::stoi(part);
      if (v < 0 || v >= alpha.sizes[t]) throw ParseError("symbol out of range: " + s);
      col.push_back(v);
    }
  }
  if (static_cast<int>(col.size()) != alpha.tracks())
    throw ParseError("letter has too few tracks: " + s);
  return alpha.pack(col);
}

inline void write_dfa(std::ostream& os, const Dfa& d, const std::vector<int>* output = nullptr) {
  os << "tracks=" << d.alpha.tracks() << " symbols=";
  for (int t = 0; t < d.alpha.tracks(); ++t) {
    if (t) os << ';';
    for (int v = 0; v < d.alpha.sizes[t]; ++v) {
      if (v) os << ',';
      os << v;
    }
  }
  os << " pad=" << (d.alpha.has_pad ? "#" : "-") << "\n";
  os << "states " << d.n_states << "\n";
  os << "initial " << d.initial << "\n";
  os << "accept";
  for (uint32_t q = 0; q < d.n_states; ++q)
    if (d.accepting[q]) os << ' ' << q;
  os << "\n";
  int A = d.alpha.letter_count();
  for (uint32_t q = 0; q < d.n_states; ++q)
    for (int a = 0; a < A; ++a)
      os << q << ' ' << format_letter(d.alpha, a) << " -> " << d.step(q, a) << "\n";
  if (output)
    for (uint32_t q = 0; q < d.n_states; ++q) os << "output " << q << ' ' << (*output)[q] << "\n";
}

inline std::string to_text(const Dfa& d) {
  std::ostringstream os;
  write_dfa(os, d);
  return os.str();
}

inline std::string to_text(const OutputAutomaton& a) {
  std::ostringstream os;
  write_dfa(os, a.skeleton, &a.output);
  return os.str();
}

inline Dfa read_dfa(std::istream& is, std::vector<int>* output = nullptr) {
  Dfa d;
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty automaton file");
  {
    std::stringstream ss(line);
    std::string tok;
    int tracks = -1;
    std::string symbols, pad;
    while (ss >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError("bad header token: " + tok);
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "tracks")
        tracks = std::stoi(val);
      else if (key == "symbols")
        symbols = val;
      else if (key == "pad")
        pad = val;
      else
        throw ParseError("unknown header key: " + key);
    }
    if (tracks <= 0) throw ParseError("missing tracks in header");
    d.alpha.has_pad = pad == "#";
    std::stringstream sy(symbols);
    std::string tracksyms;
    while (std::getline(sy, tracksyms, ';')) {
      int count = 0;
      std::stringstream ts(tracksyms);
      std::string one;
      while (std::getline(ts, one, ',')) {
        if (std::stoi(one) != count) throw ParseError("symbols must be 0..n-1");
        ++count;
      }
      d.alpha.sizes.push_back(count);
    }
    if (d.alpha.tracks() != tracks) throw ParseError("tracks/symbols mismatch");
  }
  int A = d.alpha.letter_count();
  bool have_states = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string first;
    ss >> first;
    if (first == "states") {
      ss >> d.n_states;
      d.delta.assign(static_cast<size_t>(d.n_states) * A, UINT32_MAX);
      d.accepting.assign(d.n_states, 0);
      if (output) output->assign(d.n_states, 0);
      have_states = true;
    } else if (first == "initial") {
      ss >> d.initial;
    } else if (first == "accept") {
      uint32_t q;
      while (ss >> q) {
        if (!have_states || q >= d.n_states) throw ParseError("accept state out of range");
        d.accepting[q] = 1;
      }
    } else if (first == "output") {
      uint32_t q;
      int v;
      ss >> q >> v;
      if (!output) throw ParseError("unexpected output line");
      if (!have_states || q >= d.n_states) throw ParseError("output state out of range");
      (*output)[q] = v;
    } else {
      if (!have_states) throw ParseError("transition before states line");
      uint32_t q = std::stoul(first);
      std::string letter, arrow;
      uint32_t r;
      ss >> letter >> arrow >> r;
      if (arrow != "->") throw ParseError("malformed transition: " + line);
      if (q >= d.n_states || r >= d.n_states) throw ParseError("transition state out of range");
      d.delta[q * A + parse_letter(d.alpha, letter)] = r;
    }
  }
  for (uint32_t x : d.delta)
    if (x == UINT32_MAX) throw ParseError("transition table not total");
  return d;
}

inline Dfa dfa_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_dfa(is);
}

inline OutputAutomaton dfao_from_text(const std::string& text) {
  std::istringstream is(text);
  OutputAutomaton a;
  a.skeleton = read_dfa(is, &a.output);
  return a;
}

inline void write_dot(std::ostream& os, const Dfa& d, const std::vector<int>* output = nullptr) {
  os << "digraph automaton {\n  rankdir=LR;\n  __init [shape=point];\n";
  for (uint32_t q = 0; q < d.n_states; ++q) {
    os << "  q" << q << " [shape=" << (d.accepting[q] ? "doublecircle" : "circle");
    if (output) os << ", label=\"" << q << "/" << (*output)[q] << "\"";
    os << "];\n";
  }
  os << "  __init -> q" << d.initial << ";\n";
  int A = d.alpha.letter_count();
  for (uint32_t q = 0; q < d.n_states; ++q) {
    // group parallel edges onto one arrow
    std::map<uint32_t, std::string> edges;
    for (int a = 0; a < A; ++a) {
      auto& lbl = edges[d.step(q, a)];
      if (!lbl.empty()) lbl += ' ';
      lbl += format_letter(d.alpha, a);
    }
    for (auto& [r, lbl] : edges)
      os << "  q" << q << " -> q" << r << " [label=\"" << lbl << "\"];\n";
  }
  os << "}\n";
}

}  // namespace winshift

#endif
