#ifndef WINSHIFT_BOOLEAN_HPP
#define WINSHIFT_BOOLEAN_HPP

#include <map>
#include <set>

#include "automata.hpp"
#include "game.hpp"

namespace winshift {

namespace detail {

// positive boolean formulas over states, kept as the antichain of minimal
// satisfying state sets; {} is false, {{}} is true
using Model = std::vector<uint32_t>;
using Formula = std::vector<Model>;

inline void formula_insert(Formula& f, Model m) {
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  for (const Model& t : f)
    if (std::includes(m.begin(), m.end(), t.begin(), t.end())) return;
  f.erase(std::remove_if(f.begin(), f.end(),
                         [&](const Model& t) {
                           return std::includes(t.begin(), t.end(), m.begin(), m.end());
                         }),
          f.end());
  f.push_back(std::move(m));
}

}  // namespace detail

// tau(q, a) = OR over (a+1)-subsets {c_1..c_{a+1}} of the alphabet of
// AND_i delta(q, c_i); the choice digit a is the number of extra letters
// Alice offers.
struct BooleanAutomaton {
  int alphabet_size = 0;            // Sigma of the underlying language
  uint32_t n_states = 0;
  uint32_t initial = 0;
  std::vector<char> accepting;
  std::vector<detail::Formula> tau;  // indexed q * alphabet_size + choice
};

inline BooleanAutomaton build_boolean(const Dfa& d) {
  if (d.alpha.tracks() != 1) throw DomainError("build_boolean: single-track automata only");
  int sigma = d.alpha.sizes[0];
  BooleanAutomaton b;
  b.alphabet_size = sigma;
  b.n_states = d.n_states;
  b.initial = d.initial;
  b.accepting = d.accepting;
  b.tau.resize(static_cast<size_t>(d.n_states) * sigma);
  for (uint32_t q = 0; q < d.n_states; ++q)
    for (int a = 0; a < sigma; ++a) {
      detail::Formula& f = b.tau[q * sigma + a];
      // every (a+1)-subset of Sigma contributes the conjunction of successors
      std::vector<int> idx(a + 1);
      for (int i = 0; i <= a; ++i) idx[i] = i;
      for (;;) {
        detail::Model m;
        for (int c : idx) m.push_back(d.step(q, c));
        detail::formula_insert(f, std::move(m));
        int i = a;
        while (i >= 0 && idx[i] == sigma - (a + 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j <= a; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  return b;
}

// Subset-style construction: a state is the antichain of minimal obligation
// sets (conjunctions of states that must all be brought to acceptance).  A
// choice digit rewrites each obligation set by picking one model of tau per
// member and taking the union; only minimal results survive.
inline Dfa boolean_to_dfa(const BooleanAutomaton& b, size_t state_cap = 1000000) {
  using detail::Formula;
  using detail::Model;
  std::map<Formula, uint32_t> ids;
  std::vector<Formula> states;
  auto intern = [&](Formula f) {
    std::sort(f.begin(), f.end());
    auto it = ids.find(f);
    if (it != ids.end()) return it->second;
    if (states.size() >= state_cap) throw ResourceLimit("boolean_to_dfa: state cap exceeded");
    uint32_t id = static_cast<uint32_t>(states.size());
    states.push_back(f);
    ids.emplace(std::move(f), id);
    return id;
  };

  Dfa out;
  out.alpha = single_track(b.alphabet_size);
  out.initial = intern({{b.initial}});
  for (uint32_t q = 0; q < states.size(); ++q) {
    for (int a = 0; a < b.alphabet_size; ++a) {
      Formula next;
      for (const Model& obligation : states[q]) {
        // cartesian product over per-member model choices
        std::vector<const Formula*> opts;
        bool dead = false;
        for (uint32_t s : obligation) {
          const Formula& f = b.tau[s * b.alphabet_size + a];
          if (f.empty()) {
            dead = true;
            break;
          }
          opts.push_back(&f);
        }
        if (dead) continue;
        std::vector<size_t> pick(opts.size(), 0);
        for (;;) {
          Model u;
          for (size_t i = 0; i < opts.size(); ++i) {
            const Model& m = (*opts[i])[pick[i]];
            u.insert(u.end(), m.begin(), m.end());
          }
          detail::formula_insert(next, std::move(u));
          size_t i = 0;
          while (i < opts.size() && pick[i] + 1 == opts[i]->size()) pick[i++] = 0;
          if (i == opts.size()) break;
          ++pick[i];
        }
      }
      out.delta.push_back(intern(std::move(next)));
    }
  }
  out.n_states = static_cast<uint32_t>(states.size());
  out.accepting.resize(out.n_states);
  for (uint32_t q = 0; q < out.n_states; ++q) {
    bool acc = false;
    for (const Model& m : states[q]) {
      bool all = true;
      for (uint32_t s : m) all = all && b.accepting[s];
      if (all) {
        acc = true;
        break;
      }
    }
    out.accepting[q] = acc;
  }
  return out;
}

inline Dfa winning_language_automaton(const Dfa& d, size_t state_cap = 1000000) {
  return minimize(boolean_to_dfa(build_boolean(d), state_cap));
}

// DFA accepting exactly the given finite word set (trie plus sink).
inline Dfa dfa_from_words(const std::set<Word>& words, int alphabet_size) {
  Dfa d;
  d.alpha = single_track(alphabet_size);
  d.n_states = 1;
  d.initial = 0;
  d.delta.assign(alphabet_size, UINT32_MAX);
  d.accepting.assign(1, 0);
  for (const Word& w : words) {
    uint32_t q = 0;
    for (int a : w) {
      if (a < 0 || a >= alphabet_size) throw DomainError("dfa_from_words: letter out of range");
      if (d.delta[q * alphabet_size + a] == UINT32_MAX) {
        d.delta[q * alphabet_size + a] = d.n_states++;
        d.delta.resize(static_cast<size_t>(d.n_states) * alphabet_size, UINT32_MAX);
        d.accepting.push_back(0);
      }
      q = d.delta[q * alphabet_size + a];
    }
    d.accepting[q] = 1;
  }
  uint32_t sink = d.n_states++;
  d.delta.resize(static_cast<size_t>(d.n_states) * alphabet_size, sink);
  d.accepting.push_back(0);
  for (uint32_t& t : d.delta)
    if (t == UINT32_MAX) t = sink;
  return d;
}

}  // namespace winshift

#endif
