// winshift: command-line front end for the library.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "winshift/automata_io.hpp"
#include "winshift/formula.hpp"
#include "winshift/reproduce.hpp"

using namespace winshift;

namespace {

// exit codes: 0 ok, 1 check failure, 2 domain error / unknown id,
// 3 resource cap exceeded, 4 malformed input
constexpr int kOk = 0, kCheckFailed = 1, kDomain = 2, kResource = 3, kParse = 4;

Word parse_digits(const std::string& s) {
  Word w;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("digit expected in '" + s + "'");
    w.push_back(c - '0');
  }
  return w;
}

std::string digits_str(const Word& w) {
  std::string s;
  for (int a : w) s += static_cast<char>('0' + a);
  return s;
}

std::vector<Word> read_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<Word> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_digits(line));
  }
  if (out.empty()) throw ParseError("no words in " + path);
  size_t len = out[0].size();
  for (const Word& w : out)
    if (w.size() != len) throw ParseError("words of unequal length in " + path);
  return out;
}

NumerationSystem system_by_name(const std::string& name) {
  if (name == "base2") return NumerationSystem::base(2);
  if (name == "fib") return NumerationSystem::fibonacci();
  if (name == "z") return NumerationSystem::cassaigne_z();
  if (name.rfind("base", 0) == 0) return NumerationSystem::base(std::stoi(name.substr(4)));
  throw DomainError("unknown numeration system: " + name);
}

void emit_dfa(const Dfa& d, const std::string& format, const std::vector<int>* output = nullptr) {
  if (format == "dot")
    write_dot(std::cout, d, output);
  else
    write_dfa(std::cout, d, output);
}

int run(int argc, char** argv) {
  CLI::App app{"winning shifts of automatic words"};
  app.require_subcommand(1);

  // game -------------------------------------------------------------------
  CLI::App* game = app.add_subcommand("game", "finite game oracle");
  game->require_subcommand(1);

  std::string ws_file;
  int ws_alphabet = 0;
  CLI::App* win_set = game->add_subcommand("win-set", "winning set of a finite language");
  win_set->add_option("--file", ws_file, "word list, one word per line")->required();
  win_set->add_option("--alphabet", ws_alphabet, "alphabet size (default: inferred)");

  std::string chk_file, chk_alpha;
  CLI::App* check = game->add_subcommand("check", "is a choice sequence winning?");
  check->add_option("--file", chk_file, "word list")->required();
  check->add_option("alpha", chk_alpha, "choice sequence digits")->required();

  std::string wit_word;
  int wit_sum = 0;
  size_t wit_budget = 128, wit_prefix = 100000;
  CLI::App* witness = game->add_subcommand("witness", "length-lex-least witness of a digit sum");
  witness->add_option("word", wit_word, "word id")->required();
  witness->add_option("--sum", wit_sum, "required digit sum")->required();
  witness->add_option("--budget", wit_budget, "max witness length");
  witness->add_option("--prefix", wit_prefix, "prefix length for factor slices");

  // ans --------------------------------------------------------------------
  CLI::App* ans = app.add_subcommand("ans", "abstract numeration systems");
  ans->require_subcommand(1);
  std::string ans_system = "base2", ans_arg;
  CLI::App* rep = ans->add_subcommand("rep", "representation of an integer");
  rep->add_option("--system", ans_system, "base2|fib|z");
  rep->add_option("n", ans_arg, "integer")->required();
  CLI::App* val = ans->add_subcommand("val", "value of a representation");
  val->add_option("--system", ans_system, "base2|fib|z");
  val->add_option("digits", ans_arg, "digit string")->required();

  // words ------------------------------------------------------------------
  CLI::App* words = app.add_subcommand("words", "automatic words");
  words->require_subcommand(1);
  std::string w_id;
  uint64_t w_n = 0;
  size_t w_prefix = 100000;
  bool w_exact = false;
  CLI::App* letter = words->add_subcommand("letter", "letter at an index");
  letter->add_option("word", w_id, "word id")->required();
  letter->add_option("n", w_n, "index")->required();
  CLI::App* factors = words->add_subcommand("factors", "factors of a given length");
  factors->add_option("word", w_id, "word id")->required();
  factors->add_option("n", w_n, "factor length")->required();
  factors->add_option("--prefix", w_prefix, "prefix length scanned");
  factors->add_flag("--exact", w_exact, "include the structural completion");

  // wreg -------------------------------------------------------------------
  std::string wreg_words, wreg_in, wreg_out = "text";
  CLI::App* wreg = app.add_subcommand("wreg", "winning language of a regular language");
  wreg->add_option("--words", wreg_words, "finite language as a word list");
  wreg->add_option("--in", wreg_in, "DFA in the text format");
  wreg->add_option("--out", wreg_out, "text|dot");

  // pred -------------------------------------------------------------------
  CLI::App* pred = app.add_subcommand("pred", "first-order predicate compiler");
  pred->require_subcommand(1);
  std::string p_word = "thue-morse", p_file, p_out = "text";
  int p_arity = 3, p_dmax = 5;
  CLI::App* compile = pred->add_subcommand("compile", "compile a formula file");
  compile->add_option("file", p_file, "formula file")->required();
  compile->add_option("--word", p_word, "word id the predicate talks about");
  compile->add_option("--out", p_out, "text|dot");
  CLI::App* coding_dim = pred->add_subcommand("coding-dim", "coding dimension of W(X)");
  coding_dim->add_option("word", p_word, "word id")->required();
  coding_dim->add_option("--dmax", p_dmax, "search bound");
  CLI::App* winshift_cmd = pred->add_subcommand("winshift", "abc-encoded winning shift automaton");
  winshift_cmd->add_option("word", p_word, "word id")->required();
  winshift_cmd->add_option("--arity", p_arity, "tuple arity (2..4)");
  winshift_cmd->add_option("--out", p_out, "text|dot");

  // reproduce --------------------------------------------------------------
  std::string claim_id;
  bool all_claims = false;
  CLI::App* repro = app.add_subcommand("reproduce", "re-run a registered claim");
  repro->add_option("claim", claim_id, "claim id");
  repro->add_flag("--all", all_claims, "run every claim");

  CLI11_PARSE(app, argc, argv);

  if (win_set->parsed()) {
    std::vector<Word> lang = read_word_list(ws_file);
    int sigma = ws_alphabet;
    for (const Word& w : lang)
      for (int a : w) sigma = std::max(sigma, a + 1);
    TargetSet x(sigma, std::set<Word>(lang.begin(), lang.end()), lang[0].size());
    for (const ChoiceSequence& a : winning_set(x)) std::cout << digits_str(a) << "\n";
    return kOk;
  }
  if (check->parsed()) {
    std::vector<Word> lang = read_word_list(chk_file);
    int sigma = 0;
    for (const Word& w : lang)
      for (int a : w) sigma = std::max(sigma, a + 1);
    TargetSet x(sigma, std::set<Word>(lang.begin(), lang.end()), lang[0].size());
    if (is_winning(x, parse_digits(chk_alpha))) {
      std::cout << "winning\n";
      return kOk;
    }
    std::cout << "losing\n";
    return kCheckFailed;
  }
  if (witness->parsed()) {
    AutomaticWord w = make_word(wit_word);
    auto a = shortest_sum_witness(w, wit_sum, wit_budget, wit_prefix);
    std::cout << "prefix_len " << wit_prefix << "\n";
    if (!a) {
      std::cout << "none\n";
      return kCheckFailed;
    }
    std::cout << digits_str(*a) << "\n";
    return kOk;
  }
  if (rep->parsed()) {
    NumerationSystem s = system_by_name(ans_system);
    std::cout << s.digits_to_string(s.rep(std::stoull(ans_arg))) << "\n";
    return kOk;
  }
  if (val->parsed()) {
    NumerationSystem s = system_by_name(ans_system);
    std::cout << s.val(s.digits_from_string(ans_arg)) << "\n";
    return kOk;
  }
  if (letter->parsed()) {
    std::cout << make_word(w_id).letter(w_n) << "\n";
    return kOk;
  }
  if (factors->parsed()) {
    AutomaticWord w = make_word(w_id);
    std::set<Word> fs = w_exact ? exact_factor_slice(w, w_n, w_prefix)
                                : factor_set(w, w_n, w_prefix);
    for (const Word& f : fs) std::cout << digits_str(f) << "\n";
    return kOk;
  }
  if (wreg->parsed()) {
    Dfa d;
    if (!wreg_words.empty()) {
      std::vector<Word> lang = read_word_list(wreg_words);
      int sigma = 0;
      for (const Word& w : lang)
        for (int a : w) sigma = std::max(sigma, a + 1);
      d = dfa_from_words(std::set<Word>(lang.begin(), lang.end()), sigma);
    } else if (!wreg_in.empty()) {
      std::ifstream in(wreg_in);
      if (!in) throw ParseError("cannot open " + wreg_in);
      d = read_dfa(in);
    } else {
      throw DomainError("wreg needs --words or --in");
    }
    emit_dfa(winning_language_automaton(d), wreg_out);
    return kOk;
  }
  if (compile->parsed()) {
    std::ifstream in(p_file);
    if (!in) throw ParseError("cannot open " + p_file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    PredicateEngine eng(make_word(p_word));
    PredicateAutomaton p = compile_formula(eng, *parse_formula(text));
    std::cout << "# vars:";
    for (const std::string& v : p.vars) std::cout << " " << v;
    std::cout << "\n";
    emit_dfa(p.dfa, p_out);
    return kOk;
  }
  if (coding_dim->parsed()) {
    PredicateEngine eng(make_word(p_word));
    std::optional<int> d = eng.coding_dimension(p_dmax);
    if (!d) {
      std::cout << "> " << p_dmax << "\n";
      return kCheckFailed;
    }
    std::cout << *d << "\n";
    return kOk;
  }
  if (winshift_cmd->parsed()) {
    PredicateEngine eng(make_word(p_word));
    PredicateAutomaton p = eng.winning_shift(p_arity);
    std::cout << "# vars:";
    for (const std::string& v : p.vars) std::cout << " " << v;
    std::cout << "\n";
    emit_dfa(p.dfa, p_out);
    return kOk;
  }
  if (repro->parsed()) {
    std::vector<const Claim*> selected;
    if (all_claims) {
      for (const Claim& c : claims()) selected.push_back(&c);
    } else {
      const Claim* c = find_claim(claim_id);
      if (!c) throw DomainError("unknown claim id: " + claim_id);
      selected.push_back(c);
    }
    int failures = 0;
    for (const Claim* c : selected) {
      ClaimResult r = c->run();
      std::cout << "criterion " << c->criterion << " [" << c->id << "] " << c->summary << ": "
                << (r.pass ? "PASS" : r.known_discrepancy ? "FAIL (known discrepancy)" : "FAIL")
                << "\n";
      for (const std::string& d : r.details) std::cout << "    " << d << "\n";
      if (!r.pass && !r.known_discrepancy) ++failures;
    }
    return failures ? kCheckFailed : kOk;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}
