#include <set>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "winshift/boolean.hpp"
#include "winshift/game.hpp"
#include "winshift/words.hpp"

using namespace winshift;

namespace {

std::set<Word> slice_language(const Dfa& d, size_t n) {
  std::set<Word> out;
  for (const Word& w : enumerate(d, static_cast<int>(n)))
    if (w.size() == n) out.insert(w);
  return out;
}

}  // namespace

TEST_CASE("tau structure on a binary dfa") {
  Dfa d;
  d.alpha = single_track(2);
  d.n_states = 2;
  d.initial = 0;
  d.delta = {0, 1, 1, 0};
  d.accepting = {1, 0};
  BooleanAutomaton b = build_boolean(d);
  CHECK(b.alphabet_size == 2);
  // choice 0: disjunction over singletons -> two minimal models {0} and {1}
  CHECK(b.tau[0 * 2 + 0].size() == 2);
  // choice 1: single conjunction of both successors -> one model {0, 1}
  CHECK(b.tau[0 * 2 + 1].size() == 1);
  CHECK(b.tau[0 * 2 + 1][0] == detail::Model{0, 1});
}

TEST_CASE("winning language of the intro example") {
  Dfa d = dfa_from_words({{0, 0, 0}, {1, 1, 0}, {1, 1, 1}}, 2);
  Dfa w = winning_language_automaton(d);
  std::set<Word> expect = {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK(slice_language(w, 3) == expect);
}

TEST_CASE("degenerate languages") {
  TrackAlphabet alpha = single_track(2);
  CHECK(language_equal(winning_language_automaton(universal_dfa(alpha)),
                       universal_dfa(alpha)));
  CHECK(is_empty(winning_language_automaton(empty_dfa(alpha))));
}

TEST_CASE("thue-morse factor trie matches the game oracle") {
  AutomaticWord tm = make_thue_morse();
  std::set<Word> factors = factor_set(tm, 4, 4096);
  Dfa w = winning_language_automaton(dfa_from_words(factors, 2));
  TargetSet x(2, factors, 4);
  CHECK(slice_language(w, 4) == winning_set(x));
}

TEST_CASE("random dfas against the oracle with hereditarity and cardinality") {
  std::mt19937 rng(2024);
  for (int it = 0; it < 60; ++it) {
    Dfa d = testing::random_dfa(rng, 5, 3);
    Dfa w = winning_language_automaton(d);
    int sigma = d.alpha.sizes[0];
    for (size_t n = 0; n <= 5; ++n) {
      std::set<Word> lang = slice_language(d, n);
      TargetSet x(sigma, lang, n);
      std::set<ChoiceSequence> oracle = winning_set(x);
      std::set<Word> got = slice_language(w, n);
      CHECK(got == oracle);
      CHECK(got.size() == lang.size());  // cardinality preservation
      for (const Word& a : got)          // hereditarity
        for (size_t i = 0; i < a.size(); ++i)
          if (a[i] > 0) {
            Word c = a;
            --c[i];
            CHECK(got.count(c) == 1);
          }
    }
  }
}

TEST_CASE("state cap raises a resource error") {
  AutomaticWord rs = make_rudin_shapiro();
  Dfa d = dfa_from_words(factor_set(rs, 10, 4096), 2);
  CHECK_THROWS_AS(winning_language_automaton(d, 3), ResourceLimit);
}
