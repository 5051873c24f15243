#include <set>
#include "doctest.h"
#include "winshift/formula.hpp"
#include "winshift/predicates.hpp"

using namespace winshift;

namespace {

PredicateEngine& tm_engine() {
  static PredicateEngine eng(make_thue_morse());
  return eng;
}

}  // namespace

TEST_CASE("arithmetic atoms agree with the integers") {
  PredicateEngine& eng = tm_engine();
  PredicateAutomaton le = eng.leq("x", "y");
  PredicateAutomaton lt = eng.less("x", "y");
  PredicateAutomaton eq = eng.eq("x", "y");
  PredicateAutomaton add = eng.plus("x", "y", "z");
  for (uint64_t x = 0; x <= 20; ++x)
    for (uint64_t y = 0; y <= 20; ++y) {
      CHECK(eng.accepts(le, {x, y}) == (x <= y));
      CHECK(eng.accepts(lt, {x, y}) == (x < y));
      CHECK(eng.accepts(eq, {x, y}) == (x == y));
      for (uint64_t z = 0; z <= 40; ++z)
        CHECK(eng.accepts(add, {x, y, z}) == (x + y == z));
    }
  PredicateAutomaton c = eng.eq_const("x", 13);
  PredicateAutomaton g = eng.gt_const("x", 13);
  for (uint64_t x = 0; x <= 40; ++x) {
    CHECK(eng.accepts(c, {x}) == (x == 13));
    CHECK(eng.accepts(g, {x}) == (x > 13));
  }
}

TEST_CASE("word letter atom agrees with the word") {
  PredicateEngine& eng = tm_engine();
  AutomaticWord tm = make_thue_morse();
  PredicateAutomaton p0 = eng.word_is("n", 0);
  PredicateAutomaton p1 = eng.word_is("n", 1);
  for (uint64_t n = 0; n < 1024; ++n) {
    CHECK(eng.accepts(p0, {n}) == (tm.letter(n) == 0));
    CHECK(eng.accepts(p1, {n}) == (tm.letter(n) == 1));
  }
}

TEST_CASE("quantifiers and connectives") {
  PredicateEngine& eng = tm_engine();
  // Ex x = y is the whole domain of y
  PredicateAutomaton p = eng.exists(eng.eq("x", "y"), "x");
  for (uint64_t y = 0; y <= 32; ++y) CHECK(eng.accepts(p, {y}));
  // Ax x <= y holds for no y; Ax y <= x likewise; Ex x <= y always
  CHECK(!eng.satisfiable(eng.forall(eng.leq("x", "y"), "x")));
  CHECK(eng.satisfiable(eng.exists(eng.leq("x", "y"), "x")));
  // forall is the dual of exists
  PredicateAutomaton lt = eng.less("x", "y");
  PredicateAutomaton dual = eng.neg(eng.exists(eng.neg(lt), "x"));
  PredicateAutomaton direct = eng.forall(lt, "x");
  CHECK(language_equal(dual.dfa, direct.dfa));
}

TEST_CASE("predicate automata are pad-robust") {
  PredicateEngine& eng = tm_engine();
  for (const PredicateAutomaton* p :
       {&eng.factor_eq(), &eng.is_rs()}) {
    int pad = p->dfa.alpha.all_pad_letter();
    // shortest accepted word stays accepted under a leading all-pad column
    auto w = shortest_accepted(p->dfa);
    REQUIRE(w.has_value());
    Word v = *w;
    v.insert(v.begin(), pad);
    CHECK(p->dfa.accepts(v));
  }
}

TEST_CASE("factor equality against direct comparison") {
  PredicateEngine& eng = tm_engine();
  AutomaticWord tm = make_thue_morse();
  Word pre = tm.prefix(128);
  const PredicateAutomaton& fe = eng.factor_eq();  // vars k, m, n
  for (uint64_t k = 0; k <= 6; ++k)
    for (uint64_t m = 0; m <= 24; ++m)
      for (uint64_t n = 0; n <= 24; ++n) {
        bool same = true;
        for (uint64_t i = 0; i < k; ++i) same = same && pre[m + i] == pre[n + i];
        CHECK(eng.accepts(fe, {k, m, n}) == same);
      }
}

TEST_CASE("right special predicate against the words module") {
  PredicateEngine& eng = tm_engine();
  AutomaticWord tm = make_thue_morse();
  Word pre = tm.prefix(4096);
  const PredicateAutomaton& rs = eng.is_rs();  // vars k, n
  for (uint64_t k = 1; k <= 8; ++k) {
    std::set<Word> special = right_special(tm, k, 4096);
    for (uint64_t n = 0; n <= 64; ++n) {
      Word f(pre.begin() + n, pre.begin() + n + k);
      CHECK(eng.accepts(rs, {k, n}) == (special.count(f) == 1));
    }
  }
}

TEST_CASE("coding dimension of period-doubling") {
  PredicateEngine eng(make_period_doubling());
  CHECK(eng.coding_dimension(4) == 2);
  CHECK(!eng.satisfiable(eng.t_chain(3)));
  CHECK(eng.satisfiable(eng.t_chain(2)));
}

TEST_CASE("winning shift spot checks on thue-morse") {
  PredicateEngine& eng = tm_engine();
  PredicateAutomaton ws = eng.winning_shift(3);
  CHECK(eng.accepts(ws, {0, 0, 0}));
  CHECK(eng.accepts(ws, {1, 5, 13}));
  CHECK(eng.accepts(ws, {0, 3, 11}));
  CHECK(!eng.accepts(ws, {2, 5, 13}));
  CHECK(!eng.accepts(ws, {0, 3, 12}));
  // arity below the coding dimension is refused with a witness
  CHECK_THROWS_AS(eng.winning_shift(2), DomainError);
}

TEST_CASE("formula parser and compiler") {
  PredicateEngine& eng = tm_engine();
  // the published factorEq formula compiles to the staged automaton
  auto f = parse_formula("Ai (i < k) => T[m+i] = T[n+i]");
  CHECK(free_vars(*f) == std::set<std::string>{"k", "m", "n"});
  PredicateAutomaton p = compile_formula(eng, *f);
  CHECK(language_equal(p.dfa, eng.factor_eq().dfa));

  // mixed arithmetic, word letters and connectives
  auto g = parse_formula("(x + 3 <= y | T[x] = 1) & ~(x = y)");
  PredicateAutomaton q = compile_formula(eng, *g);
  AutomaticWord tm = make_thue_morse();
  for (uint64_t x = 0; x <= 24; ++x)
    for (uint64_t y = 0; y <= 24; ++y) {
      bool expect = (x + 3 <= y || tm.letter(x) == 1) && x != y;
      CHECK(eng.accepts(q, {x, y}) == expect);
    }

  CHECK_THROWS_AS(parse_formula("x <"), ParseError);
  CHECK_THROWS_AS(parse_formula("x = y)"), ParseError);
}
