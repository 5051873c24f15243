#include <set>
#include "doctest.h"
#include "winshift/ans.hpp"

using namespace winshift;

namespace {

const char* kZTable[22] = {
    // rep(1) .. rep(22)
    "1",   "2",   "3",   "10",  "20",  "21",  "22",  "23",  "30",  "100", "200",
    "201", "202", "203", "210", "220", "221", "222", "223", "230", "300", "1000"};

}  // namespace

TEST_CASE("base-2 representations") {
  NumerationSystem b2 = NumerationSystem::base(2);
  CHECK(b2.rep(0) == Word{});
  CHECK(b2.rep(1) == Word{1});
  CHECK(b2.rep(6) == Word{1, 1, 0});
  for (uint64_t n = 0; n < 2000; ++n) CHECK(b2.val(b2.rep(n)) == n);
  CHECK_THROWS_AS(b2.val(Word{0, 1}), DomainError);  // leading zero
}

TEST_CASE("fibonacci representations") {
  NumerationSystem fib = NumerationSystem::fibonacci();
  CHECK(fib.rep(11) == Word{1, 0, 1, 0, 0});
  for (uint64_t n = 0; n < 2000; ++n) {
    Word w = fib.rep(n);
    for (size_t i = 0; i + 1 < w.size(); ++i) CHECK(!(w[i] == 1 && w[i + 1] == 1));
    CHECK(fib.val(w) == n);
  }
}

TEST_CASE("z-system matches the tabulated representations") {
  NumerationSystem z = NumerationSystem::cassaigne_z();
  for (uint64_t n = 1; n <= 22; ++n)
    CHECK(z.digits_to_string(z.rep(n)) == kZTable[n - 1]);
  CHECK(z.val(z.digits_from_string("300")) == 21);
  for (uint64_t n = 0; n < 5000; ++n) CHECK(z.val(z.rep(n)) == n);
}

TEST_CASE("z reps agree between the recursion and language unranking") {
  NumerationSystem z = NumerationSystem::cassaigne_z();
  for (uint64_t n = 0; n < 500; ++n) CHECK(rep_by_unranking(z, n) == z.rep(n));
}

TEST_CASE("language automata accept exactly the representations") {
  for (NumerationSystem s : {NumerationSystem::base(2), NumerationSystem::fibonacci(),
                             NumerationSystem::cassaigne_z()}) {
    Dfa lang = s.language_automaton();
    // radix order: representations come out in nondecreasing length
    const size_t max_len = 6;
    std::set<Word> reps;
    for (uint64_t n = 0;; ++n) {
      Word w = s.rep(n);
      if (w.size() > max_len) break;
      reps.insert(std::move(w));
    }
    auto accepted = enumerate(lang, static_cast<int>(max_len));
    CHECK(std::set<Word>(accepted.begin(), accepted.end()) == reps);
  }
}

TEST_CASE("comparator agrees with integer order") {
  NumerationSystem b2 = NumerationSystem::base(2);
  Dfa cmp = b2.comparator_automaton();
  for (uint64_t x = 0; x <= 40; ++x)
    for (uint64_t y = 0; y <= 40; ++y) {
      PaddedTuple t = pad_tuple({b2.rep(x), b2.rep(y)}, b2.digit_count());
      CHECK(cmp.accepts(tuple_letters(cmp.alpha, t)) == (x <= y));
    }
}

TEST_CASE("adder agrees with integer addition") {
  NumerationSystem b2 = NumerationSystem::base(2);
  Dfa add = b2.adder_automaton();
  for (uint64_t x = 0; x <= 40; ++x)
    for (uint64_t y = 0; y <= 40; ++y)
      for (uint64_t s = 0; s <= 80; ++s) {
        PaddedTuple t = pad_tuple({b2.rep(x), b2.rep(y), b2.rep(s)}, b2.digit_count());
        CHECK(add.accepts(tuple_letters(add.alpha, t)) == (x + y == s));
      }
  CHECK_THROWS_AS(NumerationSystem::fibonacci().adder_automaton(), UnsupportedFeature);
}

TEST_CASE("padded tuples are pad-robust") {
  NumerationSystem b2 = NumerationSystem::base(2);
  Dfa wf = wellformed_automaton(b2, 2);
  PaddedTuple t = pad_tuple({b2.rep(5), b2.rep(9)}, b2.digit_count());
  Word letters = tuple_letters(wf.alpha, t);
  CHECK(wf.accepts(letters));
  // prepending the all-pad column keeps membership
  Word padded = letters;
  padded.insert(padded.begin(), wf.alpha.all_pad_letter());
  CHECK(wf.accepts(padded));
  auto rows = unpad(t);
  CHECK(rows[0] == b2.rep(5));
  CHECK(rows[1] == b2.rep(9));
}
