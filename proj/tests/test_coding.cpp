#include <set>
#include "doctest.h"
#include "winshift/coding.hpp"
#include "winshift/game.hpp"
#include "winshift/words.hpp"

using namespace winshift;

TEST_CASE("finite support sequences") {
  FiniteSupportSeq x = FiniteSupportSeq::from_word({0, 2, 0, 0, 1});
  CHECK(x.at(1) == 2);
  CHECK(x.at(4) == 1);
  CHECK(x.at(0) == 0);
  CHECK(x.sum() == 3);
  CHECK(erase_zeros(x) == Word{2, 1});
  CHECK(support(x) == std::vector<uint64_t>{1, 4});
  CHECK_THROWS_AS(FiniteSupportSeq({{3, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(FiniteSupportSeq({{0, 0}}), DomainError);
}

TEST_CASE("nu coding round-trips") {
  FiniteSupportSeq x({{1, 2}, {4, 1}});
  NuVector v = nu_encode(x);
  CHECK(v == NuVector{1, 1, 4});
  CHECK(nu_decode(v) == x);
  CHECK(nu_encode(FiniteSupportSeq{}).empty());
  CHECK_THROWS_AS(nu_decode(NuVector{3, 1}), DomainError);
}

TEST_CASE("abc coding round-trips") {
  FiniteSupportSeq y = FiniteSupportSeq::from_word({1, 0, 0, 0, 1});
  CHECK(abc_encode(y, 3) == std::vector<uint64_t>{0, 1, 5});
  CHECK(abc_encode(y, 4) == std::vector<uint64_t>{0, 0, 1, 5});
  CHECK(abc_decode({0, 1, 5}) == y);
  CHECK(abc_encode(FiniteSupportSeq{}, 3) == std::vector<uint64_t>{0, 0, 0});
  CHECK_THROWS_AS(abc_encode(FiniteSupportSeq({{0, 2}}), 3), DomainError);
  CHECK_THROWS_AS(abc_encode(FiniteSupportSeq({{0, 1}, {1, 1}, {2, 1}, {3, 1}}), 3),
                  DomainError);
  CHECK_THROWS_AS(abc_decode({1, 0, 5}), DomainError);
  CHECK_THROWS_AS(abc_decode({2, 2, 5}), DomainError);
  // exhaustive round trip over small tuples
  for (uint64_t a = 0; a <= 6; ++a)
    for (uint64_t b = 0; b <= 6; ++b)
      for (uint64_t c = 0; c <= 6; ++c) {
        bool seen = false, valid = true;
        for (uint64_t p : {a, b, c}) {
          if (p == 0) valid = valid && !seen;
          else seen = true;
        }
        valid = valid && (a == 0 || a < b) && (b == 0 || b < c);
        if (!valid) continue;
        CHECK(abc_encode(abc_decode({a, b, c}), 3) == std::vector<uint64_t>{a, b, c});
      }
}

TEST_CASE("pv extraction and the lemma consistency on thue-morse slices") {
  AutomaticWord tm = make_thue_morse();
  TargetSet x = TargetSet::factors_of_prefix(tm.prefix(512), 2, 10);
  for (int k = 0; k <= 3; ++k) {
    std::set<ChoiceSequence> slice = winning_slice_bounded(x, k);
    // keep only digit sum exactly k
    std::set<Word> exact;
    for (const ChoiceSequence& a : slice) {
      int s = 0;
      for (int t : a) s += t;
      if (s == k) exact.insert(a);
    }
    // union over shapes v of the P_v tuples must reconstruct {nu(y)}
    std::set<NuVector> direct, viaPv;
    for (const Word& y : exact) direct.insert(nu_encode(FiniteSupportSeq::from_word(y)));
    std::set<Word> shapes;
    for (const Word& y : exact) shapes.insert(erase_zeros(FiniteSupportSeq::from_word(y)));
    for (const Word& v : shapes)
      for (const std::vector<uint64_t>& sup : pv_extract(exact, v)) {
        FiniteSupportSeq s;
        for (size_t i = 0; i < sup.size(); ++i)
          s.entries.emplace_back(sup[i], v[i]);
        viaPv.insert(nu_encode(s));
      }
    CHECK(direct == viaPv);
  }
}

TEST_CASE("pv of empty shape") {
  std::set<Word> ws = {{0, 0, 0}, {0, 1, 0}};
  auto p = pv_extract(ws, {});
  CHECK(p == std::set<std::vector<uint64_t>>{{}});
  auto q = pv_extract(ws, {2});
  CHECK(q.empty());
}
