#include <set>
#include <random>

#include "doctest.h"
#include "winshift/game.hpp"
#include "winshift/words.hpp"

using namespace winshift;

namespace {

std::set<Word> random_language(std::mt19937& rng, size_t len, size_t count) {
  std::set<Word> out;
  std::uniform_int_distribution<int> bit(0, 1);
  while (out.size() < count) {
    Word w(len);
    for (auto& a : w) a = bit(rng);
    out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("intro example") {
  TargetSet x(2, {{0, 0, 0}, {1, 1, 0}, {1, 1, 1}}, 3);
  std::set<ChoiceSequence> expect = {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK(winning_set(x) == expect);
  CHECK(!is_winning(x, {1, 0, 1}));
}

TEST_CASE("thue-morse length-4 example with strategy tree") {
  AutomaticWord tm = make_thue_morse();
  TargetSet x = TargetSet::factors_of_prefix(tm.prefix(64), 2, 4);
  std::set<ChoiceSequence> expect = {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0},
                                     {0, 1, 0, 1}, {1, 0, 0, 0}, {1, 0, 0, 1}, {1, 0, 1, 0},
                                     {1, 1, 0, 0}, {1, 1, 0, 1}};
  CHECK(winning_set(x) == expect);

  ChoiceSequence alpha = {1, 1, 0, 1};
  auto tree = is_winning(x, alpha);
  REQUIRE(tree.has_value());
  CHECK(verify_strategy_tree(x, alpha, *tree));
  // branchings 2, 2, 1, 2 as in the depicted strategy
  CHECK(tree->root.children.size() == 2);
  for (auto& [a1, n1] : tree->root.children) {
    CHECK(n1.children.size() == 2);
    for (auto& [a2, n2] : n1.children) {
      CHECK(n2.children.size() == 1);
      for (auto& [a3, n3] : n2.children) CHECK(n3.children.size() == 2);
    }
  }
}

TEST_CASE("winning sets are hereditary and cardinality preserving") {
  std::mt19937 rng(5);
  for (int it = 0; it < 20; ++it) {
    std::set<Word> lang = random_language(rng, 4, 1 + rng() % 10);
    TargetSet x(2, lang, 4);
    std::set<ChoiceSequence> w = winning_set(x);
    CHECK(w.size() == lang.size());
    for (const ChoiceSequence& a : w) {
      ChoiceSequence down = a;
      for (size_t i = 0; i < down.size(); ++i) {
        if (down[i] == 0) continue;
        ChoiceSequence c = down;
        c[i] = 0;
        CHECK(w.count(c) == 1);
      }
    }
  }
}

TEST_CASE("monotone languages give monotone winning sets") {
  std::mt19937 rng(9);
  for (int it = 0; it < 15; ++it) {
    std::set<Word> big = random_language(rng, 4, 4 + rng() % 8);
    std::set<Word> small;
    for (const Word& w : big)
      if (rng() % 2) small.insert(w);
    if (small.empty()) small.insert(*big.begin());
    std::set<ChoiceSequence> ws = winning_set(TargetSet(2, small, 4));
    std::set<ChoiceSequence> wb = winning_set(TargetSet(2, big, 4));
    for (const ChoiceSequence& a : ws) CHECK(wb.count(a) == 1);
  }
}

TEST_CASE("winning_slice_bounded agrees with the full winning set") {
  AutomaticWord tm = make_thue_morse();
  for (size_t n = 1; n <= 8; ++n) {
    TargetSet x = TargetSet::factors_of_prefix(tm.prefix(256), 2, n);
    std::set<ChoiceSequence> full = winning_set(x);
    for (int k = 0; k <= 3; ++k) {
      std::set<ChoiceSequence> bounded = winning_slice_bounded(x, k);
      std::set<ChoiceSequence> expect;
      for (const ChoiceSequence& a : full) {
        int s = 0;
        for (int t : a) s += t;
        if (s <= k) expect.insert(a);
      }
      CHECK(bounded == expect);
    }
  }
}

TEST_CASE("max_branchings on small slices") {
  AutomaticWord tm = make_thue_morse();
  TargetSet x4 = TargetSet::factors_of_prefix(tm.prefix(256), 2, 4);
  CHECK(max_branchings(x4) == 3);  // 1101 is winning
  TargetSet x16 = TargetSet::factors_of_prefix(tm.prefix(256), 2, 16);
  CHECK(max_branchings(x16) == 3);
  TargetSet x1 = TargetSet::factors_of_prefix(tm.prefix(256), 2, 1);
  CHECK(max_branchings(x1) == 1);
}

TEST_CASE("shortest sum witnesses of the classic words") {
  struct Row {
    const char* id;
    int k;
    std::optional<ChoiceSequence> expect;
  };
  const Row rows[] = {
      {"thue-morse", 2, ChoiceSequence{1, 1}},
      {"thue-morse", 3, ChoiceSequence{1, 1, 0, 1}},
      {"period-doubling", 2, ChoiceSequence{1, 0, 1}},
      {"period-doubling", 3, std::nullopt},
      {"paperfolding", 3, ChoiceSequence{1, 1, 1}},
      {"rudin-shapiro", 3, ChoiceSequence{1, 1, 1}},
  };
  for (const Row& r : rows) {
    AutomaticWord w = make_word(r.id);
    CHECK(shortest_sum_witness(w, r.k, 128, 4096) == r.expect);
  }
}
