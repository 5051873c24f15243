#ifndef WINSHIFT_GAME_HPP
#define WINSHIFT_GAME_HPP

#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "automata.hpp"
#include "words.hpp"

namespace winshift {

// A finite set of equal-length words stored as a trie.  Node 0 is the root;
// nodes at depth n are exactly the words of the set.
class TargetSet {
 public:
  static constexpr uint32_t kNone = UINT32_MAX;

  TargetSet(int alphabet_size, size_t length)
      : alphabet_size_(alphabet_size), length_(length) {
    nodes_.push_back(Node(alphabet_size));
  }

  TargetSet(int alphabet_size, const std::set<Word>& words, size_t length)
      : TargetSet(alphabet_size, length) {
    for (const Word& w : words) insert(w);
  }

  void insert(const Word& w) {
    if (w.size() != length_) throw DomainError("TargetSet: word of wrong length");
    uint32_t q = 0;
    for (int a : w) {
      if (a < 0 || a >= alphabet_size_) throw DomainError("TargetSet: letter out of alphabet");
      uint32_t& c = nodes_[q].child[a];
      if (c == kNone) {
        c = static_cast<uint32_t>(nodes_.size());
        nodes_.push_back(Node(alphabet_size_));
        nodes_.back().parent = q;
        nodes_.back().depth = nodes_[q].depth + 1;
      }
      q = nodes_[q].child[a];
    }
    root_is_word_ = root_is_word_ || length_ == 0;
  }

  // sliding-window construction over a prefix of an infinite word
  static TargetSet factors_of_prefix(const Word& prefix, int alphabet_size, size_t length) {
    TargetSet t(alphabet_size, length);
    if (prefix.size() < length) throw DomainError("prefix shorter than factor length");
    for (size_t i = 0; i + length <= prefix.size(); ++i)
      t.insert(Word(prefix.begin() + i, prefix.begin() + i + length));
    return t;
  }

  int alphabet_size() const { return alphabet_size_; }
  size_t length() const { return length_; }
  bool empty() const { return length_ > 0 ? nodes_.size() == 1 : !root_is_word_; }
  uint32_t child(uint32_t q, int a) const { return nodes_[q].child[a]; }
  uint32_t parent(uint32_t q) const { return nodes_[q].parent; }
  uint32_t depth(uint32_t q) const { return nodes_[q].depth; }
  size_t node_count() const { return nodes_.size(); }

  // ancestor of q at the given shallower depth
  uint32_t ancestor(uint32_t q, uint32_t d) const {
    while (nodes_[q].depth > d) q = nodes_[q].parent;
    return q;
  }

  std::set<Word> words() const {
    std::set<Word> out;
    Word w;
    collect(0, w, out);
    return out;
  }

  size_t size() const { return words().size(); }

 private:
  struct Node {
    std::vector<uint32_t> child;
    uint32_t parent = kNone;
    uint32_t depth = 0;
    explicit Node(int a) : child(a, kNone) {}
  };

  void collect(uint32_t q, Word& w, std::set<Word>& out) const {
    if (w.size() == length_) {
      if (length_ == 0 && !root_is_word_) return;
      out.insert(w);
      return;
    }
    for (int a = 0; a < alphabet_size_; ++a)
      if (nodes_[q].child[a] != kNone) {
        w.push_back(a);
        collect(nodes_[q].child[a], w, out);
        w.pop_back();
      }
  }

  int alphabet_size_;
  size_t length_;
  std::vector<Node> nodes_;
  bool root_is_word_ = false;  // only consulted for length 0
};

using ChoiceSequence = Word;

// Rooted strategy tree: a node at depth j has alpha_j + 1 children with
// distinct letter labels, and every root-to-leaf label word is a target word.
struct StrategyTree {
  struct Node {
    std::vector<std::pair<int, Node>> children;
  };
  Node root;
};

namespace detail {

struct GameMemo {
  std::unordered_map<uint64_t, char> table;  // (depth << 32) | node -> win?
};

inline bool game_win(const TargetSet& x, const ChoiceSequence& alpha, uint32_t q, size_t j,
                     GameMemo& memo) {
  if (j == alpha.size()) return true;
  uint64_t key = (static_cast<uint64_t>(j) << 32) | q;
  auto it = memo.table.find(key);
  if (it != memo.table.end()) return it->second;
  int need = alpha[j] + 1;
  int have = 0;
  for (int a = 0; a < x.alphabet_size() && have < need; ++a) {
    uint32_t c = x.child(q, a);
    if (c != TargetSet::kNone && game_win(x, alpha, c, j + 1, memo)) ++have;
  }
  bool win = have >= need;
  memo.table.emplace(key, win);
  return win;
}

inline StrategyTree::Node build_tree(const TargetSet& x, const ChoiceSequence& alpha, uint32_t q,
                                     size_t j, GameMemo& memo) {
  StrategyTree::Node node;
  if (j == alpha.size()) return node;
  int need = alpha[j] + 1;
  for (int a = 0; a < x.alphabet_size() && static_cast<int>(node.children.size()) < need; ++a) {
    uint32_t c = x.child(q, a);
    if (c != TargetSet::kNone && game_win(x, alpha, c, j + 1, memo))
      node.children.emplace_back(a, build_tree(x, alpha, c, j + 1, memo));
  }
  return node;
}

}  // namespace detail

// A strategy tree iff alpha is in W(X); the memo table is per call.
inline std::optional<StrategyTree> is_winning(const TargetSet& x, const ChoiceSequence& alpha) {
  if (alpha.size() != x.length()) throw DomainError("is_winning: choice sequence length mismatch");
  if (x.empty()) return std::nullopt;
  if (x.length() == 0) return StrategyTree{};
  detail::GameMemo memo;
  if (!detail::game_win(x, alpha, 0, 0, memo)) return std::nullopt;
  return StrategyTree{detail::build_tree(x, alpha, 0, 0, memo)};
}

// Independent replay of a strategy tree against the target set.
inline bool verify_strategy_tree(const TargetSet& x, const ChoiceSequence& alpha,
                                 const StrategyTree& tree) {
  struct Check {
    const TargetSet& x;
    const ChoiceSequence& alpha;
    bool walk(const StrategyTree::Node& node, uint32_t q, size_t j) {
      if (j == alpha.size()) return node.children.empty();
      if (static_cast<int>(node.children.size()) != alpha[j] + 1) return false;
      std::set<int> labels;
      for (auto& [a, sub] : node.children) {
        if (!labels.insert(a).second) return false;  // repeated letter
        uint32_t c = x.child(q, a);
        if (c == TargetSet::kNone) return false;
        if (!walk(sub, c, j + 1)) return false;
      }
      return true;
    }
  };
  if (alpha.size() != x.length()) return false;
  return Check{x, alpha}.walk(tree.root, 0, 0);
}

inline std::set<ChoiceSequence> winning_set(const TargetSet& x) {
  std::set<ChoiceSequence> out;
  size_t n = x.length();
  if (x.empty()) return out;
  if (n == 0) {
    out.insert(ChoiceSequence{});
    return out;
  }
  ChoiceSequence alpha(n, 0);
  for (;;) {
    if (is_winning(x, alpha)) out.insert(alpha);
    // odometer over {0..|A|-1}^n
    size_t i = n;
    while (i > 0 && alpha[i - 1] == x.alphabet_size() - 1) alpha[--i] = 0;
    if (i == 0) break;
    ++alpha[i - 1];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bounded-sum search.  The state of a partial strategy tree is the set of
// trie nodes at its leaves; a choice digit t makes every leaf branch into
// t + 1 children.  States are canonical sorted node sets, and only minimal
// sets are kept per layer (a subset can do anything its superset can).

namespace detail {

using NodeSet = std::vector<uint32_t>;

struct NodeSetHash {
  size_t operator()(const NodeSet& s) const {
    size_t h = 1469598103934665603ull;
    for (uint32_t x : s) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

// all successor node sets when every node advances by one letter and the
// choice digit is t (each node contributes a (t+1)-subset of its children)
inline void successor_sets(const TargetSet& x, const NodeSet& s, int t,
                           std::vector<NodeSet>& out) {
  std::vector<std::vector<NodeSet>> options;  // per node: possible child groups
  for (uint32_t q : s) {
    std::vector<uint32_t> kids;
    for (int a = 0; a < x.alphabet_size(); ++a)
      if (x.child(q, a) != TargetSet::kNone) kids.push_back(x.child(q, a));
    if (static_cast<int>(kids.size()) < t + 1) return;  // cannot branch enough
    std::vector<NodeSet> groups;
    // all (t+1)-subsets of kids
    std::vector<int> idx(t + 1);
    for (int i = 0; i <= t; ++i) idx[i] = i;
    for (;;) {
      NodeSet g;
      for (int i : idx) g.push_back(kids[i]);
      groups.push_back(std::move(g));
      int i = t;
      while (i >= 0 && idx[i] == static_cast<int>(kids.size()) - (t + 1 - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j <= t; ++j) idx[j] = idx[j - 1] + 1;
    }
    options.push_back(std::move(groups));
  }
  // cartesian product of per-node groups
  std::vector<size_t> pick(options.size(), 0);
  for (;;) {
    NodeSet s2;
    for (size_t i = 0; i < options.size(); ++i)
      s2.insert(s2.end(), options[i][pick[i]].begin(), options[i][pick[i]].end());
    std::sort(s2.begin(), s2.end());
    s2.erase(std::unique(s2.begin(), s2.end()), s2.end());
    out.push_back(std::move(s2));
    size_t i = 0;
    while (i < options.size() && pick[i] + 1 == options[i].size()) pick[i++] = 0;
    if (i == options.size()) break;
    ++pick[i];
  }
}

inline bool subset_of(const NodeSet& a, const NodeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// keep only minimal sets
inline void antichain_insert(std::vector<NodeSet>& chain, NodeSet s) {
  for (const NodeSet& t : chain)
    if (subset_of(t, s)) return;
  chain.erase(std::remove_if(chain.begin(), chain.end(),
                             [&](const NodeSet& t) { return subset_of(s, t); }),
              chain.end());
  chain.push_back(std::move(s));
}

}  // namespace detail

// All winning choice sequences of length n with digit sum <= max_sum,
// without enumerating the full |A|^n space: a DFS over prefixes carrying the
// antichain of reachable leaf sets.
inline std::set<ChoiceSequence> winning_slice_bounded(const TargetSet& x, int max_sum) {
  std::set<ChoiceSequence> out;
  if (x.empty()) return out;
  size_t n = x.length();
  if (n == 0) {
    out.insert(ChoiceSequence{});
    return out;
  }
  struct Dfs {
    const TargetSet& x;
    int max_sum;
    size_t n;
    std::set<ChoiceSequence>& out;
    ChoiceSequence alpha;
    void run(const std::vector<detail::NodeSet>& family, int sum) {
      if (alpha.size() == n) {
        out.insert(alpha);
        return;
      }
      for (int t = 0; t < x.alphabet_size() && sum + t <= max_sum; ++t) {
        std::vector<detail::NodeSet> next;
        for (const detail::NodeSet& s : family) {
          std::vector<detail::NodeSet> succ;
          detail::successor_sets(x, s, t, succ);
          for (auto& s2 : succ) detail::antichain_insert(next, std::move(s2));
        }
        if (next.empty()) continue;
        alpha.push_back(t);
        run(next, sum + t);
        alpha.pop_back();
      }
    }
  };
  Dfs dfs{x, max_sum, n, out, {}};
  dfs.run({{0}}, 0);
  return out;
}

// Maximum digit sum over the winning set (number of branchings of the best
// strategy tree).  Levelwise over the digit sum: W is hereditary, so every
// sum-k winner is a one-step increment of a sum-(k-1) winner with all of its
// decrements winning.  Candidates surviving that filter are replayed through
// is_winning.  (A reachable-node-set memo was tried first and saturates
// memory already at slice length ~32.)
inline int max_branchings(const TargetSet& x) {
  if (x.length() == 0 || x.empty()) return 0;
  size_t n = x.length();
  std::set<ChoiceSequence> level = {ChoiceSequence(n, 0)};  // sum 0 always wins
  int best = 0;
  for (;;) {
    std::set<ChoiceSequence> cand;
    for (const ChoiceSequence& a : level)
      for (size_t i = 0; i < n; ++i)
        if (a[i] + 1 < x.alphabet_size()) {
          ChoiceSequence b = a;
          ++b[i];
          cand.insert(std::move(b));
        }
    std::set<ChoiceSequence> next;
    for (const ChoiceSequence& b : cand) {
      bool ok = true;
      for (size_t i = 0; ok && i < n; ++i)
        if (b[i] > 0) {
          ChoiceSequence c = b;
          --c[i];
          ok = level.count(c) > 0;
        }
      if (ok && is_winning(x, b)) next.insert(b);
    }
    if (next.empty()) return best;
    ++best;
    level = std::move(next);
  }
}

namespace detail {

// Over a binary alphabet a branching round offers both children, so branch
// nodes are exactly the right-special nodes of the trie.  Distinct nodes at
// one depth have disjoint descendant cones, so the state of a strategy tree
// is fully described by the set V of its latest branch nodes: the cross
// section is children(V), and a later branch at depth q picks, for each
// child u, one right-special descendant of u at depth q (a transversal).
struct WitnessSearch {
  const TargetSet& trie;
  int k;
  size_t budget;
  std::vector<std::vector<uint32_t>> special;  // right-special nodes per depth

  WitnessSearch(const TargetSet& t, int k_) : trie(t), k(k_), budget(t.length()) {
    special.resize(budget);
    for (uint32_t q = 0; q < trie.node_count(); ++q) {
      uint32_t d = trie.depth(q);
      if (d < budget && trie.child(q, 0) != TargetSet::kNone &&
          trie.child(q, 1) != TargetSet::kNone)
        special[d].push_back(q);
    }
  }

  // cross section after a branch at set V (i = 0 encodes "before any branch")
  NodeSet cross_section(int i, const NodeSet& v) const {
    if (i == 0) return {0};
    NodeSet s;
    for (uint32_t q : v) {
      s.push_back(trie.child(q, 0));
      s.push_back(trie.child(q, 1));
    }
    return s;
  }

  // all ways to branch next at depth pos: assign to every cross-section node
  // one right-special descendant at depth pos
  std::vector<NodeSet> transversals(int i, const NodeSet& v, size_t pos) const {
    std::vector<NodeSet> out;
    NodeSet s = cross_section(i, v);
    std::vector<std::vector<uint32_t>> options(s.size());
    for (uint32_t b : special[pos]) {
      uint32_t a = trie.ancestor(b, i == 0 ? 0 : trie.depth(v[0]) + 1);
      for (size_t idx = 0; idx < s.size(); ++idx)
        if (s[idx] == a) options[idx].push_back(b);
    }
    for (auto& o : options)
      if (o.empty()) return out;
    std::vector<size_t> pick(s.size(), 0);
    for (;;) {
      NodeSet v2;
      for (size_t idx = 0; idx < s.size(); ++idx) v2.push_back(options[idx][pick[idx]]);
      std::sort(v2.begin(), v2.end());
      out.push_back(std::move(v2));
      size_t idx = 0;
      while (idx < s.size() && pick[idx] + 1 == options[idx].size()) pick[idx++] = 0;
      if (idx == s.size()) break;
      ++pick[idx];
    }
    return out;
  }

  // can the remaining ones be placed at positions in [j, n)?
  bool feasible(int i, const NodeSet& v, size_t j, size_t n,
                std::map<std::tuple<int, NodeSet, size_t>, bool>& memo) const {
    if (i == k) return true;
    if (j >= n) return false;
    auto key = std::make_tuple(i, v, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (size_t q = j; q < n && !ok; ++q)
      for (const NodeSet& v2 : transversals(i, v, q))
        if (feasible(i + 1, v2, q + 1, n, memo)) {
          ok = true;
          break;
        }
    memo[key] = ok;
    return ok;
  }
};

}  // namespace detail

namespace detail {

// Fallback engine: exhaustive search over (ones placed, branch set) states.
// Exact for any binary slice trie, exponential in the worst case.
inline std::optional<ChoiceSequence> witness_by_transversal_bfs(const TargetSet& trie, int k) {
  size_t budget = trie.length();
  detail::WitnessSearch search(trie, k);

  // minimal length first: breadth-first over (ones placed, branch set), in
  // increasing order of the latest branch position
  using detail::NodeSet;
  using State = std::pair<int, NodeSet>;
  std::vector<std::set<State>> at(budget);  // states whose latest one is at position q
  size_t found_n = 0;
  for (size_t q = 0; q < budget && !found_n; ++q) {
    std::set<State> fresh;
    for (const NodeSet& v2 : search.transversals(0, {}, q)) fresh.insert({1, v2});
    for (size_t q0 = 0; q0 < q; ++q0)
      for (const auto& [i, v] : at[q0])
        if (i < k)
          for (const NodeSet& v2 : search.transversals(i, v, q)) fresh.insert({i + 1, v2});
    for (const auto& [i, v] : fresh)
      if (i == k) found_n = q + 1;
    at[q] = std::move(fresh);
  }
  if (!found_n) return std::nullopt;
  size_t n = found_n;

  // lexicographically least string of that length: greedy digit choice with a
  // completability check over the surviving (ones placed, branch set) states
  std::map<std::tuple<int, NodeSet, size_t>, bool> memo;
  ChoiceSequence alpha;
  std::set<State> live = {{0, {}}};
  for (size_t j = 0; j < n; ++j) {
    bool zero_ok = false;
    for (const auto& [i, v] : live)
      if (search.feasible(i, v, j + 1, n, memo)) {
        zero_ok = true;
        break;
      }
    if (zero_ok) {
      alpha.push_back(0);
      std::set<State> kept;
      for (const auto& [i, v] : live)
        if (search.feasible(i, v, j + 1, n, memo)) kept.insert({i, v});
      live = std::move(kept);
      continue;
    }
    std::set<State> next;
    for (const auto& [i, v] : live) {
      if (i == k) continue;
      for (const NodeSet& v2 : search.transversals(i, v, j))
        if (search.feasible(i + 1, v2, j + 1, n, memo)) next.insert({i + 1, v2});
    }
    if (next.empty()) throw Error("witness reconstruction lost feasibility");
    alpha.push_back(1);
    live = std::move(next);
  }
  return alpha;
}

// Threshold engine.  Applicable when every branching node of depth <= len-2
// has a branching child ("right special factors extend to the right", the
// paper-style density condition).  Then the set of depths at which a branch
// can next split is upward closed and every subtree is summarized by the
// least such depth; feasibility of a position tuple becomes a max-min
// composition along the tree, and the middle positions can be scanned
// explicitly.  Exact; supports sums up to 4.
class ThresholdWitness {
 public:
  static constexpr int32_t kInf = INT32_MAX / 2;

  explicit ThresholdWitness(const TargetSet& t) : trie(t), budget(t.length()) {
    size_t n_nodes = trie.node_count();
    is_special_.assign(n_nodes, 0);
    specials_by_depth_.resize(budget);
    for (uint32_t q = 0; q < n_nodes; ++q)
      if (trie.depth(q) < budget && trie.child(q, 0) != TargetSet::kNone &&
          trie.child(q, 1) != TargetSet::kNone) {
        is_special_[q] = 1;
        specials_by_depth_[trie.depth(q)].push_back(q);
      }
    // least branching depth in each subtree (node ids grow with depth, so a
    // reverse scan is bottom-up)
    g1_.assign(n_nodes, kInf);
    for (uint32_t q = static_cast<uint32_t>(n_nodes); q-- > 0;) {
      if (is_special_[q]) g1_[q] = static_cast<int32_t>(trie.depth(q));
      for (int a = 0; a < 2; ++a) {
        uint32_t c = trie.child(q, a);
        if (c != TargetSet::kNone) g1_[q] = std::min(g1_[q], g1_[c]);
      }
    }
    closed_ = true;
    for (uint32_t q = 0; q < n_nodes && closed_; ++q)
      if (is_special_[q] && trie.depth(q) + 2 <= budget) {
        uint32_t c0 = trie.child(q, 0), c1 = trie.child(q, 1);
        if (!is_special_[c0] && !is_special_[c1]) closed_ = false;
      }
    mval_.assign(n_nodes, kInf);
    mstamp_.assign(n_nodes, 0);
    pstamp_.assign(n_nodes, 0);
    thr_stamp_.assign(n_nodes, 0);
    thr_store_.assign(n_nodes, kInf);
  }

  bool applicable() const { return closed_; }

  // min feasible last-one position for digit sum k, and the lex-least one
  // positions for a fixed witness length; both require applicable()
  std::optional<ChoiceSequence> solve(int k) {
    if (k > 4) throw UnsupportedFeature("shortest_sum_witness: sums above 4 not supported");
    int32_t best = kInf;
    switch (k) {
      case 1:
        best = g1_[0];
        break;
      case 2:
        for (size_t d = 0; d < budget; ++d)
          for (uint32_t v : specials_by_depth_[d]) best = std::min(best, thr_last(v));
        break;
      case 3:
        for (size_t q2 = 1; q2 + 1 < budget + 1 && static_cast<int32_t>(q2) < best; ++q2) {
          sweep_last(q2);
          for (auto& [u, thr] : level_up()) best = std::min(best, thr);
        }
        break;
      case 4:
        for (size_t q3 = 2; q3 < budget && static_cast<int32_t>(q3) < best; ++q3) {
          sweep_last(q3);
          auto l3 = level_up();
          if (l3.empty()) continue;
          ++thr_epoch_;
          for (auto& [v, thr] : l3) thr_stamp_[v] = thr_epoch_, thr_store_[v] = thr;
          for (size_t q2 = 1; q2 < q3; ++q2) {
            sweep(q2, [&](uint32_t w) {
              return thr_stamp_[w] == thr_epoch_ ? thr_store_[w] : kInf;
            });
            for (auto& [u, thr] : level_up()) best = std::min(best, thr);
          }
        }
        break;
      default:
        return std::nullopt;
    }
    if (best >= kInf) return std::nullopt;
    size_t n = static_cast<size_t>(best) + 1;

    // lex-least: the string of length n preferring 0 at every position, i.e.
    // one positions as late as possible, decided first by q1, then q2, ...
    std::vector<size_t> ones;
    int32_t limit = best;
    if (k == 1) {
      ones = {static_cast<size_t>(best)};
    } else if (k == 2) {
      size_t best_q1 = 0;
      for (size_t d = 0; d < budget; ++d)
        for (uint32_t v : specials_by_depth_[d])
          if (thr_last(v) <= limit) best_q1 = std::max(best_q1, d);
      ones = {best_q1, static_cast<size_t>(best)};
    } else if (k == 3) {
      std::vector<std::vector<char>> feas(budget);  // per q2: feasible q1 depths
      for (size_t q2 = 1; q2 < budget; ++q2) {
        sweep_last(q2);
        for (auto& [u, thr] : level_up())
          if (thr <= limit) {
            if (feas[q2].empty()) feas[q2].assign(budget, 0);
            feas[q2][trie.depth(u)] = 1;
          }
      }
      ones = pick_late(feas, static_cast<size_t>(best));
    } else {
      // per (q2, q3) pair: feasible q1 depths
      std::map<std::pair<size_t, size_t>, std::vector<char>> feas;
      for (size_t q3 = 2; q3 < budget; ++q3) {
        sweep_last(q3);
        auto l3 = level_up();
        if (l3.empty()) continue;
        ++thr_epoch_;
        for (auto& [v, thr] : l3) thr_stamp_[v] = thr_epoch_, thr_store_[v] = thr;
        for (size_t q2 = 1; q2 < q3; ++q2) {
          sweep(q2, [&](uint32_t w) {
            return thr_stamp_[w] == thr_epoch_ ? thr_store_[w] : kInf;
          });
          for (auto& [u, thr] : level_up())
            if (thr <= limit) {
              auto& bits = feas[{q2, q3}];
              if (bits.empty()) bits.assign(budget, 0);
              bits[trie.depth(u)] = 1;
            }
        }
      }
      size_t q1b = 0, q2b = 0, q3b = 0;
      for (auto& [key, bits] : feas)
        for (size_t d = 0; d < budget; ++d)
          if (bits[d]) q1b = std::max(q1b, d);
      for (auto& [key, bits] : feas)
        if (!bits.empty() && bits[q1b]) q2b = std::max(q2b, key.first);
      for (auto& [key, bits] : feas)
        if (key.first == q2b && !bits.empty() && bits[q1b]) q3b = std::max(q3b, key.second);
      ones = {q1b, q2b, q3b, static_cast<size_t>(best)};
    }
    ChoiceSequence alpha(n, 0);
    for (size_t p : ones) alpha[p] = 1;
    return alpha;
  }

 private:
  // min feasible last-branch depth when v is the second-to-last branch node
  int32_t thr_last(uint32_t v) const {
    return std::max(g1_[trie.child(v, 0)], g1_[trie.child(v, 1)]);
  }

  void sweep_last(size_t q) {
    sweep(q, [&](uint32_t w) { return thr_last(w); });
  }

  // propagate per-special values at depth q to ancestor minima; values along
  // a root path stay non-increasing upward, so walks stop early
  template <typename ValFn>
  void sweep(size_t q, ValFn val) {
    touched_.clear();
    ++sweep_epoch_;
    for (uint32_t w : specials_by_depth_[q]) {
      int32_t v = val(w);
      if (v >= kInf) continue;
      uint32_t node = w;
      for (;;) {
        if (mstamp_[node] == sweep_epoch_) {
          if (mval_[node] <= v) break;
          mval_[node] = v;
        } else {
          mstamp_[node] = sweep_epoch_;
          mval_[node] = v;
          touched_.push_back(node);
        }
        if (node == 0) break;
        node = trie.parent(node);
      }
    }
  }

  // specials one level up whose both children carry sweep minima, with the
  // max of the two minima (= least shared position for the level below)
  std::vector<std::pair<uint32_t, int32_t>> level_up() {
    std::vector<std::pair<uint32_t, int32_t>> out;
    ++pair_epoch_;
    for (uint32_t c : touched_) {
      if (c == 0) continue;
      uint32_t p = trie.parent(c);
      if (!is_special_[p] || pstamp_[p] == pair_epoch_) continue;
      pstamp_[p] = pair_epoch_;
      uint32_t c0 = trie.child(p, 0), c1 = trie.child(p, 1);
      if (mstamp_[c0] != sweep_epoch_ || mstamp_[c1] != sweep_epoch_) continue;
      out.emplace_back(p, std::max(mval_[c0], mval_[c1]));
    }
    return out;
  }

  // lex choice for k = 3: maximize q1, then q2
  std::vector<size_t> pick_late(const std::vector<std::vector<char>>& feas, size_t last) {
    size_t q1b = 0, q2b = 0;
    for (size_t q2 = 0; q2 < feas.size(); ++q2)
      for (size_t d = 0; d < feas[q2].size(); ++d)
        if (feas[q2][d]) q1b = std::max(q1b, d);
    for (size_t q2 = 0; q2 < feas.size(); ++q2)
      if (!feas[q2].empty() && feas[q2][q1b]) q2b = std::max(q2b, q2);
    return {q1b, q2b, last};
  }

  const TargetSet& trie;
  size_t budget;
  std::vector<char> is_special_;
  std::vector<std::vector<uint32_t>> specials_by_depth_;
  std::vector<int32_t> g1_;
  std::vector<int32_t> mval_;
  std::vector<uint32_t> mstamp_, pstamp_, thr_stamp_;
  std::vector<int32_t> thr_store_;
  std::vector<uint32_t> touched_;
  uint32_t sweep_epoch_ = 0, pair_epoch_ = 0, thr_epoch_ = 0;
  bool closed_ = false;
};

}  // namespace detail

// Length-lex-least choice sequence with digit sum >= k over the given slice
// (a set of equal-length binary words closed in the sense of a factor slice:
// every proper prefix of a member extends within the set).  The witness of
// length m uses the depth-m cross-section of the slice trie.
inline std::optional<ChoiceSequence> shortest_sum_witness_slice(const std::set<Word>& slice,
                                                                int k, size_t budget) {
  if (k == 0) return ChoiceSequence{};
  for (const Word& w : slice)
    for (int a : w)
      if (a < 0 || a > 1) throw UnsupportedFeature("shortest_sum_witness: binary alphabets only");
  TargetSet trie(2, slice, budget);
  detail::ThresholdWitness engine(trie);
  std::optional<ChoiceSequence> alpha;
  if (engine.applicable())
    alpha = engine.solve(k);
  else
    alpha = detail::witness_by_transversal_bfs(trie, k);
  if (!alpha) return alpha;
  // independent replay: the witness padded to its own length must win the
  // game on the matching cross-section of the slice
  std::set<Word> cross;
  for (const Word& w : slice) cross.insert(Word(w.begin(), w.begin() + alpha->size()));
  TargetSet x(2, cross, alpha->size());
  if (!is_winning(x, *alpha)) throw Error("witness failed oracle replay");
  return alpha;
}

// Witness over factor slices of an automatic word; slices are sliding
// windows of the prefix plus the word's structural completion when one is
// attached (for words whose distant factors never appear in a short prefix).
inline std::optional<ChoiceSequence> shortest_sum_witness(const AutomaticWord& w, int k,
                                                          size_t budget, size_t prefix_len) {
  std::set<Word> slice = exact_factor_slice(w, budget, prefix_len);
  return shortest_sum_witness_slice(slice, k, budget);
}

}  // namespace winshift

#endif
