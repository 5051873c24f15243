#ifndef WINSHIFT_AUTOMATA_HPP
#define WINSHIFT_AUTOMATA_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace winshift {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : Error {
  using Error::Error;
};
struct UnsupportedFeature : Error {
  using Error::Error;
};
struct ResourceLimit : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Words and choice sequences are sequences of small nonnegative ints.
using Word = std::vector<int>;

// Alphabet of a (possibly multi-track) automaton.  Track t carries symbols
// 0..sizes[t]-1; when has_pad is set, the value sizes[t] encodes the pad
// symbol '#' on that track.  A letter of the automaton is one column of the
// tuple word, packed into a single int in mixed radix.
struct TrackAlphabet {
  std::vector<int> sizes;
  bool has_pad = false;

  int tracks() const { return static_cast<int>(sizes.size()); }
  int radix(int t) const { return sizes[t] + (has_pad ? 1 : 0); }
  int pad_value(int t) const { return sizes[t]; }

  int letter_count() const {
    int n = 1;
    for (int t = 0; t < tracks(); ++t) n *= radix(t);
    return n;
  }

  int pack(const std::vector<int>& column) const {
    int a = 0;
    for (int t = 0; t < tracks(); ++t) a = a * radix(t) + column[t];
    return a;
  }

  std::vector<int> unpack(int letter) const {
    std::vector<int> col(tracks());
    for (int t = tracks() - 1; t >= 0; --t) {
      col[t] = letter % radix(t);
      letter /= radix(t);
    }
    return col;
  }

  int all_pad_letter() const {
    std::vector<int> col(tracks());
    for (int t = 0; t < tracks(); ++t) col[t] = pad_value(t);
    return pack(col);
  }

  bool operator==(const TrackAlphabet& o) const {
    return sizes == o.sizes && has_pad == o.has_pad;
  }
};

inline TrackAlphabet single_track(int size) { return TrackAlphabet{{size}, false}; }

// Deterministic automaton with a total transition table.
struct Dfa {
  TrackAlphabet alpha;
  uint32_t n_states = 0;
  uint32_t initial = 0;
  std::vector<uint32_t> delta;     // n_states * letter_count()
  std::vector<char> accepting;     // n_states

  uint32_t step(uint32_t q, int a) const { return delta[q * alpha.letter_count() + a]; }

  uint32_t run(const Word& w) const {
    uint32_t q = initial;
    for (int a : w) {
      if (a < 0 || a >= alpha.letter_count()) throw DomainError("symbol out of alphabet");
      q = step(q, a);
    }
    return q;
  }

  bool accepts(const Word& w) const { return accepting[run(w)] != 0; }
};

struct Nfa {
  TrackAlphabet alpha;
  uint32_t n_states = 0;
  std::vector<uint32_t> initials;
  std::vector<std::vector<uint32_t>> delta;  // n_states * letter_count()
  std::vector<char> accepting;

  const std::vector<uint32_t>& step(uint32_t q, int a) const {
    return delta[q * alpha.letter_count() + a];
  }
};

// DFA skeleton plus a per-state output letter; the accepting set is unused.
struct OutputAutomaton {
  Dfa skeleton;
  std::vector<int> output;
};

inline int run_output(const OutputAutomaton& a, const Word& w) {
  return a.output[a.skeleton.run(w)];
}

inline Nfa as_nfa(const Dfa& d) {
  Nfa n;
  n.alpha = d.alpha;
  n.n_states = d.n_states;
  n.initials = {d.initial};
  n.accepting.assign(d.accepting.begin(), d.accepting.end());
  int A = d.alpha.letter_count();
  n.delta.resize(static_cast<size_t>(d.n_states) * A);
  for (uint32_t q = 0; q < d.n_states; ++q)
    for (int a = 0; a < A; ++a) n.delta[q * A + a] = {d.step(q, a)};
  return n;
}

// Subset construction.  State sets are kept as sorted vectors and
// hash-consed; the empty set becomes an explicit sink so the result is total.
inline Dfa determinize(const Nfa& n, size_t state_cap = 1u << 22) {
  int A = n.alpha.letter_count();
  std::map<std::vector<uint32_t>, uint32_t> ids;
  std::vector<std::vector<uint32_t>> sets;
  auto intern = [&](std::vector<uint32_t> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(sets.size());
    if (id >= state_cap) throw ResourceLimit("determinize: state cap exceeded");
    ids.emplace(s, id);
    sets.push_back(std::move(s));
    return id;
  };

  Dfa d;
  d.alpha = n.alpha;
  d.initial = intern(n.initials);
  for (uint32_t cur = 0; cur < sets.size(); ++cur) {
    for (int a = 0; a < A; ++a) {
      std::vector<uint32_t> next;
      for (uint32_t q : sets[cur])
        for (uint32_t r : n.step(q, a)) next.push_back(r);
      uint32_t id = intern(std::move(next));
      d.delta.push_back(id);
    }
  }
  d.n_states = static_cast<uint32_t>(sets.size());
  d.accepting.assign(d.n_states, 0);
  for (uint32_t s = 0; s < d.n_states; ++s)
    for (uint32_t q : sets[s])
      if (n.accepting[q]) d.accepting[s] = 1;
  return d;
}

namespace detail {

inline std::vector<uint32_t> reachable_states(const Dfa& d) {
  std::vector<char> seen(d.n_states, 0);
  std::vector<uint32_t> order;
  order.push_back(d.initial);
  seen[d.initial] = 1;
  int A = d.alpha.letter_count();
  for (size_t i = 0; i < order.size(); ++i)
    for (int a = 0; a < A; ++a) {
      uint32_t r = d.step(order[i], a);
      if (!seen[r]) {
        seen[r] = 1;
        order.push_back(r);
      }
    }
  return order;
}

}  // namespace detail

// Moore partition refinement plus BFS renumbering.  Equal languages yield
// structurally identical automata (same alphabet assumed).
inline Dfa minimize(const Dfa& d) {
  int A = d.alpha.letter_count();
  std::vector<uint32_t> order = detail::reachable_states(d);
  uint32_t n = static_cast<uint32_t>(order.size());
  std::vector<uint32_t> dense(d.n_states, 0);
  for (uint32_t i = 0; i < n; ++i) dense[order[i]] = i;

  // class of each dense state, initially by acceptance
  std::vector<uint32_t> cls(n);
  for (uint32_t i = 0; i < n; ++i) cls[i] = d.accepting[order[i]] ? 1 : 0;
  uint32_t n_cls = 2;

  std::vector<uint32_t> tr(static_cast<size_t>(n) * A);
  for (uint32_t i = 0; i < n; ++i)
    for (int a = 0; a < A; ++a) tr[i * A + a] = dense[d.step(order[i], a)];

  for (;;) {
    std::map<std::vector<uint32_t>, uint32_t> sig_id;
    std::vector<uint32_t> next_cls(n);
    std::vector<uint32_t> sig(A + 1);
    for (uint32_t i = 0; i < n; ++i) {
      sig[0] = cls[i];
      for (int a = 0; a < A; ++a) sig[a + 1] = cls[tr[i * A + a]];
      auto it = sig_id.find(sig);
      if (it == sig_id.end())
        it = sig_id.emplace(sig, static_cast<uint32_t>(sig_id.size())).first;
      next_cls[i] = it->second;
    }
    uint32_t m = static_cast<uint32_t>(sig_id.size());
    cls.swap(next_cls);
    if (m == n_cls) break;
    n_cls = m;
  }

  // canonical numbering: BFS from the initial class, letters in order
  std::vector<uint32_t> cls_repr(n_cls, UINT32_MAX);
  for (uint32_t i = 0; i < n; ++i)
    if (cls_repr[cls[i]] == UINT32_MAX) cls_repr[cls[i]] = i;
  std::vector<uint32_t> renum(n_cls, UINT32_MAX);
  std::vector<uint32_t> bfs;
  renum[cls[0]] = 0;  // dense 0 is the initial state
  bfs.push_back(cls[0]);
  for (size_t i = 0; i < bfs.size(); ++i) {
    uint32_t c = bfs[i];
    for (int a = 0; a < A; ++a) {
      uint32_t t = cls[tr[cls_repr[c] * A + a]];
      if (renum[t] == UINT32_MAX) {
        renum[t] = static_cast<uint32_t>(bfs.size());
        bfs.push_back(t);
      }
    }
  }

  Dfa out;
  out.alpha = d.alpha;
  out.n_states = static_cast<uint32_t>(bfs.size());
  out.initial = 0;
  out.delta.resize(static_cast<size_t>(out.n_states) * A);
  out.accepting.assign(out.n_states, 0);
  for (uint32_t c = 0; c < n_cls; ++c) {
    if (renum[c] == UINT32_MAX) continue;  // class unreachable after merging
    uint32_t i = cls_repr[c];
    for (int a = 0; a < A; ++a) out.delta[renum[c] * A + a] = renum[cls[tr[i * A + a]]];
    out.accepting[renum[c]] = d.accepting[order[i]];
  }
  return out;
}

inline Dfa complement(const Dfa& d) {
  Dfa out = d;
  for (auto& f : out.accepting) f = !f;
  return out;
}

enum class ProductMode { And, Or };

inline Dfa product(const Dfa& a, const Dfa& b, ProductMode mode,
                   size_t state_cap = 1u << 22) {
  if (!(a.alpha == b.alpha)) throw DomainError("product: alphabet mismatch");
  int A = a.alpha.letter_count();
  std::unordered_map<uint64_t, uint32_t> ids;
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  auto intern = [&](uint32_t p, uint32_t q) {
    uint64_t key = (static_cast<uint64_t>(p) << 32) | q;
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(pairs.size());
    if (id >= state_cap) throw ResourceLimit("product: state cap exceeded");
    ids.emplace(key, id);
    pairs.emplace_back(p, q);
    return id;
  };

  Dfa d;
  d.alpha = a.alpha;
  d.initial = intern(a.initial, b.initial);
  for (uint32_t cur = 0; cur < pairs.size(); ++cur) {
    auto [p, q] = pairs[cur];
    for (int x = 0; x < A; ++x) d.delta.push_back(intern(a.step(p, x), b.step(q, x)));
  }
  d.n_states = static_cast<uint32_t>(pairs.size());
  d.accepting.resize(d.n_states);
  for (uint32_t s = 0; s < d.n_states; ++s) {
    bool fa = a.accepting[pairs[s].first], fb = b.accepting[pairs[s].second];
    d.accepting[s] = mode == ProductMode::And ? (fa && fb) : (fa || fb);
  }
  return d;
}

// Existential projection onto the kept tracks.  Dropped tracks may be longer
// than every kept track, so the initial states are first closed under the
// all-pad column; the result then accepts each projected word with a minimal
// pad prefix as well as its pad extensions.
inline Nfa project(const Dfa& d, const std::vector<int>& keep) {
  if (keep.empty()) throw DomainError("project: empty track list");
  for (int t : keep)
    if (t < 0 || t >= d.alpha.tracks()) throw DomainError("project: bad track index");

  TrackAlphabet na;
  na.has_pad = d.alpha.has_pad;
  for (int t : keep) na.sizes.push_back(d.alpha.sizes[t]);

  Nfa n;
  n.alpha = na;
  n.n_states = d.n_states;
  n.accepting.assign(d.accepting.begin(), d.accepting.end());

  if (d.alpha.has_pad) {
    // close the initial state under every letter that is pad on all kept
    // tracks: a dropped track may carry digits while the kept tracks are
    // still inside their pad prefix
    std::vector<int> skippable;
    for (int a = 0; a < d.alpha.letter_count(); ++a) {
      std::vector<int> col = d.alpha.unpack(a);
      bool pad_on_kept = true;
      for (int t : keep) pad_on_kept = pad_on_kept && col[t] == d.alpha.pad_value(t);
      if (pad_on_kept) skippable.push_back(a);
    }
    std::vector<char> seen(d.n_states, 0);
    seen[d.initial] = 1;
    n.initials.push_back(d.initial);
    for (size_t i = 0; i < n.initials.size(); ++i)
      for (int a : skippable) {
        uint32_t r = d.step(n.initials[i], a);
        if (!seen[r]) {
          seen[r] = 1;
          n.initials.push_back(r);
        }
      }
  } else {
    n.initials = {d.initial};
  }

  int A = d.alpha.letter_count();
  int NA = na.letter_count();
  n.delta.resize(static_cast<size_t>(d.n_states) * NA);
  for (int a = 0; a < A; ++a) {
    std::vector<int> col = d.alpha.unpack(a);
    std::vector<int> kept(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) kept[i] = col[keep[i]];
    int na_letter = na.pack(kept);
    for (uint32_t s = 0; s < d.n_states; ++s)
      n.delta[s * NA + na_letter].push_back(d.step(s, a));
  }
  return n;
}

inline bool is_empty(const Dfa& d) {
  for (uint32_t q : detail::reachable_states(d))
    if (d.accepting[q]) return false;
  return true;
}

// All accepted words of length <= max_len, in length-lex order.
inline std::vector<Word> enumerate(const Dfa& d, int max_len) {
  std::vector<Word> out;
  int A = d.alpha.letter_count();
  std::vector<std::pair<uint32_t, Word>> layer = {{d.initial, {}}};
  if (d.accepting[d.initial]) out.push_back({});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<uint32_t, Word>> next;
    for (auto& [q, w] : layer)
      for (int a = 0; a < A; ++a) {
        Word w2 = w;
        w2.push_back(a);
        uint32_t r = d.step(q, a);
        if (d.accepting[r]) out.push_back(w2);
        next.emplace_back(r, std::move(w2));
      }
    layer.swap(next);
  }
  std::stable_sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

// Shortest accepted word, if any (for error witnesses).
inline std::optional<Word> shortest_accepted(const Dfa& d) {
  int A = d.alpha.letter_count();
  std::vector<int> via(d.n_states, -1);
  std::vector<uint32_t> pred(d.n_states, 0);
  std::vector<char> seen(d.n_states, 0);
  std::queue<uint32_t> bfs;
  bfs.push(d.initial);
  seen[d.initial] = 1;
  while (!bfs.empty()) {
    uint32_t q = bfs.front();
    bfs.pop();
    if (d.accepting[q]) {
      Word rev;
      uint32_t s = q;
      while (s != d.initial) {
        rev.push_back(via[s]);
        s = pred[s];
      }
      std::reverse(rev.begin(), rev.end());
      return rev;
    }
    for (int a = 0; a < A; ++a) {
      uint32_t r = d.step(q, a);
      if (!seen[r]) {
        seen[r] = 1;
        via[r] = a;
        pred[r] = q;
        bfs.push(r);
      }
    }
  }
  return std::nullopt;
}

inline Dfa canonical(const Dfa& d) { return minimize(d); }

inline bool language_equal(const Dfa& a, const Dfa& b) {
  Dfa ca = minimize(a), cb = minimize(b);
  return ca.n_states == cb.n_states && ca.delta == cb.delta &&
         ca.accepting == cb.accepting && ca.alpha == cb.alpha;
}

// Universal / empty automata over a given alphabet.
inline Dfa universal_dfa(const TrackAlphabet& alpha) {
  Dfa d;
  d.alpha = alpha;
  d.n_states = 1;
  d.delta.assign(alpha.letter_count(), 0);
  d.accepting = {1};
  return d;
}

inline Dfa empty_dfa(const TrackAlphabet& alpha) {
  Dfa d = universal_dfa(alpha);
  d.accepting = {0};
  return d;
}

}  // namespace winshift

#endif
