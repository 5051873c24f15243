#ifndef WINSHIFT_ANS_HPP
#define WINSHIFT_ANS_HPP

#include <cstdint>
#include <string>

#include "automata.hpp"

namespace winshift {

// Abstract numeration systems.  rep/val are a bijection between the naturals
// and the system's language under radix order; rep(0) is the empty word in
// every built-in system.
//
// The Z system is the Dumont-Thomas system of the substitution a -> abab,
// b -> b, with digit alphabet {0,1,2,3}.

enum class SystemKind { Base, Fibonacci, CassaigneZ };

namespace detail {

// |sigma^l(a)| for the Z substitution: A(0) = 1, A(l+1) = 2 A(l) + 2.
inline uint64_t z_block_len(int l) { return 3 * (uint64_t{1} << l) - 2; }

// length of sigma^l(a), sigma^l(ab), sigma^l(aba) selected by digit 1, 2, 3
inline uint64_t z_digit_weight(int digit, int l) {
  uint64_t a = z_block_len(l);
  switch (digit) {
    case 1: return a;
    case 2: return a + 1;
    case 3: return 2 * a + 1;
  }
  throw DomainError("z_digit_weight: bad digit");
}

}  // namespace detail

// Representation of n via the recursive definition of the Z system: find the
// largest of sigma^l(a), sigma^l(ab), sigma^l(aba) that is a prefix of the
// length-n prefix of the fixed point, emit its digit, recurse on the rest.
inline Word rep_z_recursive(uint64_t n) {
  Word w;
  if (n == 0) return w;
  int l = 0;
  while (detail::z_block_len(l + 1) <= n) ++l;
  w.assign(l + 1, 0);
  for (;;) {
    if (n == 0) break;
    while (detail::z_block_len(l) > n) --l;
    uint64_t a = detail::z_block_len(l);
    int digit;
    uint64_t m;
    if (n == a) {
      digit = 1;
      m = a;
    } else if (n == 2 * a + 1) {
      digit = 3;
      m = 2 * a + 1;
    } else {
      // |sigma^l(ab)| <= n < |sigma^l(aba)|
      digit = 2;
      m = a + 1;
    }
    w[w.size() - 1 - l] = digit;
    n -= m;
  }
  return w;
}

inline uint64_t val_z(const Word& w) {
  uint64_t n = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    int d = w[i];
    if (d == 0) continue;
    n += detail::z_digit_weight(d, static_cast<int>(w.size() - 1 - i));
  }
  return n;
}

class NumerationSystem {
 public:
  static NumerationSystem base(int k) {
    if (k < 2) throw DomainError("base must be >= 2");
    return NumerationSystem(SystemKind::Base, k);
  }
  static NumerationSystem fibonacci() { return NumerationSystem(SystemKind::Fibonacci, 2); }
  static NumerationSystem cassaigne_z() { return NumerationSystem(SystemKind::CassaigneZ, 4); }

  SystemKind kind() const { return kind_; }
  int digit_count() const { return digits_; }
  int base_k() const { return kind_ == SystemKind::Base ? digits_ : 0; }

  Word rep(uint64_t n) const {
    switch (kind_) {
      case SystemKind::Base: {
        Word w;
        while (n) {
          w.push_back(static_cast<int>(n % digits_));
          n /= digits_;
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      case SystemKind::Fibonacci: {
        // greedy Zeckendorf over U = 1, 2, 3, 5, 8, ...
        std::vector<uint64_t> u = {1, 2};
        while (u.back() <= n) u.push_back(u[u.size() - 1] + u[u.size() - 2]);
        Word w;
        bool started = false;
        for (size_t i = u.size(); i-- > 0;) {
          if (u[i] <= n) {
            n -= u[i];
            w.push_back(1);
            started = true;
          } else if (started) {
            w.push_back(0);
          }
        }
        return w;
      }
      case SystemKind::CassaigneZ:
        return rep_z_recursive(n);
    }
    throw DomainError("unreachable");
  }

  uint64_t val(const Word& w) const {
    check_in_language(w);
    switch (kind_) {
      case SystemKind::Base: {
        uint64_t n = 0;
        for (int d : w) n = n * digits_ + d;
        return n;
      }
      case SystemKind::Fibonacci: {
        std::vector<uint64_t> u = {1, 2};
        while (u.size() < w.size()) u.push_back(u[u.size() - 1] + u[u.size() - 2]);
        uint64_t n = 0;
        for (size_t i = 0; i < w.size(); ++i)
          if (w[w.size() - 1 - i]) n += u[i];
        return n;
      }
      case SystemKind::CassaigneZ:
        return val_z(w);
    }
    throw DomainError("unreachable");
  }

  // DFA for rep(N) over the digit alphabet (single track, no pad).
  Dfa language_automaton() const {
    TrackAlphabet alpha = single_track(digits_);
    Dfa d;
    d.alpha = alpha;
    switch (kind_) {
      case SystemKind::Base: {
        // eps | nonzero digit*
        d.n_states = 3;  // 0: start, 1: in word, 2: dead
        d.initial = 0;
        d.accepting = {1, 1, 0};
        d.delta.assign(3u * digits_, 0);
        for (int a = 0; a < digits_; ++a) {
          d.delta[0 * digits_ + a] = a == 0 ? 2 : 1;
          d.delta[1 * digits_ + a] = 1;
          d.delta[2 * digits_ + a] = 2;
        }
        return d;
      }
      case SystemKind::Fibonacci: {
        // eps | 1 (0|01)* : leading 1, no factor 11
        d.n_states = 4;  // 0: start, 1: after 1, 2: after 0, 3: dead
        d.initial = 0;
        d.accepting = {1, 1, 1, 0};
        d.delta = {3, 1,   // start: 0 -> dead, 1 -> after-1
                   2, 3,   // after 1: 0 -> after-0, 1 -> dead
                   2, 1,   // after 0
                   3, 3};
        return d;
      }
      case SystemKind::CassaigneZ: {
        // eps + 10* + 30* + 2(0+2)* + 2(0+2)*(1+3)0*
        d.n_states = 4;  // 0: start, 1: trailing zeros, 2: in 2(0+2)*, 3: dead
        d.initial = 0;
        d.accepting = {1, 1, 1, 0};
        d.delta = {3, 1, 2, 1,   // start
                   1, 3, 3, 3,   // trailing zeros
                   2, 1, 2, 1,   // 2(0+2)*
                   3, 3, 3, 3};
        return d;
      }
    }
    throw DomainError("unreachable");
  }

  // Padded pairs (x, y) with val(x) <= val(y).  Radix order is
  // length-then-lex, which matches value order in every built-in system.
  Dfa comparator_automaton() const;

  // Padded triples (x, y, z) with val(x) + val(y) = val(z).  Base-k only.
  Dfa adder_automaton() const;

  std::string digits_to_string(const Word& w) const {
    if (w.empty()) return "eps";
    std::string s;
    for (int d : w) s += static_cast<char>('0' + d);
    return s;
  }

  Word digits_from_string(const std::string& s) const {
    Word w;
    if (s == "eps") return w;
    for (char c : s) {
      if (c < '0' || c >= '0' + digits_) throw DomainError("bad digit in word");
      w.push_back(c - '0');
    }
    return w;
  }

 private:
  NumerationSystem(SystemKind kind, int digits) : kind_(kind), digits_(digits) {}

  void check_in_language(const Word& w) const {
    for (int d : w)
      if (d < 0 || d >= digits_) throw DomainError("val: digit out of range");
    if (!w.empty() && w[0] == 0) throw DomainError("val: leading zero");
    if (!language_automaton().accepts(w))
      throw DomainError("val: word violates the system's digit pattern");
  }

  SystemKind kind_;
  int digits_;
};

// --- padded tuples ---------------------------------------------------------

// Equal-length rows, pad (= digit_count value) only as a prefix per row.
struct PaddedTuple {
  std::vector<Word> rows;
  int pad_symbol = 0;
};

inline PaddedTuple pad_tuple(const std::vector<Word>& ws, int digit_count) {
  size_t m = 0;
  for (const Word& w : ws) m = std::max(m, w.size());
  PaddedTuple t;
  t.pad_symbol = digit_count;
  for (const Word& w : ws) {
    Word row(m - w.size(), digit_count);
    row.insert(row.end(), w.begin(), w.end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline std::vector<Word> unpad(const PaddedTuple& t) {
  std::vector<Word> ws;
  for (const Word& row : t.rows) {
    Word w;
    for (int d : row)
      if (d != t.pad_symbol) w.push_back(d);
    ws.push_back(std::move(w));
  }
  return ws;
}

// Packed letter sequence for a padded tuple, ready for a multi-track DFA.
inline Word tuple_letters(const TrackAlphabet& alpha, const PaddedTuple& t) {
  Word out;
  if (t.rows.empty()) return out;
  size_t m = t.rows[0].size();
  for (size_t i = 0; i < m; ++i) {
    std::vector<int> col(t.rows.size());
    for (size_t r = 0; r < t.rows.size(); ++r) col[r] = t.rows[r][i];
    out.push_back(alpha.pack(col));
  }
  return out;
}

namespace detail {

// #^* L on track t of a multi-track alphabet; other tracks unconstrained.
inline Dfa padded_track_dfa(const Dfa& lang, const TrackAlphabet& alpha, int track) {
  int A = alpha.letter_count();
  uint32_t n = lang.n_states;
  Dfa d;
  d.alpha = alpha;
  d.n_states = n + 2;  // 0: pad prefix, 1..n: lang state + 1, n+1: dead
  d.initial = 0;
  d.accepting.assign(d.n_states, 0);
  d.accepting[0] = lang.accepting[lang.initial];
  for (uint32_t q = 0; q < n; ++q) d.accepting[q + 1] = lang.accepting[q];
  d.delta.resize(static_cast<size_t>(d.n_states) * A);
  uint32_t dead = n + 1;
  for (int a = 0; a < A; ++a) {
    int sym = alpha.unpack(a)[track];
    bool is_pad = alpha.has_pad && sym == alpha.pad_value(track);
    d.delta[0 * A + a] = is_pad ? 0 : lang.step(lang.initial, sym) + 1;
    for (uint32_t q = 0; q < n; ++q)
      d.delta[(q + 1) * A + a] = is_pad ? dead : lang.step(q, sym) + 1;
    d.delta[dead * A + a] = dead;
  }
  return d;
}

}  // namespace detail

// Every track is a (possibly empty) pad prefix followed by a canonical
// representation.
inline Dfa wellformed_automaton(const NumerationSystem& s, int tracks) {
  TrackAlphabet alpha;
  alpha.sizes.assign(tracks, s.digit_count());
  alpha.has_pad = true;
  Dfa lang = s.language_automaton();
  Dfa acc = universal_dfa(alpha);
  for (int t = 0; t < tracks; ++t)
    acc = product(acc, detail::padded_track_dfa(lang, alpha, t), ProductMode::And);
  return minimize(acc);
}

inline Dfa NumerationSystem::comparator_automaton() const {
  TrackAlphabet alpha;
  alpha.sizes = {digits_, digits_};
  alpha.has_pad = true;
  int A = alpha.letter_count();
  Dfa cmp;
  cmp.alpha = alpha;
  cmp.n_states = 3;  // 0: equal so far, 1: x < y, 2: x > y
  cmp.initial = 0;
  cmp.accepting = {1, 1, 0};
  cmp.delta.resize(3u * A);
  for (int a = 0; a < A; ++a) {
    auto col = alpha.unpack(a);
    bool px = col[0] == alpha.pad_value(0), py = col[1] == alpha.pad_value(1);
    uint32_t next;
    if (px && py)
      next = 0;
    else if (px)
      next = 1;  // x shorter, hence smaller
    else if (py)
      next = 2;
    else
      next = col[0] < col[1] ? 1 : col[0] > col[1] ? 2 : 0;
    cmp.delta[0 * A + a] = next;
    cmp.delta[1 * A + a] = 1;
    cmp.delta[2 * A + a] = 2;
  }
  return minimize(product(cmp, wellformed_automaton(*this, 2), ProductMode::And));
}

inline Dfa NumerationSystem::adder_automaton() const {
  if (kind_ != SystemKind::Base)
    throw UnsupportedFeature("adder_automaton: only base-k systems are addable here");
  int k = digits_;
  TrackAlphabet alpha;
  alpha.sizes = {k, k, k};
  alpha.has_pad = true;
  int A = alpha.letter_count();
  // MSD-first carry scan: state c with val(z) - val(x) - val(y) = c over the
  // prefix read so far; pads count as digit 0.
  Dfa add;
  add.alpha = alpha;
  add.n_states = 3;  // c = 0, c = 1, dead
  add.initial = 0;
  add.accepting = {1, 0, 0};
  add.delta.resize(3u * A);
  for (int a = 0; a < A; ++a) {
    auto col = alpha.unpack(a);
    for (int t = 0; t < 3; ++t)
      if (col[t] == alpha.pad_value(t)) col[t] = 0;
    for (int c = 0; c < 2; ++c) {
      int c2 = k * c + col[2] - col[0] - col[1];
      add.delta[c * A + a] = (c2 == 0 || c2 == 1) ? static_cast<uint32_t>(c2) : 2;
    }
    add.delta[2 * A + a] = 2;
  }
  return minimize(product(add, wellformed_automaton(*this, 3), ProductMode::And));
}

// Rank/unrank against the language automaton, for cross-checking rep/val.
// Words are ordered by length, then lexicographically by digit.
inline Word rep_by_unranking(const NumerationSystem& s, uint64_t n) {
  Dfa lang = s.language_automaton();
  int A = lang.alpha.letter_count();
  if (lang.accepting[lang.initial]) {
    if (n == 0) return {};
    --n;
  }
  // count[q] = accepted words of length len from q, recomputed per length
  for (int len = 1;; ++len) {
    std::vector<uint64_t> cnt(lang.n_states, 0);
    for (uint32_t q = 0; q < lang.n_states; ++q) cnt[q] = lang.accepting[q];
    for (int i = 1; i < len; ++i) {
      std::vector<uint64_t> nxt(lang.n_states, 0);
      for (uint32_t q = 0; q < lang.n_states; ++q)
        for (int a = 0; a < A; ++a) nxt[q] += cnt[lang.step(q, a)];
      cnt.swap(nxt);
    }
    // total with this length from initial, one step at a time
    uint64_t total = 0;
    for (int a = 0; a < A; ++a) total += cnt[lang.step(lang.initial, a)];
    if (n >= total) {
      n -= total;
      continue;
    }
    Word w;
    uint32_t q = lang.initial;
    for (int i = 0; i < len; ++i) {
      if (i > 0) {
        // recompute counts for remaining length
        int rem = len - i;
        cnt.assign(lang.n_states, 0);
        for (uint32_t r = 0; r < lang.n_states; ++r) cnt[r] = lang.accepting[r];
        for (int j = 1; j < rem; ++j) {
          std::vector<uint64_t> nxt(lang.n_states, 0);
          for (uint32_t r = 0; r < lang.n_states; ++r)
            for (int a = 0; a < A; ++a) nxt[r] += cnt[lang.step(r, a)];
          cnt.swap(nxt);
        }
      }
      for (int a = 0; a < A; ++a) {
        uint64_t c = cnt[lang.step(q, a)];
        if (n < c) {
          w.push_back(a);
          q = lang.step(q, a);
          break;
        }
        n -= c;
      }
    }
    return w;
  }
}

}  // namespace winshift

#endif
