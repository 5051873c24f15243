#ifndef WINSHIFT_CODING_HPP
#define WINSHIFT_CODING_HPP

#include <set>

#include "automata.hpp"

namespace winshift {

// A sequence with finitely many nonzero letters, stored sparsely.
struct FiniteSupportSeq {
  std::vector<std::pair<uint64_t, int>> entries;  // (position, value), value > 0

  FiniteSupportSeq() = default;
  explicit FiniteSupportSeq(std::vector<std::pair<uint64_t, int>> e) : entries(std::move(e)) {
    for (size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].second <= 0) throw DomainError("FiniteSupportSeq: values must be positive");
      if (i && entries[i - 1].first >= entries[i].first)
        throw DomainError("FiniteSupportSeq: positions must strictly increase");
    }
  }

  static FiniteSupportSeq from_word(const Word& w) {
    std::vector<std::pair<uint64_t, int>> e;
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] < 0) throw DomainError("FiniteSupportSeq: negative letter");
      if (w[i] > 0) e.emplace_back(i, w[i]);
    }
    return FiniteSupportSeq(std::move(e));
  }

  int at(uint64_t n) const {
    for (auto& [p, v] : entries)
      if (p == n) return v;
    return 0;
  }

  int sum() const {
    int s = 0;
    for (auto& [p, v] : entries) s += v;
    return s;
  }

  bool operator==(const FiniteSupportSeq& o) const { return entries == o.entries; }
  bool operator<(const FiniteSupportSeq& o) const { return entries < o.entries; }
};

// nondecreasing position tuple, position j repeated x_j times
using NuVector = std::vector<uint64_t>;

inline NuVector nu_encode(const FiniteSupportSeq& x) {
  NuVector v;
  for (auto& [p, val] : x.entries) v.insert(v.end(), val, p);
  return v;
}

inline FiniteSupportSeq nu_decode(const NuVector& v) {
  std::vector<std::pair<uint64_t, int>> e;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i && v[i] < v[i - 1]) throw DomainError("nu_decode: vector must be nondecreasing");
    if (!e.empty() && e.back().first == v[i])
      ++e.back().second;
    else
      e.emplace_back(v[i], 1);
  }
  return FiniteSupportSeq(std::move(e));
}

// e: the word of nonzero letters in order; s: their positions
inline Word erase_zeros(const FiniteSupportSeq& x) {
  Word w;
  for (auto& [p, v] : x.entries) w.push_back(v);
  return w;
}

inline std::vector<uint64_t> support(const FiniteSupportSeq& x) {
  std::vector<uint64_t> s;
  for (auto& [p, v] : x.entries) s.push_back(p);
  return s;
}

// P_v of a bounded-sum slice: support tuples of the members whose nonzero
// letters spell v
inline std::set<std::vector<uint64_t>> pv_extract(const std::set<Word>& ws, const Word& v) {
  std::set<std::vector<uint64_t>> out;
  for (const Word& y : ws) {
    FiniteSupportSeq x = FiniteSupportSeq::from_word(y);
    if (erase_zeros(x) == v) out.insert(support(x));
  }
  return out;
}

// The abc-encoding: a binary finite-support sequence with at most `arity`
// ones becomes a tuple of 1-based positions right-aligned into `arity`
// slots, with 0 marking a missing occurrence.
inline std::vector<uint64_t> abc_encode(const FiniteSupportSeq& y, int arity) {
  if (arity < 2 || arity > 4) throw DomainError("abc_encode: arity must be 2, 3 or 4");
  std::vector<uint64_t> pos;
  for (auto& [p, v] : y.entries) {
    if (v != 1) throw DomainError("abc_encode: sequence must be binary");
    pos.push_back(p + 1);
  }
  if (static_cast<int>(pos.size()) > arity) throw DomainError("abc_encode: too many ones");
  std::vector<uint64_t> out(arity - pos.size(), 0);
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

inline FiniteSupportSeq abc_decode(const std::vector<uint64_t>& t) {
  std::vector<std::pair<uint64_t, int>> e;
  bool seen = false;
  uint64_t prev = 0;
  for (uint64_t p : t) {
    if (p == 0) {
      if (seen) throw DomainError("abc_decode: zero after a position");
      continue;
    }
    if (seen && p <= prev) throw DomainError("abc_decode: positions must strictly increase");
    seen = true;
    prev = p;
    e.emplace_back(p - 1, 1);
  }
  return FiniteSupportSeq(std::move(e));
}

}  // namespace winshift

#endif
