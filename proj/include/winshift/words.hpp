#ifndef WINSHIFT_WORDS_HPP
#define WINSHIFT_WORDS_HPP

#include <functional>
#include <set>
#include <string>

#include "ans.hpp"
#include "automata.hpp"

namespace winshift {

struct Substitution {
  int alphabet_size = 0;
  std::vector<Word> images;

  const Word& image(int letter) const { return images[letter]; }

  bool prolongable_on(int seed) const {
    return !images[seed].empty() && images[seed][0] == seed && images[seed].size() >= 2;
  }

  bool is_uniform(int k) const {
    for (const Word& im : images)
      if (static_cast<int>(im.size()) != k) return false;
    return true;
  }

  Word apply(const Word& w) const {
    Word out;
    for (int a : w) out.insert(out.end(), images[a].begin(), images[a].end());
    return out;
  }
};

inline Word fixed_point_prefix(const Substitution& s, int seed, size_t len) {
  if (!s.prolongable_on(seed)) throw DomainError("substitution not prolongable on seed");
  Word w = {seed};
  while (w.size() < len) {
    size_t before = w.size();
    w = s.apply(w);
    if (w.size() > len) w.resize(len);
    if (w.size() <= before) throw DomainError("substitution does not grow from seed");
  }
  w.resize(len);
  return w;
}

// DFAO of the fixed point of a k-uniform substitution: states are the
// substitution's letters, delta(q, d) = image(q)[d], output by the coding.
inline OutputAutomaton dfao_from_uniform_substitution(const Substitution& s, int k, int seed,
                                                      const std::vector<int>& coding) {
  if (!s.is_uniform(k)) throw DomainError("substitution is not k-uniform");
  if (!s.prolongable_on(seed)) throw DomainError("substitution not prolongable on seed");
  OutputAutomaton a;
  a.skeleton.alpha = single_track(k);
  a.skeleton.n_states = s.alphabet_size;
  a.skeleton.initial = seed;
  a.skeleton.accepting.assign(s.alphabet_size, 0);
  for (int q = 0; q < s.alphabet_size; ++q)
    for (int d = 0; d < k; ++d) a.skeleton.delta.push_back(s.image(q)[d]);
  a.output = coding;
  return a;
}

// A word indexed by a numeration system through a DFAO.  letter(n) feeds
// rep(n + index_offset) to the automaton; prefixes are generated through the
// substitution (when one is attached) and memoized.
class AutomaticWord {
 public:
  AutomaticWord(std::string name, NumerationSystem system, OutputAutomaton dfao,
                uint64_t index_offset = 0)
      : name_(std::move(name)),
        system_(std::move(system)),
        dfao_(std::move(dfao)),
        index_offset_(index_offset) {}

  void attach_substitution(Substitution s, int seed, std::vector<int> coding) {
    subst_ = std::move(s);
    seed_ = seed;
    coding_ = std::move(coding);
    has_subst_ = true;
  }

  // Extra length-n factors that never show up in a short prefix (words with
  // exponentially late first occurrences); returns genuine factors only.
  using FactorCompletion = std::function<std::set<Word>(size_t n, const Word& prefix)>;

  void set_factor_completion(FactorCompletion f) { completion_ = std::move(f); }
  const FactorCompletion& factor_completion() const { return completion_; }

  const std::string& name() const { return name_; }
  const NumerationSystem& system() const { return system_; }
  const OutputAutomaton& dfao() const { return dfao_; }
  uint64_t index_offset() const { return index_offset_; }

  int letter(uint64_t n) const { return run_output(dfao_, system_.rep(n + index_offset_)); }

  // prefix of the word, from the substitution when available
  Word prefix(size_t len) const {
    if (cache_.size() < len) {
      if (has_subst_) {
        Word raw = fixed_point_prefix(subst_, seed_, len);
        cache_.resize(len);
        for (size_t i = 0; i < len; ++i) cache_[i] = coding_[raw[i]];
      } else {
        while (cache_.size() < len) cache_.push_back(letter(cache_.size()));
      }
    }
    return Word(cache_.begin(), cache_.begin() + len);
  }

 private:
  std::string name_;
  NumerationSystem system_;
  OutputAutomaton dfao_;
  uint64_t index_offset_;
  Substitution subst_;
  int seed_ = 0;
  std::vector<int> coding_;
  bool has_subst_ = false;
  FactorCompletion completion_;
  mutable Word cache_;
};

inline std::set<Word> factor_set(const AutomaticWord& w, size_t n, size_t prefix_len) {
  if (prefix_len < n) throw DomainError("factor_set: prefix_len < n");
  Word p = w.prefix(prefix_len);
  std::set<Word> out;
  for (size_t i = 0; i + n <= p.size(); ++i) out.insert(Word(p.begin() + i, p.begin() + i + n));
  return out;
}

// Length-n factors of the word: sliding windows of the prefix, plus the
// word's structural completion when one is attached.
inline std::set<Word> exact_factor_slice(const AutomaticWord& w, size_t n, size_t prefix_len) {
  std::set<Word> out = factor_set(w, n, prefix_len);
  if (w.factor_completion()) {
    std::set<Word> extra = w.factor_completion()(n, w.prefix(prefix_len));
    out.insert(extra.begin(), extra.end());
  }
  return out;
}

inline std::set<Word> right_special(const AutomaticWord& w, size_t n, size_t prefix_len) {
  std::set<Word> longer = factor_set(w, n + 1, prefix_len);
  std::map<Word, std::set<int>> extensions;
  for (const Word& f : longer)
    extensions[Word(f.begin(), f.end() - 1)].insert(f.back());
  std::set<Word> out;
  for (auto& [u, exts] : extensions)
    if (exts.size() >= 2) out.insert(u);
  return out;
}

// --- built-in words --------------------------------------------------------

inline Substitution thue_morse_substitution() { return Substitution{2, {{0, 1}, {1, 0}}}; }
inline Substitution period_doubling_substitution() { return Substitution{2, {{0, 1}, {0, 0}}}; }

inline Substitution paperfolding_substitution() {
  return Substitution{4, {{0, 1}, {2, 1}, {0, 3}, {2, 3}}};
}
inline std::vector<int> paperfolding_coding() { return {1, 1, 0, 0}; }

inline Substitution rudin_shapiro_substitution() {
  return Substitution{4, {{0, 1}, {0, 2}, {3, 1}, {3, 2}}};
}
inline std::vector<int> rudin_shapiro_coding() { return {0, 0, 1, 1}; }

inline Substitution cassaigne_z_substitution() {
  // a -> abab, b -> b with a = 0, b = 1
  return Substitution{2, {{0, 1, 0, 1}, {1}}};
}

inline AutomaticWord make_thue_morse() {
  Substitution s = thue_morse_substitution();
  AutomaticWord w("thue-morse", NumerationSystem::base(2),
                  dfao_from_uniform_substitution(s, 2, 0, {0, 1}));
  w.attach_substitution(s, 0, {0, 1});
  return w;
}

inline AutomaticWord make_period_doubling() {
  Substitution s = period_doubling_substitution();
  AutomaticWord w("period-doubling", NumerationSystem::base(2),
                  dfao_from_uniform_substitution(s, 2, 0, {0, 1}));
  w.attach_substitution(s, 0, {0, 1});
  return w;
}

inline AutomaticWord make_paperfolding() {
  Substitution s = paperfolding_substitution();
  AutomaticWord w("paperfolding", NumerationSystem::base(2),
                  dfao_from_uniform_substitution(s, 2, 0, paperfolding_coding()));
  w.attach_substitution(s, 0, paperfolding_coding());
  return w;
}

inline AutomaticWord make_rudin_shapiro() {
  Substitution s = rudin_shapiro_substitution();
  AutomaticWord w("rudin-shapiro", NumerationSystem::base(2),
                  dfao_from_uniform_substitution(s, 2, 0, rudin_shapiro_coding()));
  w.attach_substitution(s, 0, rudin_shapiro_coding());
  return w;
}

// Fixed point of a -> abab, b -> b as a word over {a, b} = {0, 1}.  Letter n
// is the output of a two-state automaton fed rep(n + 1) in the Z system:
// the letter is a exactly when the representation ends with 1 or 3.
inline AutomaticWord make_cassaigne_z() {
  OutputAutomaton dfao;
  dfao.skeleton.alpha = single_track(4);
  dfao.skeleton.n_states = 2;  // 0: last digit in {0, 2} (or none), 1: in {1, 3}
  dfao.skeleton.initial = 0;
  dfao.skeleton.accepting = {0, 0};
  dfao.skeleton.delta = {0, 1, 0, 1,
                         0, 1, 0, 1};
  dfao.output = {1, 0};  // b when the last digit is even, a otherwise
  AutomaticWord w("cassaigne-z", NumerationSystem::cassaigne_z(), std::move(dfao), 1);
  w.attach_substitution(cassaigne_z_substitution(), 0, {0, 1});
  // z = lim p_k with p_{k+1} = p_k b^k p_k, so z splits into copies of p_m
  // separated by runs b^j (j >= m).  A length-n window either sits inside a
  // copy of p_m (these all occur in a short prefix) or overlaps such a run,
  // in which case it is a window of s b^j t where s is the stable n-suffix
  // of p_m and t the n-prefix of z.  Runs longer than n look like b^n.
  w.set_factor_completion([](size_t n, const Word& prefix) {
    if (prefix.size() < n) throw DomainError("factor completion: prefix shorter than n");
    Word p = {0};
    size_t m = 1;
    while (p.size() < n) {
      Word q = p;
      q.insert(q.end(), m, 1);
      q.insert(q.end(), p.begin(), p.end());
      p = std::move(q);
      ++m;
    }
    Word s(p.end() - n, p.end()), t(prefix.begin(), prefix.begin() + n);
    std::set<Word> out;
    for (size_t j = m; j <= n; ++j) {
      Word u = s;
      u.insert(u.end(), j, 1);
      u.insert(u.end(), t.begin(), t.end());
      for (size_t i = 0; i + n <= u.size(); ++i)
        out.insert(Word(u.begin() + i, u.begin() + i + n));
    }
    return out;
  });
  return w;
}

inline AutomaticWord make_word(const std::string& id) {
  if (id == "thue-morse") return make_thue_morse();
  if (id == "period-doubling") return make_period_doubling();
  if (id == "paperfolding") return make_paperfolding();
  if (id == "rudin-shapiro") return make_rudin_shapiro();
  if (id == "cassaigne-z") return make_cassaigne_z();
  throw DomainError("unknown word id: " + id);
}

}  // namespace winshift

#endif
