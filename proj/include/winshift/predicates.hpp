#ifndef WINSHIFT_PREDICATES_HPP
#define WINSHIFT_PREDICATES_HPP

#include <map>
#include <memory>
#include <set>
#include <string>

#include "ans.hpp"
#include "automata.hpp"
#include "words.hpp"

namespace winshift {

// Automaton denoting a k-ary predicate over naturals: one pad-alphabet track
// per free variable, tracks in sorted variable-name order, language closed
// under leading all-pad columns and restricted to well-formed rep tuples.
struct PredicateAutomaton {
  Dfa dfa;
  std::vector<std::string> vars;

  int track_of(const std::string& v) const {
    for (size_t t = 0; t < vars.size(); ++t)
      if (vars[t] == v) return static_cast<int>(t);
    throw DomainError("predicate has no variable " + v);
  }
};

class PredicateEngine {
 public:
  explicit PredicateEngine(AutomaticWord word, size_t state_cap = 1u << 22)
      : word_(std::move(word)), sys_(word_.system()), state_cap_(state_cap) {
    if (sys_.kind() != SystemKind::Base)
      throw UnsupportedFeature("predicate engine: base-k numeration systems only");
    if (word_.index_offset() != 0)
      throw UnsupportedFeature("predicate engine: zero index offset required");
    out_letters_ = 0;
    for (int v : word_.dfao().output) out_letters_ = std::max(out_letters_, v + 1);
  }

  const AutomaticWord& word() const { return word_; }
  const NumerationSystem& system() const { return sys_; }

  // --- plumbing -----------------------------------------------------------

  TrackAlphabet alphabet(int tracks) const {
    TrackAlphabet a;
    a.sizes.assign(tracks, sys_.digit_count());
    a.has_pad = true;
    return a;
  }

  const Dfa& wellformed(int tracks) {
    auto it = wellformed_.find(tracks);
    if (it == wellformed_.end())
      it = wellformed_.emplace(tracks, wellformed_automaton(sys_, tracks)).first;
    return it->second;
  }

  // same language on a superset of tracks (new tracks well-formed but free)
  PredicateAutomaton align(const PredicateAutomaton& p, std::vector<std::string> vars) {
    if (p.vars == vars) return p;
    std::sort(vars.begin(), vars.end());
    int nt = static_cast<int>(vars.size());
    std::vector<int> src(nt, -1);  // new track -> old track
    for (int t = 0; t < nt; ++t)
      for (size_t o = 0; o < p.vars.size(); ++o)
        if (p.vars[o] == vars[t]) src[t] = static_cast<int>(o);
    for (const std::string& v : p.vars)
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        throw DomainError("align: variable " + v + " dropped");

    TrackAlphabet na = alphabet(nt);
    Dfa d;
    d.alpha = na;
    d.n_states = p.dfa.n_states;
    d.initial = p.dfa.initial;
    d.accepting = p.dfa.accepting;
    int NA = na.letter_count();
    d.delta.resize(static_cast<size_t>(d.n_states) * NA);
    int OA = p.dfa.alpha.letter_count();
    std::vector<int> to_old(NA);
    for (int a = 0; a < NA; ++a) {
      std::vector<int> col = na.unpack(a);
      std::vector<int> old_col(p.vars.size());
      for (int t = 0; t < nt; ++t)
        if (src[t] >= 0) old_col[src[t]] = col[t];
      to_old[a] = p.dfa.alpha.pack(old_col);
    }
    for (uint32_t q = 0; q < d.n_states; ++q)
      for (int a = 0; a < NA; ++a) d.delta[q * NA + a] = p.dfa.delta[q * OA + to_old[a]];
    PredicateAutomaton out{minimize(product(d, wellformed(nt), ProductMode::And, state_cap_)),
                           std::move(vars)};
    return out;
  }

  PredicateAutomaton rename(const PredicateAutomaton& p,
                            const std::vector<std::string>& names) {
    if (names.size() != p.vars.size()) throw DomainError("rename: arity mismatch");
    {
      std::set<std::string> uniq(names.begin(), names.end());
      if (uniq.size() != names.size()) throw DomainError("rename: repeated variable");
    }
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> src(names.size());  // new track -> old track
    for (size_t t = 0; t < sorted.size(); ++t)
      for (size_t o = 0; o < names.size(); ++o)
        if (names[o] == sorted[t]) src[t] = static_cast<int>(o);

    TrackAlphabet na = p.dfa.alpha;
    Dfa d = p.dfa;
    int NA = na.letter_count();
    for (uint32_t q = 0; q < d.n_states; ++q)
      for (int a = 0; a < NA; ++a) {
        std::vector<int> col = na.unpack(a);
        std::vector<int> old_col(col.size());
        for (size_t t = 0; t < col.size(); ++t) old_col[src[t]] = col[t];
        d.delta[q * NA + a] = p.dfa.delta[q * NA + na.pack(old_col)];
      }
    return {std::move(d), std::move(sorted)};
  }

  // apply a cached predicate to fresh (distinct) variable names
  PredicateAutomaton apply(const PredicateAutomaton& p, const std::vector<std::string>& args) {
    return rename(p, args);
  }

  PredicateAutomaton conj(const PredicateAutomaton& a, const PredicateAutomaton& b) {
    std::vector<std::string> vars = merged_vars(a, b);
    PredicateAutomaton ea = align(a, vars), eb = align(b, vars);
    return {minimize(product(ea.dfa, eb.dfa, ProductMode::And, state_cap_)), vars};
  }

  PredicateAutomaton disj(const PredicateAutomaton& a, const PredicateAutomaton& b) {
    std::vector<std::string> vars = merged_vars(a, b);
    PredicateAutomaton ea = align(a, vars), eb = align(b, vars);
    return {minimize(product(ea.dfa, eb.dfa, ProductMode::Or, state_cap_)), vars};
  }

  PredicateAutomaton neg(const PredicateAutomaton& p) {
    int nt = static_cast<int>(p.vars.size());
    return {minimize(product(complement(p.dfa), wellformed(nt), ProductMode::And, state_cap_)),
            p.vars};
  }

  PredicateAutomaton exists(const PredicateAutomaton& p, const std::string& var) {
    int drop = p.track_of(var);
    if (p.vars.size() == 1) throw DomainError("exists: cannot drop the last track");
    std::vector<int> keep;
    std::vector<std::string> vars;
    for (size_t t = 0; t < p.vars.size(); ++t)
      if (static_cast<int>(t) != drop) {
        keep.push_back(static_cast<int>(t));
        vars.push_back(p.vars[t]);
      }
    Dfa d = determinize(project(p.dfa, keep), state_cap_);
    int nt = static_cast<int>(vars.size());
    return {minimize(product(d, wellformed(nt), ProductMode::And, state_cap_)), std::move(vars)};
  }

  PredicateAutomaton exists(PredicateAutomaton p, const std::vector<std::string>& vars) {
    for (const std::string& v : vars) p = exists(p, v);
    return p;
  }

  PredicateAutomaton forall(const PredicateAutomaton& p, const std::string& var) {
    return neg(exists(neg(p), var));
  }

  bool satisfiable(const PredicateAutomaton& p) const { return !is_empty(p.dfa); }

  bool accepts(const PredicateAutomaton& p, const std::vector<uint64_t>& values) const {
    if (values.size() != p.vars.size()) throw DomainError("accepts: arity mismatch");
    std::vector<Word> reps;
    for (uint64_t v : values) reps.push_back(sys_.rep(v));
    PaddedTuple t = pad_tuple(reps, sys_.digit_count());
    return p.dfa.accepts(tuple_letters(p.dfa.alpha, t));
  }

  // --- atoms --------------------------------------------------------------

  // x <= y over tracks sorted by name
  PredicateAutomaton leq(const std::string& x, const std::string& y) {
    return binary_atom(sys_.comparator_automaton(), x, y);
  }

  PredicateAutomaton eq(const std::string& x, const std::string& y) {
    TrackAlphabet alpha = alphabet(2);
    int A = alpha.letter_count();
    Dfa d;
    d.alpha = alpha;
    d.n_states = 2;  // equal so far, differ
    d.initial = 0;
    d.accepting = {1, 0};
    d.delta.resize(2u * A);
    for (int a = 0; a < A; ++a) {
      auto col = alpha.unpack(a);
      d.delta[0 * A + a] = col[0] == col[1] ? 0 : 1;
      d.delta[1 * A + a] = 1;
    }
    d = minimize(product(d, wellformed(2), ProductMode::And, state_cap_));
    return binary_atom(d, x, y);
  }

  PredicateAutomaton less(const std::string& x, const std::string& y) {
    return conj(leq(x, y), neg(eq(x, y)));
  }

  // x + y = z
  PredicateAutomaton plus(const std::string& x, const std::string& y, const std::string& z) {
    PredicateAutomaton p{sys_.adder_automaton(), {"0", "1", "2"}};
    return rename(p, {x, y, z});
  }

  PredicateAutomaton eq_const(const std::string& x, uint64_t c) {
    Word r = sys_.rep(c);
    TrackAlphabet alpha = alphabet(1);
    int A = alpha.letter_count();
    Dfa d;
    d.alpha = alpha;
    d.n_states = static_cast<uint32_t>(r.size()) + 2;  // pad+digits chain, dead
    d.initial = 0;
    uint32_t dead = d.n_states - 1;
    d.accepting.assign(d.n_states, 0);
    d.accepting[r.size()] = 1;
    d.delta.assign(static_cast<size_t>(d.n_states) * A, dead);
    for (int a = 0; a < A; ++a) {
      int sym = alpha.unpack(a)[0];
      if (alpha.has_pad && sym == alpha.pad_value(0)) d.delta[0 * A + a] = 0;
    }
    for (size_t i = 0; i < r.size(); ++i)
      d.delta[i * A + r[i]] = static_cast<uint32_t>(i) + 1;
    return {minimize(d), {x}};
  }

  PredicateAutomaton gt_const(const std::string& x, uint64_t c) {
    // x > c as a comparison against the constant, via a fresh helper variable
    std::string u = fresh();
    return exists(conj(eq_const(u, c), less(u, x)), u);
  }

  // y = x + 1
  const PredicateAutomaton& succ() {
    if (!succ_) {
      std::string u = fresh();
      succ_ = std::make_unique<PredicateAutomaton>(
          exists(conj(eq_const(u, 1), plus("0succx", u, "1succy")), u));
    }
    return *succ_;
  }

  // word letter: x[n] = letter for track variable v
  PredicateAutomaton word_is(const std::string& v, int letter) {
    if (letter < 0 || letter >= out_letters_) throw DomainError("word_is: letter out of range");
    const OutputAutomaton& dfao = word_.dfao();
    TrackAlphabet alpha = alphabet(1);
    int A = alpha.letter_count();
    uint32_t n = dfao.skeleton.n_states;
    Dfa d;
    d.alpha = alpha;
    d.n_states = n + 2;  // 0: pad prefix, 1..n: dfao state + 1, n+1: dead
    d.initial = 0;
    uint32_t dead = n + 1;
    d.accepting.assign(d.n_states, 0);
    d.accepting[0] = dfao.output[dfao.skeleton.initial] == letter;
    for (uint32_t q = 0; q < n; ++q) d.accepting[q + 1] = dfao.output[q] == letter;
    d.delta.resize(static_cast<size_t>(d.n_states) * A);
    for (int a = 0; a < A; ++a) {
      int sym = alpha.unpack(a)[0];
      bool is_pad = sym == alpha.pad_value(0);
      d.delta[0 * A + a] = is_pad ? 0 : dfao.skeleton.step(dfao.skeleton.initial, sym) + 1;
      for (uint32_t q = 0; q < n; ++q)
        d.delta[(q + 1) * A + a] = is_pad ? dead : dfao.skeleton.step(q, sym) + 1;
      d.delta[dead * A + a] = dead;
    }
    d = minimize(product(d, wellformed(1), ProductMode::And, state_cap_));
    return {std::move(d), {v}};
  }

  // --- staged paper predicates -------------------------------------------

  // x[n1 + i] = x[n2 + i] (and the negation), the letter comparisons the
  // extRS formulas are made of
  const PredicateAutomaton& word_eq_at() {
    if (!word_eq_at_) word_eq_at_ = std::make_unique<PredicateAutomaton>(build_word_cmp(true));
    return *word_eq_at_;
  }

  const PredicateAutomaton& word_neq_at() {
    if (!word_neq_at_) word_neq_at_ = std::make_unique<PredicateAutomaton>(build_word_cmp(false));
    return *word_neq_at_;
  }

  // factorEq(k, n, m): x[n, n+k-1] = x[m, m+k-1]
  const PredicateAutomaton& factor_eq() {
    if (factor_eq_) return *factor_eq_;
    // forall i: i < k => x[n+i] = x[m+i]
    PredicateAutomaton body =
        disj(leq("0feK", "0feI"), apply(word_eq_at(), {"0feI", "0feN", "0feM"}));
    PredicateAutomaton all = forall(body, "0feI");
    // internal vars sort as (0feK, 0feM, 0feN); the predicate is symmetric
    // in the two positions
    factor_eq_ = std::make_unique<PredicateAutomaton>(rename(all, {"k", "m", "n"}));
    return *factor_eq_;
  }

  // isRS(k, n): the length-k factor at position n is right special
  const PredicateAutomaton& is_rs() {
    if (is_rs_) return *is_rs_;
    PredicateAutomaton p = conj(apply(factor_eq(), {"0rsK", "0rsN", "0rsM1"}),
                                apply(factor_eq(), {"0rsK", "0rsN", "0rsM2"}));
    p = conj(p, apply(word_neq_at(), {"0rsK", "0rsM1", "0rsM2"}));
    p = exists(exists(p, "0rsM1"), "0rsM2");
    is_rs_ = std::make_unique<PredicateAutomaton>(rename(p, {"k", "n"}));
    return *is_rs_;
  }

  // extRS_d, the doubling form: extRS2(i, j, n), extRS3(i, j, k, n1, n2),
  // extRS4(i, j, k, l, n1..n4); beyond 4 the same halving pattern applies
  // but track counts explode and the resource caps will fire.
  const PredicateAutomaton& ext_rs(int d) {
    if (d < 2) throw DomainError("ext_rs: levels start at 2");
    auto it = ext_rs_.find(d);
    if (it != ext_rs_.end()) return *it->second;
    PredicateAutomaton p = d == 2 ? build_ext_rs2() : build_ext_rs(d);
    it = ext_rs_.emplace(d, std::make_unique<PredicateAutomaton>(std::move(p))).first;
    return *it->second;
  }

  // T_d(i1..id, n): at position n a right-special factor of length i1 whose
  // both extensions extend to trees with branchings at i2 < ... < id; the
  // single-position form used for emptiness checks
  const PredicateAutomaton& t_chain(int d) {
    if (d < 1) throw DomainError("t_chain: levels start at 1");
    auto it = t_chain_.find(d);
    if (it != t_chain_.end()) return *it->second;
    PredicateAutomaton p = d == 1 ? rename(is_rs(), {"i1", "n"}) : build_t_chain(d);
    it = t_chain_.emplace(d, std::make_unique<PredicateAutomaton>(std::move(p))).first;
    return *it->second;
  }

  // least d <= dmax such that no strategy tree has d + 1 branchings;
  // nullopt when every level up to dmax + 1 is inhabited
  std::optional<int> coding_dimension(int dmax) {
    if (dmax < 1) throw DomainError("coding_dimension: dmax must be positive");
    for (int d = 1; d <= dmax + 1; ++d)
      if (!satisfiable(t_chain(d))) return d - 1;
    return std::nullopt;
  }

  // branch positions of some tree with d branchings, as an error witness
  std::vector<uint64_t> branch_witness(int d) {
    PredicateAutomaton p = t_chain(d);
    std::optional<Word> w = shortest_accepted(p.dfa);
    if (!w) throw DomainError("branch_witness: level is empty");
    std::vector<Word> rows(p.vars.size());
    for (int a : *w) {
      std::vector<int> col = p.dfa.alpha.unpack(a);
      for (size_t t = 0; t < rows.size(); ++t) rows[t].push_back(col[t]);
    }
    std::vector<uint64_t> out;
    for (size_t t = 0; t < rows.size(); ++t) {
      if (p.vars[t] == "n") continue;  // drop the position variable
      Word r;
      for (int sym : rows[t])
        if (sym != p.dfa.alpha.pad_value(static_cast<int>(t))) r.push_back(sym);
      out.push_back(sys_.val(r));
    }
    return out;
  }

  // The abc-encoded winning-shift automaton: tuples (a, b, c[, d]) of 1-based
  // one positions, 0 for missing, per the four/five-disjunct scheme.
  PredicateAutomaton winning_shift(int arity) {
    if (arity < 2 || arity > 4) throw DomainError("winning_shift: arity must be 2, 3 or 4");
    if (satisfiable(t_chain(arity + 1))) {
      std::vector<uint64_t> w = branch_witness(arity + 1);
      std::string msg = "winning_shift: coding dimension exceeds arity; branch positions";
      for (uint64_t v : w) msg += " " + std::to_string(v);
      throw DomainError(msg);
    }
    static const std::vector<std::string> names = {"a", "b", "c", "d"};
    std::vector<std::string> vars(names.begin(), names.begin() + arity);
    // closed levels: level r depends only on the last r variables
    PredicateAutomaton out = eq_const(vars[0], 0);
    for (size_t t = 1; t < vars.size(); ++t) out = conj(out, eq_const(vars[t], 0));
    for (int r = 1; r <= arity; ++r) {
      // variables holding the 1-based positions, most significant zeros first
      PredicateAutomaton d = level_predicate(r, std::vector<std::string>(
                                                    vars.end() - r, vars.end()));
      for (int t = 0; t < arity - r; ++t) d = conj(d, eq_const(vars[t], 0));
      out = disj(out, d);
    }
    return out;
  }

  std::string fresh() { return "0tmp" + std::to_string(fresh_++); }

 private:
  std::vector<std::string> merged_vars(const PredicateAutomaton& a,
                                       const PredicateAutomaton& b) const {
    std::set<std::string> s(a.vars.begin(), a.vars.end());
    s.insert(b.vars.begin(), b.vars.end());
    return {s.begin(), s.end()};
  }

  PredicateAutomaton binary_atom(Dfa d, const std::string& x, const std::string& y) {
    PredicateAutomaton p{std::move(d), {"0", "1"}};
    return rename(p, {x, y});
  }

  PredicateAutomaton build_word_cmp(bool equal) {
    // exists t1, t2: t1 = n1 + i, t2 = n2 + i, letters compare
    PredicateAutomaton p = conj(plus("0wcN1", "0wcI", "0wcT1"), plus("0wcN2", "0wcI", "0wcT2"));
    PredicateAutomaton cmp{empty_dfa(alphabet(1)), {"0wcT1"}};
    bool first = true;
    for (int u = 0; u < out_letters_; ++u)
      for (int v = 0; v < out_letters_; ++v) {
        if (equal != (u == v)) continue;
        PredicateAutomaton one = conj(word_is("0wcT1", u), word_is("0wcT2", v));
        cmp = first ? one : disj(cmp, one);
        first = false;
      }
    p = conj(p, cmp);
    p = exists(exists(p, "0wcT1"), "0wcT2");
    return rename(p, {"i", "n1", "n2"});
  }

  PredicateAutomaton build_ext_rs2() {
    PredicateAutomaton p = conj(apply(is_rs(), {"0e2J", "0e2M1"}), apply(is_rs(), {"0e2J", "0e2M2"}));
    p = conj(p, apply(factor_eq(), {"0e2I", "0e2M1", "0e2M2"}));
    p = conj(p, apply(factor_eq(), {"0e2I", "0e2N", "0e2M1"}));
    p = conj(p, apply(word_neq_at(), {"0e2I", "0e2M1", "0e2M2"}));
    p = exists(exists(p, "0e2M1"), "0e2M2");
    p = conj(p, less("0e2I", "0e2J"));
    return rename(p, {"i1", "i2", "n1"});
  }

  // branch variables i1 < ... < id, positions n1..n_{2^(d-2)}; the two
  // half-size instances share branch variables i2..id, their position blocks
  // agree on a length-i1 factor chain and the letters after it are constant
  // on each half and differ across the middle.
  PredicateAutomaton build_ext_rs(int d) {
    const PredicateAutomaton& sub = ext_rs(d - 1);
    int q = 1 << (d - 2);  // position variables at this level
    auto iv = [&](int t) { return "i" + std::to_string(t); };
    auto nv = [&](int t) { return "n" + std::to_string(t); };

    std::vector<std::string> lo, hi;
    for (int t = 2; t <= d; ++t) lo.push_back(iv(t)), hi.push_back(iv(t));
    for (int t = 1; t <= q / 2; ++t) lo.push_back(nv(t));
    for (int t = q / 2 + 1; t <= q; ++t) hi.push_back(nv(t));
    PredicateAutomaton p = conj(apply(sub, shifted_names(sub, lo)),
                                apply(sub, shifted_names(sub, hi)));
    for (int t = 1; t < q; ++t)
      p = conj(p, apply(factor_eq(), {iv(1), nv(t), nv(t + 1)}));
    for (int t = 1; t < q; ++t) {
      const PredicateAutomaton& cmp = t == q / 2 ? word_neq_at() : word_eq_at();
      p = conj(p, apply(cmp, {iv(1), nv(t), nv(t + 1)}));
    }
    p = conj(p, less(iv(1), iv(2)));
    return p;
  }

  // rename a cached predicate whose variables are (i1.., n1..) onto the given
  // argument names in that canonical order
  std::vector<std::string> shifted_names(const PredicateAutomaton& sub,
                                         const std::vector<std::string>& args) {
    if (sub.vars.size() != args.size()) throw DomainError("shifted_names: arity mismatch");
    // sub.vars is sorted; the canonical order is i-block then n-block, which
    // sorted order already gives (i* < n*)
    return args;
  }

  PredicateAutomaton build_t_chain(int d) {
    const PredicateAutomaton& sub = t_chain(d - 1);
    auto iv = [&](int t) { return "i" + std::to_string(t); };
    std::vector<std::string> tail;
    for (int t = 2; t <= d; ++t) tail.push_back(iv(t));
    std::vector<std::string> a1 = tail, a2 = tail;
    a1.push_back("0tcM1");
    a2.push_back("0tcM2");
    // quantify M2 before n enters the product; keeps intermediates one track
    // narrower, which is what makes level 5 fit in memory
    PredicateAutomaton p = conj(apply(factor_eq(), {iv(1), "0tcM1", "0tcM2"}),
                                apply(word_neq_at(), {iv(1), "0tcM1", "0tcM2"}));
    p = conj(p, apply(sub, a2));
    p = exists(p, "0tcM2");
    p = conj(p, apply(sub, a1));
    p = conj(p, apply(factor_eq(), {iv(1), "n", "0tcM1"}));
    p = exists(p, "0tcM1");
    p = conj(p, less(iv(1), iv(2)));
    return p;
  }

  // level r of the winning-shift encoding: positions p1 < ... < pr (1-based,
  // all nonzero) carry ones; inhabited iff the 0-based branch positions
  // p1-1, ..., pr-1 admit a strategy tree.
  PredicateAutomaton level_predicate(int r, const std::vector<std::string>& pos) {
    PredicateAutomaton out = gt_const(pos[0], 0);
    for (int t = 1; t < r; ++t) out = conj(out, gt_const(pos[t], 0));
    // branch variables b_t with b_t + 1 = pos_t
    std::vector<std::string> bs;
    PredicateAutomaton link = out;
    for (int t = 0; t < r; ++t) {
      std::string b = fresh();
      bs.push_back(b);
      link = conj(link, rename(succ(), {b, pos[t]}));
    }
    PredicateAutomaton core;
    if (r == 1) {
      std::string n1 = "0lvN1";
      core = exists(rename(is_rs(), {bs[0], n1}), n1);
    } else if (r == 2) {
      std::string n1 = "0lvN1";
      core = exists(apply(ext_rs(2), {bs[0], bs[1], n1}), n1);
    } else {
      const PredicateAutomaton& e = ext_rs(r);
      int q = 1 << (r - 2);
      std::vector<std::string> args = bs, ns;
      for (int t = 1; t <= q; ++t) {
        std::string n = "0lvN" + std::to_string(t);
        args.push_back(n);
        ns.push_back(n);
      }
      core = exists(apply(e, args), ns);
    }
    link = conj(link, core);
    return exists(link, bs);
  }

  AutomaticWord word_;
  NumerationSystem sys_;
  size_t state_cap_;
  int out_letters_ = 0;
  uint64_t fresh_ = 0;
  std::map<int, Dfa> wellformed_;
  std::unique_ptr<PredicateAutomaton> succ_, word_eq_at_, word_neq_at_, factor_eq_, is_rs_;
  std::map<int, std::unique_ptr<PredicateAutomaton>> ext_rs_, t_chain_;
};

}  // namespace winshift

#endif
