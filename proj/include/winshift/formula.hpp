#ifndef WINSHIFT_FORMULA_HPP
#define WINSHIFT_FORMULA_HPP

#include <memory>

#include "predicates.hpp"

namespace winshift {

// index/value terms: sum of variables plus a signed constant
struct Term {
  std::vector<std::string> vars;
  int64_t constant = 0;
};

struct Formula {
  enum class Kind { Cmp, WordLetter, WordCmp, Not, And, Or, Implies, Iff, Exists, Forall };

  Kind kind;
  std::string op;                   // Cmp: = != < <= > >=
  Term lhs, rhs;                    // Cmp, WordLetter (lhs index), WordCmp (both indices)
  int letter = 0;                   // WordLetter
  bool negated_word = false;        // WordLetter / WordCmp with !=
  std::vector<std::string> qvars;   // Exists / Forall
  std::vector<std::shared_ptr<Formula>> kids;
};

using FormulaPtr = std::shared_ptr<Formula>;

inline std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  auto add_term = [&](const Term& t) { out.insert(t.vars.begin(), t.vars.end()); };
  switch (f.kind) {
    case Formula::Kind::Cmp:
    case Formula::Kind::WordCmp:
      add_term(f.lhs);
      add_term(f.rhs);
      break;
    case Formula::Kind::WordLetter:
      add_term(f.lhs);
      break;
    default:
      for (const FormulaPtr& k : f.kids) {
        std::set<std::string> sub = free_vars(*k);
        out.insert(sub.begin(), sub.end());
      }
      for (const std::string& v : f.qvars) out.erase(v);
  }
  return out;
}

namespace detail {

// bind a term to a variable: returns the variable naming the term's value
// plus the constraints and fresh variables introduced along the way
struct TermBinding {
  std::string var;
  std::optional<PredicateAutomaton> constraint;
  std::vector<std::string> fresh;
};

inline void add_constraint(PredicateEngine& eng, TermBinding& b, PredicateAutomaton p) {
  b.constraint = b.constraint ? eng.conj(*b.constraint, std::move(p)) : std::move(p);
}

inline TermBinding bind_term(PredicateEngine& eng, const Term& t) {
  TermBinding b;
  if (t.vars.size() == 1 && t.constant == 0) {
    b.var = t.vars[0];
    return b;
  }
  if (t.vars.empty()) {
    if (t.constant < 0) throw DomainError("term is a negative constant");
    b.var = eng.fresh();
    b.fresh.push_back(b.var);
    add_constraint(eng, b, eng.eq_const(b.var, static_cast<uint64_t>(t.constant)));
    return b;
  }
  std::string cur = t.vars[0];
  for (size_t i = 1; i < t.vars.size(); ++i) {
    std::string nxt = eng.fresh();
    b.fresh.push_back(nxt);
    add_constraint(eng, b, eng.plus(cur, t.vars[i], nxt));
    cur = nxt;
  }
  if (t.constant > 0) {
    std::string c = eng.fresh(), nxt = eng.fresh();
    b.fresh.push_back(c);
    b.fresh.push_back(nxt);
    add_constraint(eng, b, eng.eq_const(c, static_cast<uint64_t>(t.constant)));
    add_constraint(eng, b, eng.plus(cur, c, nxt));
    cur = nxt;
  } else if (t.constant < 0) {
    // cur - |c| = nxt, i.e. nxt + |c| = cur (implies cur >= |c|)
    std::string c = eng.fresh(), nxt = eng.fresh();
    b.fresh.push_back(c);
    b.fresh.push_back(nxt);
    add_constraint(eng, b, eng.eq_const(c, static_cast<uint64_t>(-t.constant)));
    add_constraint(eng, b, eng.plus(nxt, c, cur));
    cur = nxt;
  }
  b.var = cur;
  return b;
}

inline PredicateAutomaton with_bindings(PredicateEngine& eng, PredicateAutomaton p,
                                        std::initializer_list<TermBinding*> bs) {
  for (TermBinding* b : bs)
    if (b->constraint) p = eng.conj(p, *b->constraint);
  for (TermBinding* b : bs)
    for (const std::string& v : b->fresh) p = eng.exists(p, v);
  return p;
}

}  // namespace detail

inline PredicateAutomaton compile_formula(PredicateEngine& eng, const Formula& f) {
  using detail::bind_term;
  using detail::with_bindings;
  switch (f.kind) {
    case Formula::Kind::Cmp: {
      detail::TermBinding l = bind_term(eng, f.lhs), r = bind_term(eng, f.rhs);
      PredicateAutomaton p;
      if (f.op == "=")
        p = eng.eq(l.var, r.var);
      else if (f.op == "!=")
        p = eng.neg(eng.eq(l.var, r.var));
      else if (f.op == "<")
        p = eng.less(l.var, r.var);
      else if (f.op == "<=")
        p = eng.leq(l.var, r.var);
      else if (f.op == ">")
        p = eng.less(r.var, l.var);
      else if (f.op == ">=")
        p = eng.leq(r.var, l.var);
      else
        throw DomainError("unknown comparison " + f.op);
      return with_bindings(eng, std::move(p), {&l, &r});
    }
    case Formula::Kind::WordLetter: {
      detail::TermBinding l = bind_term(eng, f.lhs);
      PredicateAutomaton p = eng.word_is(l.var, f.letter);
      if (f.negated_word) p = eng.neg(p);
      return with_bindings(eng, std::move(p), {&l});
    }
    case Formula::Kind::WordCmp: {
      detail::TermBinding l = bind_term(eng, f.lhs), r = bind_term(eng, f.rhs);
      std::string zero = eng.fresh();
      const PredicateAutomaton& cmp = f.negated_word ? eng.word_neq_at() : eng.word_eq_at();
      PredicateAutomaton p = eng.conj(eng.eq_const(zero, 0),
                                      eng.apply(cmp, {zero, l.var, r.var}));
      p = eng.exists(p, zero);
      return with_bindings(eng, std::move(p), {&l, &r});
    }
    case Formula::Kind::Not:
      return eng.neg(compile_formula(eng, *f.kids[0]));
    case Formula::Kind::And:
      return eng.conj(compile_formula(eng, *f.kids[0]), compile_formula(eng, *f.kids[1]));
    case Formula::Kind::Or:
      return eng.disj(compile_formula(eng, *f.kids[0]), compile_formula(eng, *f.kids[1]));
    case Formula::Kind::Implies:
      return eng.disj(eng.neg(compile_formula(eng, *f.kids[0])),
                      compile_formula(eng, *f.kids[1]));
    case Formula::Kind::Iff: {
      PredicateAutomaton a = compile_formula(eng, *f.kids[0]);
      PredicateAutomaton b = compile_formula(eng, *f.kids[1]);
      return eng.disj(eng.conj(a, b), eng.conj(eng.neg(a), eng.neg(b)));
    }
    case Formula::Kind::Exists: {
      PredicateAutomaton p = compile_formula(eng, *f.kids[0]);
      for (const std::string& v : f.qvars) p = eng.exists(p, v);
      return p;
    }
    case Formula::Kind::Forall: {
      PredicateAutomaton p = compile_formula(eng, *f.kids[0]);
      for (const std::string& v : f.qvars) p = eng.forall(p, v);
      return p;
    }
  }
  throw DomainError("unreachable formula kind");
}

// --- parser ----------------------------------------------------------------
//
//   formula   := iff
//   iff       := implies ( "<=>" implies )*
//   implies   := or ( "=>" or )*            (right-associative)
//   or        := and ( "|" and )*
//   and       := unary ( "&" unary )*
//   unary     := "~" unary | "A" vars iff | "E" vars iff | "(" formula ")" | atom
//   atom      := term cmp term | "T[" term "]" ("="|"!=") ( digit | "T[" term "]" )
//   term      := factor ( ("+"|"-") factor )*
//   factor    := identifier | number
//
// mirroring the published predicate syntax; variables are identifiers not
// starting with a digit, T names the word under consideration.

class FormulaParser {
 public:
  explicit FormulaParser(std::string text) : text_(std::move(text)) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input at offset " + std::to_string(pos_));
    return f;
  }

 private:
  FormulaPtr parse_iff() {
    FormulaPtr f = parse_implies();
    while (eat("<=>")) {
      FormulaPtr g = parse_implies();
      f = node(Formula::Kind::Iff, {f, g});
    }
    return f;
  }

  FormulaPtr parse_implies() {
    FormulaPtr f = parse_or();
    if (eat("=>")) {
      FormulaPtr g = parse_implies();
      return node(Formula::Kind::Implies, {f, g});
    }
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (eat("|")) f = node(Formula::Kind::Or, {f, parse_and()});
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (eat("&")) f = node(Formula::Kind::And, {f, parse_unary()});
    return f;
  }

  FormulaPtr parse_unary() {
    skip_ws();
    if (eat("~")) return node(Formula::Kind::Not, {parse_unary()});
    if (peek_quantifier()) {
      char q = text_[pos_++];
      std::vector<std::string> vars;
      vars.push_back(identifier());
      while (eat(",")) vars.push_back(identifier());
      FormulaPtr body = parse_iff();  // quantifiers scope maximally to the right
      FormulaPtr f = node(q == 'E' ? Formula::Kind::Exists : Formula::Kind::Forall, {body});
      f->qvars = vars;
      return f;
    }
    if (eat("(")) {
      FormulaPtr f = parse_iff();
      if (!eat(")")) throw ParseError("expected ) at offset " + std::to_string(pos_));
      return f;
    }
    return parse_atom();
  }

  FormulaPtr parse_atom() {
    skip_ws();
    if (word_ref_ahead()) {
      Term idx = word_index();
      std::string op = cmp_op();
      if (op != "=" && op != "!=") throw ParseError("word letters compare with = or != only");
      skip_ws();
      FormulaPtr f = std::make_shared<Formula>();
      f->negated_word = op == "!=";
      if (word_ref_ahead()) {
        f->kind = Formula::Kind::WordCmp;
        f->lhs = idx;
        f->rhs = word_index();
      } else {
        f->kind = Formula::Kind::WordLetter;
        f->lhs = idx;
        f->letter = static_cast<int>(number());
      }
      return f;
    }
    Term l = term();
    std::string op = cmp_op();
    Term r = term();
    FormulaPtr f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Cmp;
    f->op = op;
    f->lhs = l;
    f->rhs = r;
    return f;
  }

  Term term() {
    Term t;
    factor(t, +1);
    for (;;) {
      skip_ws();
      if (eat("+"))
        factor(t, +1);
      else if (pos_ < text_.size() && text_[pos_] == '-' && !starts_with("->")) {
        ++pos_;
        factor(t, -1);
      } else
        break;
    }
    return t;
  }

  void factor(Term& t, int sign) {
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      t.constant += sign * static_cast<int64_t>(number());
    } else {
      if (sign < 0) throw ParseError("cannot subtract a variable");
      t.vars.push_back(identifier());
    }
  }

  Term word_index() {
    pos_ += 2;  // consume "T["
    Term t = term();
    skip_ws();
    if (!eat("]")) throw ParseError("expected ] at offset " + std::to_string(pos_));
    return t;
  }

  std::string cmp_op() {
    skip_ws();
    for (const char* op : {"<=", ">=", "!=", "<=>", "<", ">", "="}) {
      if (std::string(op) == "<=>") continue;
      if (starts_with(op) && !(std::string(op) == "<=" && starts_with("<=>"))) {
        pos_ += std::string(op).size();
        return op;
      }
    }
    throw ParseError("expected comparison at offset " + std::to_string(pos_));
  }

  bool word_ref_ahead() {
    skip_ws();
    return starts_with("T[");
  }

  bool peek_quantifier() {
    skip_ws();
    if (pos_ >= text_.size() || (text_[pos_] != 'A' && text_[pos_] != 'E')) return false;
    size_t j = pos_ + 1;
    while (j < text_.size() && text_[j] == ' ') ++j;
    return j < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[j])) || text_[j] == '_');
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start])))
      throw ParseError("expected identifier at offset " + std::to_string(start));
    return text_.substr(start, pos_ - start);
  }

  uint64_t number() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected number at offset " + std::to_string(start));
    return std::stoull(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool starts_with(const std::string& s) const { return text_.compare(pos_, s.size(), s) == 0; }

  bool eat(const std::string& s) {
    skip_ws();
    if (!starts_with(s)) return false;
    pos_ += s.size();
    return true;
  }

  static FormulaPtr node(Formula::Kind k, std::vector<FormulaPtr> kids) {
    FormulaPtr f = std::make_shared<Formula>();
    f->kind = k;
    f->kids = std::move(kids);
    return f;
  }

  std::string text_;
  size_t pos_ = 0;
};

inline FormulaPtr parse_formula(const std::string& text) {
  return FormulaParser(text).parse();
}

}  // namespace winshift

#endif
