#include "dendri/rewrite.hpp"

#include <map>

namespace dendri {

std::string to_string(RuleId r) {
  switch (r) {
    case RuleId::F1: return "f1";
    case RuleId::F2: return "f2";
    case RuleId::F3: return "f3";
  }
  return "?";
}

std::size_t arity(RuleId r) { return r == RuleId::F3 ? 4 : 3; }

bool is_dd_normal(const LWord& u) {
  if (u.is_leaf()) return true;
  const LWord& l = u.left();
  if (l.is_leaf()) return is_dd_normal(u.right());
  // (x > u1) > u2
  return u.op() == Op::Succ && l.op() == Op::Succ && l.left().is_leaf() && is_dd_normal(l.right()) &&
         is_dd_normal(u.right());
}

std::optional<Redex> match_at_root(const LWord& u) {
  if (u.is_leaf() || u.left().is_leaf()) return std::nullopt;
  const LWord& l = u.left();
  if (u.op() == Op::Prec && l.op() == Op::Prec)
    return Redex{RuleId::F1, {}, {l.left(), l.right(), u.right()}};
  if (u.op() == Op::Succ && l.op() == Op::Prec)
    return Redex{RuleId::F2, {}, {l.left(), l.right(), u.right()}};
  if (u.op() == Op::Succ && l.op() == Op::Succ && l.left().is_node(Op::Succ))
    return Redex{RuleId::F3, {}, {l.left().left(), l.left().right(), l.right(), u.right()}};
  return std::nullopt;
}

namespace {

void collect(const LWord& u, Path& path, std::vector<Redex>& out) {
  if (auto r = match_at_root(u)) {
    r->path = path;
    out.push_back(std::move(*r));
  }
  if (u.is_leaf()) return;
  path.push_back(Side::Left);
  collect(u.left(), path, out);
  path.back() = Side::Right;
  collect(u.right(), path, out);
  path.pop_back();
}

void require_arity(RuleId rule, std::span<const LWord> bindings) {
  if (bindings.size() != arity(rule))
    throw std::invalid_argument(to_string(rule) + " takes " + std::to_string(arity(rule)) + " arguments, got " +
                                std::to_string(bindings.size()));
}

}  // namespace

std::vector<Redex> find_redexes(const LWord& u) {
  std::vector<Redex> out;
  Path path;
  collect(u, path, out);
  return out;
}

LWord rule_leading_word(RuleId rule, std::span<const LWord> b) {
  require_arity(rule, b);
  switch (rule) {
    case RuleId::F1: return l_prec(l_prec(b[0], b[1]), b[2]);
    case RuleId::F2: return l_succ(l_prec(b[0], b[1]), b[2]);
    case RuleId::F3: return l_succ(l_succ(l_succ(b[0], b[1]), b[2]), b[3]);
  }
  throw std::invalid_argument("unknown rule");
}

Polynomial rule_polynomial(RuleId rule, std::span<const LWord> b, Alphabet alphabet) {
  require_arity(rule, b);
  for (const auto& w : b)
    if (!is_normal(w)) throw std::invalid_argument("binding is not a normal L-word: " + to_string(w));
  std::vector<Polynomial> m;
  for (const auto& w : b) m.push_back(Polynomial::monomial(alphabet, w));
  const Polynomial& x = m[0];
  const Polynomial& y = m[1];
  const Polynomial& z = m[2];
  switch (rule) {
    case RuleId::F1:
      return mul(mul(x, Op::Prec, y), Op::Prec, z) - mul(x, Op::Prec, mul(y, Op::Prec, z)) -
             mul(x, Op::Prec, mul(y, Op::Succ, z));
    case RuleId::F2:
      return mul(mul(x, Op::Prec, y), Op::Succ, z) + mul(mul(x, Op::Succ, y), Op::Succ, z) -
             mul(x, Op::Succ, mul(y, Op::Succ, z));
    case RuleId::F3: {
      const Polynomial& v = m[3];
      Polynomial xy = mul(x, Op::Succ, y);
      return mul(mul(xy, Op::Succ, z), Op::Succ, v) - mul(xy, Op::Succ, mul(z, Op::Succ, v)) +
             mul(mul(x, Op::Succ, mul(y, Op::Prec, z)), Op::Succ, v);
    }
  }
  throw std::invalid_argument("unknown rule");
}

Polynomial rewrite_step(const LWord& u, const Redex& r, Alphabet alphabet) {
  const LWord* sub = nullptr;
  try {
    sub = &u.at(r.path);
  } catch (const std::out_of_range&) {
    throw StaleRedex("no subterm at " + to_string(r.path) + " in " + to_string(u));
  }
  auto m = match_at_root(*sub);
  if (!m || m->rule != r.rule || m->bindings != r.bindings)
    throw StaleRedex(to_string(r.rule) + " does not match at " + to_string(r.path) + " in " + to_string(u));

  Polynomial lower = Polynomial::monomial(alphabet, *sub) - rule_polynomial(r.rule, r.bindings, alphabet);
  Polynomial out = apply_context(Context::around(u, r.path), lower);
  for (const auto& [w, c] : out.terms())
    if (compare(w, u) >= 0)
      throw std::logic_error("rewrite of " + to_string(u) + " produced a word that is not smaller: " + to_string(w));
  return out;
}

const Polynomial& Rewriter::word_normal_form(const LWord& u) {
  if (auto it = memo_.find(u); it != memo_.end()) return it->second;
  Polynomial nf(alphabet_);
  auto redexes = find_redexes(u);
  if (redexes.empty()) {
    nf.add_term(u, 1);
  } else {
    Polynomial step = rewrite_step(u, redexes.front(), alphabet_);
    for (const auto& [w, c] : step.terms()) nf.add_scaled(c, word_normal_form(w));
  }
  // Node-based map: references stay valid across later insertions.
  return memo_.emplace(u, std::move(nf)).first->second;
}

Reduction Rewriter::reduce(const Polynomial& p) {
  // Equivalent to repeatedly rewriting the greatest reducible word of the
  // working polynomial, since each word's rewrite depends only on the word.
  Reduction out{Polynomial(p.alphabet()), std::nullopt};
  if (!(p.alphabet() == alphabet_))
    throw AlphabetMismatch("rewriter alphabet differs from polynomial alphabet");
  for (const auto& [w, c] : p.terms()) {
    if (is_dd_normal(w)) {
      out.normal_form.add_term(w, c);
      continue;
    }
    if (!out.max_rewritten) out.max_rewritten = w;
    out.normal_form.add_scaled(c, word_normal_form(w));
  }
  return out;
}

namespace {

Rewriter& thread_rewriter(Alphabet a) {
  thread_local std::map<std::size_t, Rewriter> rewriters;
  return rewriters.try_emplace(a.size, a).first->second;
}

}  // namespace

Polynomial normal_form(const Polynomial& p) { return thread_rewriter(p.alphabet()).normal_form(p); }

Reduction reduce(const Polynomial& p) { return thread_rewriter(p.alphabet()).reduce(p); }

}  // namespace dendri
