#include "dendri/gsbcheck.hpp"

#include <algorithm>

#include "dendri/oracle.hpp"

namespace dendri {

std::string to_string(CompositionKind k) { return k == CompositionKind::RightMult ? "right_mult" : "inclusion"; }

namespace {

std::vector<std::vector<LWord>> words_by_degree(std::size_t max_degree, std::size_t n) {
  std::vector<std::vector<LWord>> out(max_degree + 1);
  for (std::size_t d = 1; d <= max_degree; ++d) out[d] = enumerate_normal_lwords(d, n).words;
  return out;
}

template <class F>
void for_each_tuple(const std::vector<std::vector<LWord>>& words, std::size_t parts, std::size_t budget,
                    std::vector<LWord>& current, F&& f) {
  if (current.size() == parts) {
    f(current);
    return;
  }
  const std::size_t still_needed = parts - current.size() - 1;
  for (std::size_t d = 1; d + still_needed <= budget && d < words.size(); ++d) {
    for (const auto& w : words[d]) {
      current.push_back(w);
      for_each_tuple(words, parts, budget - d, current, f);
      current.pop_back();
    }
  }
}

bool is_prefix(const Path& p, const Path& q) {
  return p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin());
}

bool starts_with(const Path& rel, std::initializer_list<Side> prefix) {
  return rel.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), rel.begin());
}

int rule_index(RuleId r) { return static_cast<int>(r); }

Generator cycled(std::size_t i, std::size_t n) { return Generator{static_cast<std::uint32_t>((i - 1) % n + 1)}; }

}  // namespace

CompositionReport check_right_mult(RuleId rule, std::span<const LWord> bindings, const LWord& v, Alphabet alphabet,
                                   Rewriter& rewriter) {
  if (rule == RuleId::F1)
    throw std::invalid_argument("f1 has a Prec-topped leading word; it forms no right-multiplication composition");
  Polynomial f = rule_polynomial(rule, bindings, alphabet);
  Polynomial composed = mul(f, Op::Prec, Polynomial::monomial(alphabet, v));
  LWord bound = leading(composed).first;
  Reduction red = rewriter.reduce(composed);

  CompositionReport r{CompositionKind::RightMult, {rule}, bound, red.normal_form, red.normal_form.is_zero(),
                      red.max_rewritten, true, rule == RuleId::F2 ? "1" : "2"};
  r.within_bound = !r.max_intermediate || compare(*r.max_intermediate, bound) <= 0;
  return r;
}

CompositionReport check_right_mult(RuleId rule, std::span<const LWord> bindings, const LWord& v, Alphabet alphabet) {
  Rewriter rewriter(alphabet);
  return check_right_mult(rule, bindings, v, alphabet, rewriter);
}

std::vector<CompositionReport> check_all_right_mult(std::size_t max_degree, std::size_t n) {
  const Alphabet alphabet{n};
  Rewriter rewriter(alphabet);
  const auto words = words_by_degree(max_degree, n);
  std::vector<CompositionReport> out;
  for (RuleId rule : {RuleId::F2, RuleId::F3}) {
    std::vector<LWord> tuple;
    // bindings followed by the right factor v
    for_each_tuple(words, arity(rule) + 1, max_degree, tuple, [&](const std::vector<LWord>& t) {
      std::span<const LWord> all(t);
      out.push_back(check_right_mult(rule, all.first(arity(rule)), t.back(), alphabet, rewriter));
    });
  }
  return out;
}

std::string composition_case(const Redex& a, const Redex& b) {
  const Redex* outer;
  const Redex* inner;
  if (a.path != b.path && is_prefix(a.path, b.path)) {
    outer = &a;
    inner = &b;
  } else if (a.path != b.path && is_prefix(b.path, a.path)) {
    outer = &b;
    inner = &a;
  } else {
    return "disjoint";
  }
  const Path rel(inner->path.begin() + static_cast<std::ptrdiff_t>(outer->path.size()), inner->path.end());
  const int family = 3 + 3 * rule_index(outer->rule) + rule_index(inner->rule);
  const std::string prefix = std::to_string(family) + ".";

  using S = Side;
  if (outer->rule == RuleId::F3) {
    if (starts_with(rel, {S::Left, S::Left, S::Left})) return prefix + "1";
    if (starts_with(rel, {S::Left, S::Left, S::Right})) return prefix + "2";
    if (starts_with(rel, {S::Left, S::Right})) return prefix + "3";
    if (starts_with(rel, {S::Right})) return prefix + "4";
    if (rel == Path{S::Left, S::Left} && inner->rule == RuleId::F2) return prefix + "5";
    if (rel == Path{S::Left} && inner->rule == RuleId::F3) return prefix + "5";
    if (rel == Path{S::Left, S::Left} && inner->rule == RuleId::F3) return prefix + "6";
  } else {
    if (starts_with(rel, {S::Left, S::Left})) return prefix + "1";
    if (starts_with(rel, {S::Left, S::Right})) return prefix + "2";
    if (starts_with(rel, {S::Right})) return prefix + "3";
    if (rel == Path{S::Left}) return prefix + "4";
  }
  throw std::logic_error("unclassified overlap of " + to_string(outer->rule) + " and " + to_string(inner->rule) +
                         " at " + to_string(rel));
}

CompositionReport check_overlap(const LWord& w, const Redex& a, const Redex& b, Alphabet alphabet,
                                Rewriter& rewriter) {
  Polynomial diff = rewrite_step(w, a, alphabet) - rewrite_step(w, b, alphabet);
  Reduction red = rewriter.reduce(diff);
  std::vector<RuleId> rules{a.rule, b.rule};
  if (is_prefix(b.path, a.path)) std::swap(rules[0], rules[1]);
  CompositionReport r{CompositionKind::Inclusion, rules,          w,    red.normal_form, red.normal_form.is_zero(),
                      red.max_rewritten,          true,           composition_case(a, b)};
  r.within_bound = !r.max_intermediate || compare(*r.max_intermediate, w) < 0;
  return r;
}

std::vector<CompositionReport> check_local_confluence(std::size_t max_degree, std::size_t n) {
  const Alphabet alphabet{n};
  Rewriter rewriter(alphabet);
  std::vector<CompositionReport> out;
  for (std::size_t d = 3; d <= max_degree; ++d) {
    std::vector<CompositionReport> level;
    for (const auto& w : enumerate_normal_lwords(d, n).words) {
      auto redexes = find_redexes(w);
      for (std::size_t i = 0; i < redexes.size(); ++i)
        for (std::size_t j = i + 1; j < redexes.size(); ++j)
          level.push_back(check_overlap(w, redexes[i], redexes[j], alphabet, rewriter));
    }
    // Enumeration is greatest-first; flip to ascending, keeping pair order.
    std::stable_sort(level.begin(), level.end(), [](const CompositionReport& x, const CompositionReport& y) {
      return compare(x.ambiguity_word, y.ambiguity_word) < 0;
    });
    std::move(level.begin(), level.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<CompositionReport> check_named_cases(std::size_t n) {
  if (n < 1) throw std::invalid_argument("alphabet size must be at least 1");
  const Alphabet alphabet{n};
  Rewriter rewriter(alphabet);
  auto g = [n](std::size_t i) { return LWord::leaf(cycled(i, n)); };
  auto prec = [](LWord l, LWord r) { return LWord::node(Op::Prec, std::move(l), std::move(r)); };
  auto succ = [](LWord l, LWord r) { return LWord::node(Op::Succ, std::move(l), std::move(r)); };

  struct Case {
    LWord w;
    Path inner;
  };
  const std::vector<Case> cases{
      // 6.4: ((x<y)<z)>c
      {succ(prec(prec(g(1), g(2)), g(3)), g(4)), {Side::Left}},
      // 10.5: (((a<b)>c)>z)>v
      {succ(succ(succ(prec(g(1), g(2)), g(3)), g(4)), g(5)), {Side::Left, Side::Left}},
      // 11.6: ((((a>b)>c)>d)>z)>v
      {succ(succ(succ(succ(succ(g(1), g(2)), g(3)), g(4)), g(5)), g(6)), {Side::Left, Side::Left}},
  };

  std::vector<CompositionReport> out;
  for (const auto& c : cases) {
    auto redexes = find_redexes(c.w);
    auto root = std::find_if(redexes.begin(), redexes.end(), [](const Redex& r) { return r.path.empty(); });
    auto inner = std::find_if(redexes.begin(), redexes.end(), [&](const Redex& r) { return r.path == c.inner; });
    if (root == redexes.end() || inner == redexes.end())
      throw std::logic_error("named ambiguity lost its redexes: " + to_string(c.w));
    out.push_back(check_overlap(c.w, *root, *inner, alphabet, rewriter));
  }
  return out;
}

std::set<int> case_families(const std::vector<CompositionReport>& reports) {
  std::set<int> families;
  for (const auto& r : reports) {
    if (r.case_label == "disjoint") continue;
    families.insert(std::stoi(r.case_label.substr(0, r.case_label.find('.'))));
  }
  return families;
}

nlohmann::json to_json(const CompositionReport& r) {
  nlohmann::json rules = nlohmann::json::array();
  for (RuleId id : r.rules) rules.push_back(to_string(id));
  return {{"kind", to_string(r.kind)},
          {"rules", std::move(rules)},
          {"case", r.case_label},
          {"ambiguity_word", to_string(r.ambiguity_word)},
          {"residual", to_json(r.residual)},
          {"ok", r.ok},
          {"max_intermediate", r.max_intermediate ? nlohmann::json(to_string(*r.max_intermediate)) : nlohmann::json()},
          {"within_bound", r.within_bound}};
}

}  // namespace dendri
