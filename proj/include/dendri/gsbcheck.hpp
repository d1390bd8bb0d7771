#pragma once

// Bounded-degree machine check that {f1, f2, f3} is a Groebner-Shirshov
// basis: right-multiplication compositions, inclusion compositions and
// three hand-picked ambiguities (6.4, 10.5, 11.6).

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dendri/rewrite.hpp"

namespace dendri {

enum class CompositionKind { RightMult, Inclusion };

std::string to_string(CompositionKind k);

struct CompositionReport {
  CompositionKind kind;
  /// One rule for right multiplication; outer then inner for inclusion.
  std::vector<RuleId> rules;
  /// Inclusion: the overlap word w. RightMult: leading word of f < v.
  LWord ambiguity_word;
  Polynomial residual;
  /// Residual is zero.
  bool ok = false;
  /// Greatest word rewritten while reducing the composition.
  std::optional<LWord> max_intermediate;
  /// max_intermediate < w for inclusion, <= leading(f < v) for right
  /// multiplication.
  bool within_bound = false;
  /// Case family: "1", "2" for right
  /// multiplication, "3.1".."11.6" for inclusion, "disjoint" for redexes
  /// at independent positions.
  std::string case_label;
};

/// f < v for f = rule(bindings). Only f2 and f3 qualify; f1 throws
/// std::invalid_argument.
CompositionReport check_right_mult(RuleId rule, std::span<const LWord> bindings, const LWord& v, Alphabet alphabet,
                                   Rewriter& rewriter);
CompositionReport check_right_mult(RuleId rule, std::span<const LWord> bindings, const LWord& v, Alphabet alphabet);

/// Right-multiplication compositions for f2 and f3 over every normal
/// binding tuple and right factor with total degree <= max_degree.
std::vector<CompositionReport> check_all_right_mult(std::size_t max_degree, std::size_t n);

/// Compares the two one-step reducts of w at redexes a and b.
CompositionReport check_overlap(const LWord& w, const Redex& a, const Redex& b, Alphabet alphabet,
                                Rewriter& rewriter);

/// Every redex pair of every normal word of degree <= max_degree.
/// Reports are sorted by ambiguity word (ascending), then by redex order.
std::vector<CompositionReport> check_local_confluence(std::size_t max_degree, std::size_t n);

/// Cases 6.4, 10.5 and 11.6 with pairwise distinct generators (cycled
/// when n is too small).
std::vector<CompositionReport> check_named_cases(std::size_t n);

/// Family label of the composition formed by two redexes of one word.
std::string composition_case(const Redex& a, const Redex& b);

/// Case families ("1".."11") seen in a batch of reports.
std::set<int> case_families(const std::vector<CompositionReport>& reports);

nlohmann::json to_json(const CompositionReport& r);

}  // namespace dendri
