#pragma once

// Reduction modulo the dendriform relations f1, f2, f3 to linear
// combinations of normal DD-words.
//
//   f1(x,y,z)   = (x<y)<z - x<(y<z) - x<(y>z)
//   f2(x,y,z)   = (x<y)>z + (x>y)>z - x>(y>z)
//   f3(x,y,z,v) = ((x>y)>z)>v - (x>y)>(z>v) + (x>(y<z))>v
//
// The first term of each is its leading word.

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dendri/poly.hpp"

namespace dendri {

enum class RuleId { F1, F2, F3 };

std::string to_string(RuleId r);
std::size_t arity(RuleId r);

struct Redex {
  RuleId rule;
  Path path;
  /// Matched subterms x, y, z[, v].
  std::vector<LWord> bindings;

  friend bool operator==(const Redex&, const Redex&) = default;
};

class StaleRedex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Leaf, x<v, x>v or (x>u1)>u2 with x a generator and v, u1, u2 normal
/// DD-words.
bool is_dd_normal(const LWord& u);

/// The leading-word pattern of `rule` matched at the root of u, if any.
std::optional<Redex> match_at_root(const LWord& u);

/// Every redex of u, in preorder (root, left subtree, right subtree).
std::vector<Redex> find_redexes(const LWord& u);

/// Leading word of the rule instance: (x<y)<z, (x<y)>z or ((x>y)>z)>v,
/// evaluated in the free L-algebra.
LWord rule_leading_word(RuleId rule, std::span<const LWord> bindings);

/// The rule instantiated at `bindings`; throws std::invalid_argument on an
/// arity mismatch.
Polynomial rule_polynomial(RuleId rule, std::span<const LWord> bindings, Alphabet alphabet);

/// Replaces the occurrence of the leading word at r.path by the remaining
/// (negated) terms of the rule. Every resulting word is below u.
Polynomial rewrite_step(const LWord& u, const Redex& r, Alphabet alphabet);

/// Outcome of reducing a polynomial.
struct Reduction {
  Polynomial normal_form;
  /// Greatest word that had to be rewritten; empty if p was already reduced.
  std::optional<LWord> max_rewritten;
};

/// Memoizing reducer for one alphabet. Strategy: always rewrite the
/// greatest reducible word at its first (preorder) redex.
class Rewriter {
 public:
  explicit Rewriter(Alphabet alphabet) : alphabet_(alphabet) {}

  Alphabet alphabet() const noexcept { return alphabet_; }

  const Polynomial& word_normal_form(const LWord& u);
  Reduction reduce(const Polynomial& p);
  Polynomial normal_form(const Polynomial& p) { return reduce(p).normal_form; }

  std::size_t cache_size() const noexcept { return memo_.size(); }

 private:
  Alphabet alphabet_;
  std::unordered_map<LWord, Polynomial, LWordHash> memo_;
};

/// Uses a per-thread Rewriter for p's alphabet.
Polynomial normal_form(const Polynomial& p);
Reduction reduce(const Polynomial& p);

}  // namespace dendri
