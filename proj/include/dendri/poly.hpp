#pragma once

// Elements of the free L-algebra: finite rational combinations of normal
// L-words.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "dendri/terms.hpp"

namespace dendri {

using Rational = mpq_class;
using Integer = mpz_class;

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Polynomial {
 public:
  /// Terms, greatest word first. Coefficients are never zero.
  using Terms = std::map<LWord, Rational, Descending>;

  explicit Polynomial(Alphabet alphabet) : alphabet_(alphabet) {}

  /// c * u, for a normal word u over `alphabet`.
  static Polynomial monomial(Alphabet alphabet, const LWord& u, const Rational& c = 1);

  Alphabet alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of u (zero when absent).
  Rational coefficient(const LWord& u) const;

  /// Adds c * u in place.
  void add_term(const LWord& u, const Rational& c);
  /// Adds c * p in place.
  void add_scaled(const Rational& c, const Polynomial& p);

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_alphabet(const Polynomial& q) const;

  Alphabet alphabet_;
  Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Rational& a, const Polynomial& p);

/// Bilinear extension of l_succ / l_prec.
Polynomial mul(const Polynomial& p, Op op, const Polynomial& q);

/// Greatest word and its coefficient; throws std::domain_error on zero.
std::pair<LWord, Rational> leading(const Polynomial& p);

/// Sum of a_i * normalize(c|u_i).
Polynomial apply_context(const Context& c, const Polynomial& p);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  Polynomial r = p;
  r -= q;
  return r;
}
inline Polynomial operator-(const Polynomial& p) { return scale(-1, p); }
inline Polynomial operator*(const Rational& a, const Polynomial& p) { return scale(a, p); }

/// "(x1 < x2) - 2*(x1 > x2)"; "0" for the zero polynomial. Greatest word first.
std::string to_string(const Polynomial& p);

/// {"n": n, "terms": [{"coeff": "p/q", "word": "..."}, ...]}, greatest word first.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace dendri
