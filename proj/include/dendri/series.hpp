#pragma once

// Dimensions and Hilbert series of the free dendriform algebra on n
// letters, computed three independent ways, plus the growth statistic
// behind the infinite Gelfand-Kirillov dimension.

#include <string>
#include <vector>

#include "dendri/poly.hpp"

namespace dendri {

/// Truncated formal power series with exact coefficients c[0..order].
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : c_(order + 1, 0) {}

  std::size_t order() const noexcept { return c_.size() - 1; }
  Rational& operator[](std::size_t i) { return c_.at(i); }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& a);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const Rational& a, PowerSeries s) { return s *= a; }
  /// Cauchy product truncated to min(order).
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// Divides by t; the constant term must vanish. Order drops by one.
  PowerSeries shifted_down() const;

  /// c0 + c1 t, truncated at `order`.
  static PowerSeries linear(std::size_t order, const Rational& c0, const Rational& c1);

 private:
  std::vector<Rational> c_;
};

struct DimensionRow {
  std::size_t m = 0;
  Integer dim;
  /// dim = f_m * n^m
  Integer f_m;
};

struct DimensionTable {
  std::size_t n = 1;
  std::vector<DimensionRow> rows;
};

struct SeriesCoefficients {
  std::size_t n = 1;
  /// coeffs[0] is the coefficient of t^1.
  std::vector<Rational> coeffs;
};

/// f(0) = 1, f(m) = sum_{i<m} f(i) f(m-1-i). Memoized.
Integer f_recursive(std::size_t m);

/// (2m)! n^m / ((m+1)! m!); m >= 1, n >= 1.
Integer dim_closed(std::size_t m, std::size_t n);

/// Binomial expansion of sqrt(1 - 4nt) to t^order.
PowerSeries sqrt_one_minus_4nt(std::size_t order, std::size_t n);

/// Coefficients of (1 - 2nt - sqrt(1 - 4nt)) / (2nt) for t^1..t^m_max.
SeriesCoefficients series_from_gf(std::size_t m_max, std::size_t n);

/// Hilbert series of the subspaces spanned by x<u, x>u and (x>u1)>u2,
/// as power series truncated at t^m_max (constant term zero).
struct SubspaceSeries {
  PowerSeries a, b, c;
};
SubspaceSeries abc_series(std::size_t m_max, std::size_t n);

enum class DimensionMethod { Recursive, Closed, GeneratingFunction };

DimensionTable dimension_table(std::size_t m_max, std::size_t n, DimensionMethod method);

/// Multiple-precision binary float (MPFR), 200-bit mantissa.
class BigFloat {
 public:
  static constexpr long kPrecisionBits = 200;

  BigFloat();
  explicit BigFloat(const Integer& z);
  explicit BigFloat(double x);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(BigFloat o) noexcept;
  ~BigFloat();

  friend BigFloat log(const BigFloat& x);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return (a <=> b) == 0; }

  /// Scientific-free decimal with `digits` significant digits.
  std::string to_string(int digits = 30) const;
  double to_double() const;

 private:
  struct Impl;
  Impl* impl_;
};

/// ln(dim DD_d) / ln d.
struct GKStatistic {
  std::size_t d = 0;
  std::size_t n = 1;
  BigFloat value;
};

GKStatistic gk_statistic(std::size_t d, std::size_t n);

nlohmann::json to_json(const DimensionTable& t);
nlohmann::json to_json(const GKStatistic& g);

}  // namespace dendri
