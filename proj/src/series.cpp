#include "dendri/series.hpp"

#include <mpfr.h>

#include <algorithm>
#include <mutex>

namespace dendri {

// PowerSeries

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& a) {
  for (auto& x : c_) x *= a;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  PowerSeries r(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

PowerSeries PowerSeries::shifted_down() const {
  if (sgn(c_[0]) != 0) throw std::domain_error("cannot divide by t: nonzero constant term " + c_[0].get_str());
  if (order() == 0) throw std::domain_error("cannot divide a constant series by t");
  PowerSeries r(order() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i];
  return r;
}

PowerSeries PowerSeries::linear(std::size_t order, const Rational& c0, const Rational& c1) {
  PowerSeries r(order);
  r.c_[0] = c0;
  if (order >= 1) r.c_[1] = c1;
  return r;
}

// Dimensions

Integer f_recursive(std::size_t m) {
  static std::mutex mutex;
  static std::vector<Integer> memo{Integer(1)};
  std::lock_guard lock(mutex);
  while (memo.size() <= m) {
    const std::size_t k = memo.size();
    Integer f = 0;
    for (std::size_t i = 0; i < k; ++i) f += memo[i] * memo[k - 1 - i];
    memo.push_back(f);
  }
  return memo[m];
}

namespace {

Integer factorial(std::size_t k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer power(std::size_t base, std::size_t exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

void require_positive(std::size_t value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

}  // namespace

Integer dim_closed(std::size_t m, std::size_t n) {
  require_positive(m, "degree");
  require_positive(n, "alphabet size");
  Integer num = factorial(2 * m) * power(n, m);
  Integer den = factorial(m + 1) * factorial(m);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw std::logic_error("closed form is not integral");
  return num / den;
}

PowerSeries sqrt_one_minus_4nt(std::size_t order, std::size_t n) {
  // (1 + s)^(1/2) = sum_i binom(1/2, i) s^i with s = -4nt.
  PowerSeries s(order);
  Rational binom = 1;
  Rational s_power = 1;
  const Rational s_coeff = -4 * Rational(static_cast<unsigned long>(n));
  const Rational half(1, 2);
  for (std::size_t i = 0; i <= order; ++i) {
    if (i > 0) {
      binom *= (half - Rational(static_cast<unsigned long>(i - 1))) / Rational(static_cast<unsigned long>(i));
      s_power *= s_coeff;
    }
    s[i] = binom * s_power;
  }
  return s;
}

SeriesCoefficients series_from_gf(std::size_t m_max, std::size_t n) {
  require_positive(m_max, "degree bound");
  require_positive(n, "alphabet size");
  const Rational nn(static_cast<unsigned long>(n));
  // Numerator to t^(m_max+1), so that after dividing by t we reach t^m_max.
  PowerSeries numerator = PowerSeries::linear(m_max + 1, 1, -2 * nn) - sqrt_one_minus_4nt(m_max + 1, n);
  if (sgn(numerator[0]) != 0 || sgn(numerator[1]) != 0)
    throw std::logic_error("numerator does not vanish to second order");
  PowerSeries h = Rational(1) / (2 * nn) * numerator.shifted_down();

  SeriesCoefficients out;
  out.n = n;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const Rational& c = h[m];
    if (c.get_den() != 1 || sgn(c) < 0)
      throw std::logic_error("coefficient of t^" + std::to_string(m) + " is not a nonnegative integer: " + c.get_str());
    out.coeffs.push_back(c);
  }
  return out;
}

SubspaceSeries abc_series(std::size_t m_max, std::size_t n) {
  require_positive(m_max, "degree bound");
  require_positive(n, "alphabet size");
  const Rational nn(static_cast<unsigned long>(n));

  // A = (1 - 2nt - sqrt(1-4nt)) / 2
  PowerSeries a = Rational(1, 2) * (PowerSeries::linear(m_max, 1, -2 * nn) - sqrt_one_minus_4nt(m_max, n));
  if (sgn(a[0]) != 0) throw std::logic_error("H(A, 0) must vanish");

  // C = (1 - (1-2nt) sqrt(1-4nt)) / (2nt) - 2 + nt
  PowerSeries q = PowerSeries::linear(m_max + 1, 1, 0) -
                  PowerSeries::linear(m_max + 1, 1, -2 * nn) * sqrt_one_minus_4nt(m_max + 1, n);
  PowerSeries c = Rational(1) / (2 * nn) * q.shifted_down();
  c[0] -= 2;
  if (m_max >= 1) c[1] += nn;
  if (sgn(c[0]) != 0 || (m_max >= 1 && sgn(c[1]) != 0)) throw std::logic_error("H(C) must start at t^2 or later");

  return {a, a, c};
}

DimensionTable dimension_table(std::size_t m_max, std::size_t n, DimensionMethod method) {
  require_positive(n, "alphabet size");
  DimensionTable t;
  t.n = n;
  SeriesCoefficients gf;
  if (method == DimensionMethod::GeneratingFunction && m_max >= 1) gf = series_from_gf(m_max, n);
  for (std::size_t m = 1; m <= m_max; ++m) {
    DimensionRow row;
    row.m = m;
    const Integer nm = power(n, m);
    switch (method) {
      case DimensionMethod::Recursive:
        row.f_m = f_recursive(m);
        row.dim = row.f_m * nm;
        break;
      case DimensionMethod::Closed:
        row.dim = dim_closed(m, n);
        row.f_m = row.dim / nm;
        break;
      case DimensionMethod::GeneratingFunction:
        row.dim = gf.coeffs[m - 1].get_num();
        row.f_m = row.dim / nm;
        break;
    }
    if (row.f_m * nm != row.dim) throw std::logic_error("dimension is not divisible by n^m");
    t.rows.push_back(std::move(row));
  }
  return t;
}

// BigFloat

struct BigFloat::Impl {
  mpfr_t x;
  Impl() { mpfr_init2(x, kPrecisionBits); }
  ~Impl() { mpfr_clear(x); }
  Impl(const Impl&) = delete;
  Impl& operator=(const Impl&) = delete;
};

BigFloat::BigFloat() : impl_(new Impl) { mpfr_set_zero(impl_->x, 1); }

BigFloat::BigFloat(const Integer& z) : impl_(new Impl) { mpfr_set_z(impl_->x, z.get_mpz_t(), MPFR_RNDN); }

BigFloat::BigFloat(double v) : impl_(new Impl) { mpfr_set_d(impl_->x, v, MPFR_RNDN); }

BigFloat::BigFloat(const BigFloat& o) : impl_(new Impl) { mpfr_set(impl_->x, o.impl_->x, MPFR_RNDN); }

BigFloat::BigFloat(BigFloat&& o) noexcept : impl_(o.impl_) { o.impl_ = nullptr; }

BigFloat& BigFloat::operator=(BigFloat o) noexcept {
  std::swap(impl_, o.impl_);
  return *this;
}

BigFloat::~BigFloat() { delete impl_; }

BigFloat log(const BigFloat& v) {
  BigFloat r;
  mpfr_log(r.impl_->x, v.impl_->x, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_div(r.impl_->x, a.impl_->x, b.impl_->x, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.impl_->x, b.impl_->x)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.impl_->x, b.impl_->x);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Rg", digits, impl_->x) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

double BigFloat::to_double() const { return mpfr_get_d(impl_->x, MPFR_RNDN); }

GKStatistic gk_statistic(std::size_t d, std::size_t n) {
  if (d < 2) throw std::invalid_argument("cutoff degree must be at least 2");
  require_positive(n, "alphabet size");
  GKStatistic g;
  g.d = d;
  g.n = n;
  g.value = log(BigFloat(dim_closed(d, n))) / log(BigFloat(Integer(static_cast<unsigned long>(d))));
  return g;
}

// JSON

nlohmann::json to_json(const DimensionTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) rows.push_back({{"m", r.m}, {"dim", r.dim.get_str()}, {"f_m", r.f_m.get_str()}});
  return {{"n", t.n}, {"rows", std::move(rows)}};
}

nlohmann::json to_json(const GKStatistic& g) {
  return {{"d", g.d}, {"n", g.n}, {"value", g.value.to_string(30)}};
}

}  // namespace dendri
