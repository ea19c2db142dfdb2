#include "gap/power_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "gap/errors.hpp"

namespace gap {

std::vector<Rational> binomial_row(unsigned n) {
  std::vector<Rational> row;
  row.reserve(n + 1);
  mpz_class value = 1;
  for (unsigned k = 0; k <= n; ++k) {
    row.emplace_back(value);
    value *= n - k;
    value /= k + 1;
  }
  return row;
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("PowerSeries needs at least one coefficient");
}

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<Rational>(order + 1));
}

PowerSeries PowerSeries::constant(const Rational& value, std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = value;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::exponential(std::size_t order, const Rational& rate) {
  std::vector<Rational> c;
  c.reserve(order + 1);
  Rational power(1);
  for (std::size_t k = 0; k <= order; ++k) {
    c.push_back(power);
    power *= rate;
  }
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::variable(std::size_t order) {
  std::vector<Rational> c(order + 1);
  if (order >= 1) c[1] = Rational(1);
  return PowerSeries(std::move(c));
}

std::optional<std::size_t> PowerSeries::valuation() const {
  const auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
  if (it == coeffs_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - coeffs_.begin());
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

PowerSeries operator+(const PowerSeries& lhs, const PowerSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = lhs[k] + rhs[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& s) { return Rational(-1) * s; }

PowerSeries operator-(const PowerSeries& lhs, const PowerSeries& rhs) { return lhs + (-rhs); }

PowerSeries operator*(const Rational& scalar, const PowerSeries& s) {
  std::vector<Rational> c(s.coeffs().begin(), s.coeffs().end());
  for (auto& x : c) x *= scalar;
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  return PowerSeries(binomial_convolution(lhs.coeffs(), rhs.coeffs(), order));
}

PowerSeries divide(const PowerSeries& num, const PowerSeries& den) {
  const auto den_val = den.valuation();
  if (!den_val) throw Error(Errc::division_by_zero_series, "divisor series is zero");
  const auto num_val = num.valuation();
  if (num_val && *num_val < *den_val) {
    throw Error(Errc::pole_at_origin, "numerator valuation " + std::to_string(*num_val) +
                                          " below denominator valuation " + std::to_string(*den_val));
  }
  const std::size_t order = std::min(num.order(), den.order());
  if (*den_val > order) throw Error(Errc::division_by_zero_series, "divisor series is zero at the working order");
  const std::size_t shift = *den_val;
  const std::size_t out_order = order - shift;

  // Work with ordinary coefficients a_k = c_k / k! after dropping t^shift.
  std::vector<Rational> n(out_order + 1);
  std::vector<Rational> d(out_order + 1);
  for (std::size_t k = 0; k <= out_order; ++k) {
    const Rational kf = factorial(static_cast<unsigned>(k + shift));
    n[k] = num[k + shift] / kf;
    d[k] = den[k + shift] / kf;
  }
  std::vector<Rational> q(out_order + 1);
  for (std::size_t k = 0; k <= out_order; ++k) {
    Rational acc = n[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= d[i] * q[k - i];
    q[k] = acc / d[0];
  }
  for (std::size_t k = 0; k <= out_order; ++k) q[k] *= factorial(static_cast<unsigned>(k));
  return PowerSeries(std::move(q));
}

PowerSeries derivative(const PowerSeries& s) {
  if (s.order() == 0) throw Error(Errc::order_underflow, "cannot differentiate an order-0 series");
  return PowerSeries(std::vector<Rational>(s.coeffs().begin() + 1, s.coeffs().end()));
}

PowerSeries exp_neg_half_t_squared(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t m = 0; 2 * m <= order; ++m) {
    const auto mu = static_cast<unsigned>(m);
    c[2 * m] = factorial(2 * mu) * pow(Rational(-1, 2), mu) / factorial(mu);
  }
  return PowerSeries(std::move(c));
}

}  // namespace gap
