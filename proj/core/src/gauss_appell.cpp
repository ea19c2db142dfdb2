#include "gap/gauss_appell.hpp"

#include <span>
#include <vector>

#include "gap/errors.hpp"
#include "gap/power_series.hpp"

namespace gap {

namespace {

std::vector<Rational> numbers_to(const AppellFamily& family, std::size_t order) {
  return appell_numbers(family, order).values;
}

}  // namespace

Polynomial gap_explicit(const AppellFamily& family, const HypergeomParams& params, unsigned n) {
  const GaussCoefficients phi(params, n);
  const auto a = numbers_to(family, n);
  const auto row = binomial_row(n);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = row[k] * phi[k] * a[n - k];
  return Polynomial(std::move(c));
}

Polynomial gap_explicit_flipped(const AppellFamily& family, const HypergeomParams& params, unsigned n) {
  const GaussCoefficients phi(params, n);
  const auto a = numbers_to(family, n);
  const auto row = binomial_row(n);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[n - k] += row[k] * phi[n - k] * a[k];
  return Polynomial(std::move(c));
}

Polynomial gap_from_generating(const AppellFamily& family, const HypergeomParams& params, unsigned n) {
  const PowerSeries a = family.series(n);
  const GaussCoefficients phi(params, n);
  // 2F1(a,b;c;xt) = sum_k (phi_k x^k) t^k/k!: a series with polynomial coefficients.
  std::vector<Polynomial> hyper;
  hyper.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) hyper.push_back(Polynomial::monomial(phi[k], k));
  const auto product = binomial_convolution(a.coeffs(), std::span<const Polynomial>(hyper), n);
  return product[n];
}

Polynomial gap_by_recurrence(const AppellFamily& family, const HypergeomParams& params, unsigned n) {
  const auto a = numbers_to(family, 0);
  if (a[0].is_zero()) {
    throw Error(Errc::not_strict_appell, family.name() + " has A_0 = 0; the recurrence needs beta_k");
  }
  require_valid(params, n);
  const auto beta = beta_coefficients(family, n);
  const Rational phi1 = params.a * params.b / params.c;
  const HypergeomParams shifted = n > 0 ? shift_params(params, 1, n) : params;

  std::vector<Polynomial> table;
  table.reserve(n + 1);
  table.push_back(Polynomial::constant(a[0]));
  for (unsigned k = 0; k < n; ++k) {
    Polynomial next = phi1 * (Polynomial::monomial(Rational(1), 1) * gap_explicit(family, shifted, k));
    const auto row = binomial_row(k);
    for (unsigned j = 0; j <= k; ++j) next += (row[j] * beta[j]) * table[k - j];
    table.push_back(std::move(next));
  }
  return table[n];
}

bool gap_argument_shift_check(const AppellFamily& family, const HypergeomParams& params, unsigned n,
                              const Rational& x, const Rational& y) {
  if (y.is_zero()) throw Error(Errc::zero_shift_base, "summation formula needs y != 0");
  const Rational lhs = gap_explicit(family, params, n).evaluate(x + y);

  const GaussCoefficients phi(params, n);
  const auto a = numbers_to(family, n);
  const auto row = binomial_row(n);
  const Rational ratio = Rational(1) + x / y;
  Rational rhs(0);
  for (unsigned k = 0; k <= n; ++k) rhs += row[k] * pow(ratio, k) * phi[k] * pow(y, k) * a[n - k];
  return lhs == rhs;
}

bool derivative_identity_check(const AppellFamily& family, const HypergeomParams& params, unsigned n) {
  if (n == 0) return gap_explicit(family, params, 0).derivative().is_zero();
  const Polynomial lhs = gap_x_derivative(gap_explicit(family, params, n));
  const Rational phi1 = params.a * params.b / params.c;
  const Polynomial rhs =
      (Rational(static_cast<long>(n)) * phi1) * gap_explicit(family, shift_params(params, 1, n - 1), n - 1);
  return lhs == rhs;
}

bool chi_shift_identity_check(const AppellFamily& family, const HypergeomParams& params, unsigned n,
                              unsigned m) {
  const GaussCoefficients phi(params, n + m);
  const auto a = numbers_to(family, n);
  const auto row = binomial_row(n);
  std::vector<Rational> lhs(n + 1);
  for (unsigned k = 0; k <= n; ++k) lhs[k] = row[k] * phi[k + m] * a[n - k];

  const Polynomial rhs = phi[m] * gap_explicit(family, shift_params(params, m, n), n);
  return Polynomial(std::move(lhs)) == rhs;
}

BivariatePolynomial bivariate_gap(const AppellFamily& family, const HypergeomParams& params, unsigned n) {
  const PowerSeries a = family.series(n);
  const GaussCoefficients phi(params, n / 2);

  // e^{xt}: coefficient of t^k/k! is x^k.
  std::vector<BivariatePolynomial> exp_xt;
  // 2F1(a,b;c;y t^2) = sum_j phi_j y^j t^{2j}/j!; at t^{2j}/(2j)! that is phi_j y^j (2j)!/j!.
  std::vector<BivariatePolynomial> hyper(n + 1);
  exp_xt.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) exp_xt.push_back(BivariatePolynomial::monomial(Rational(1), k, 0));
  for (unsigned j = 0; 2 * j <= n; ++j) {
    hyper[2 * j] = BivariatePolynomial::monomial(phi[j] * factorial(2 * j) / factorial(j), 0, j);
  }

  const auto partial = binomial_convolution(std::span<const BivariatePolynomial>(exp_xt),
                                            std::span<const BivariatePolynomial>(hyper), n);
  const auto full = binomial_convolution(a.coeffs(), std::span<const BivariatePolynomial>(partial), n);
  return full[n];
}

}  // namespace gap
