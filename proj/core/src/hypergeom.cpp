#include "gap/hypergeom.hpp"

#include "gap/errors.hpp"

namespace gap {

Rational pochhammer(const Rational& r, unsigned k) {
  Rational result(1);
  Rational factor = r;
  for (unsigned i = 0; i < k; ++i) {
    result *= factor;
    factor += Rational(1);
  }
  return result;
}

void require_valid(const HypergeomParams& params, std::size_t order) {
  const Rational& c = params.c;
  if (!c.is_integer() || c.sign() > 0) return;
  // c = -j with j >= 0: (c)_k = 0 for every k > j.
  const mpz_class j = -c.numerator();
  if (cmp(j, mpz_class(static_cast<unsigned long>(order))) < 0) {
    throw Error(Errc::invalid_parameter_c,
                "c = " + c.str() + " makes (c)_k vanish for k <= " + std::to_string(order));
  }
}

GaussCoefficients::GaussCoefficients(const HypergeomParams& params, std::size_t order)
    : params_(params) {
  require_valid(params, order);
  phi_.reserve(order + 1);
  phi_.emplace_back(1);
  for (std::size_t k = 0; k < order; ++k) {
    const Rational step(static_cast<long>(k));
    phi_.push_back(phi_.back() * (params.a + step) * (params.b + step) / (params.c + step));
  }
}

GaussCoefficients gauss_coefficients(const HypergeomParams& params, std::size_t order) {
  return GaussCoefficients(params, order);
}

HypergeomParams shift_params(const HypergeomParams& params, unsigned m, std::size_t order) {
  const Rational shift(static_cast<long>(m));
  HypergeomParams shifted{params.a + shift, params.b + shift, params.c + shift};
  require_valid(shifted, order);
  return shifted;
}

PowerSeries gauss_2f1_series_in_t(const HypergeomParams& params, const Rational& x, std::size_t order) {
  const GaussCoefficients phi(params, order);
  std::vector<Rational> c;
  c.reserve(order + 1);
  Rational power(1);
  for (std::size_t k = 0; k <= order; ++k) {
    c.push_back(phi[k] * power);
    power *= x;
  }
  return PowerSeries(std::move(c));
}

}  // namespace gap
