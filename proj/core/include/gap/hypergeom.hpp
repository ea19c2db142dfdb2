#pragma once

#include <cstddef>
#include <vector>

#include "gap/power_series.hpp"
#include "gap/rational.hpp"

namespace gap {

/// Parameters (a, b; c) of 2F1.
struct HypergeomParams {
  Rational a;
  Rational b;
  Rational c;

  friend bool operator==(const HypergeomParams&, const HypergeomParams&) = default;
};

/// Rising factorial r (r+1) ... (r+k-1); 1 for k = 0.
Rational pochhammer(const Rational& r, unsigned k);

/// Throws Errc::invalid_parameter_c when (c)_k vanishes for some k <= order,
/// i.e. when c is an integer in (-order, 0].
void require_valid(const HypergeomParams& params, std::size_t order);

/// The vacuum values phi_k = (a)_k (b)_k / (c)_k for k = 0..order.
class GaussCoefficients {
 public:
  GaussCoefficients(const HypergeomParams& params, std::size_t order);

  const HypergeomParams& params() const { return params_; }
  std::size_t order() const { return phi_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return phi_.at(k); }
  const std::vector<Rational>& values() const { return phi_; }

 private:
  HypergeomParams params_;
  std::vector<Rational> phi_;
};

GaussCoefficients gauss_coefficients(const HypergeomParams& params, std::size_t order);

/// (a+m, b+m; c+m). The shifted parameters are validated to `order`
/// (default 1: the shifted c must be nonzero).
HypergeomParams shift_params(const HypergeomParams& params, unsigned m, std::size_t order = 1);

/// 2F1(a,b;c;x t) as a series in t: c_k = phi_k x^k.
PowerSeries gauss_2f1_series_in_t(const HypergeomParams& params, const Rational& x, std::size_t order);

}  // namespace gap
