#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gap/rational.hpp"

namespace gap {

/// Pascal row C(n,0..n) as exact integers.
std::vector<Rational> binomial_row(unsigned n);

/// Binomial (exponential) convolution of two coefficient sequences:
///   out[n] = sum_k C(n,k) lhs[k] rhs[n-k],  n = 0..order.
/// This is the product rule for series written as sum c_k t^k/k!. Works for
/// any coefficient ring where `Rational * (L * R)` is defined.
template <typename L, typename R>
auto binomial_convolution(std::span<const L> lhs, std::span<const R> rhs, std::size_t order)
    -> std::vector<decltype(std::declval<const L&>() * std::declval<const R&>())> {
  using Out = decltype(std::declval<const L&>() * std::declval<const R&>());
  std::vector<Out> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    const auto row = binomial_row(static_cast<unsigned>(n));
    Out acc{};
    for (std::size_t k = 0; k <= n; ++k) acc += row[k] * (lhs[k] * rhs[n - k]);
    out[n] = std::move(acc);
  }
  return out;
}

/// Truncated formal power series sum_{k=0}^{N} c_k t^k / k! over the
/// rationals. N is the (inclusive) truncation order; binary operations work
/// at the smaller of the two orders.
class PowerSeries {
 public:
  /// Requires a non-empty coefficient list; order = coeffs.size() - 1.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries zero(std::size_t order);
  static PowerSeries constant(const Rational& value, std::size_t order);
  /// e^{rate t}: c_k = rate^k.
  static PowerSeries exponential(std::size_t order, const Rational& rate = Rational(1));
  /// The series t (c_1 = 1).
  static PowerSeries variable(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient; nullopt for the zero series.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  PowerSeries truncated(std::size_t order) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries operator+(const PowerSeries& lhs, const PowerSeries& rhs);
PowerSeries operator-(const PowerSeries& lhs, const PowerSeries& rhs);
PowerSeries operator-(const PowerSeries& s);
PowerSeries operator*(const Rational& scalar, const PowerSeries& s);
/// Binomial convolution at order min(lhs.order, rhs.order).
PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs);

/// Quotient num/den. A common power t^v (v = valuation of den) is cancelled
/// first, so the result has order min(orders) - v.
///
/// Throws Errc::division_by_zero_series when den is zero at its order and
/// Errc::pole_at_origin when valuation(num) < valuation(den).
PowerSeries divide(const PowerSeries& num, const PowerSeries& den);

/// d/dt; an index shift in the t^k/k! convention. Throws Errc::order_underflow
/// on an order-0 series.
PowerSeries derivative(const PowerSeries& s);

/// e^{-t^2/2} to the given order.
PowerSeries exp_neg_half_t_squared(std::size_t order);

}  // namespace gap
