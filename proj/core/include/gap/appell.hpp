#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gap/power_series.hpp"
#include "gap/rational.hpp"

namespace gap {

enum class FamilyKind { bernoulli, euler, genocchi, hermite, custom };

/// Which Euler numbers the euler family uses:
///   series  -> A(t) = 2/(e^t+1)           (1, -1/2, 0, 1/4, ...)
///   integer -> A(t) = sech t              (1, 0, -1, 0, 5, ...)
enum class EulerConvention { series, integer };

std::string_view to_string(FamilyKind kind) noexcept;
std::string_view to_string(EulerConvention convention) noexcept;
/// Throws Errc::unknown_family.
FamilyKind parse_family(std::string_view name);
/// Throws Errc::parse_error.
EulerConvention parse_convention(std::string_view name);

/// An Appell sequence, described by the series generator of its A(t).
class AppellFamily {
 public:
  using SeriesGenerator = std::function<PowerSeries(std::size_t)>;

  AppellFamily(FamilyKind kind, EulerConvention convention, SeriesGenerator generator);

  /// A(t) given by a finite list of numbers A_0, A_1, ...; higher numbers are 0.
  static AppellFamily custom(std::vector<Rational> numbers);

  FamilyKind kind() const { return kind_; }
  EulerConvention convention() const { return convention_; }
  std::string name() const { return std::string(to_string(kind_)); }

  /// A(t) truncated at exactly `order`.
  PowerSeries series(std::size_t order) const { return generator_(order); }

  /// A_0 != 0.
  bool is_strict() const { return !series(0)[0].is_zero(); }

 private:
  FamilyKind kind_;
  EulerConvention convention_;
  SeriesGenerator generator_;
};

/// Throws Errc::unknown_family for names outside
/// {bernoulli, euler, genocchi, hermite}.
AppellFamily builtin_family(std::string_view name, EulerConvention convention = EulerConvention::integer);
AppellFamily builtin_family(FamilyKind kind, EulerConvention convention = EulerConvention::integer);

struct AppellNumbers {
  FamilyKind family;
  std::size_t order;
  std::vector<Rational> values;  // A_0..A_order
};

AppellNumbers appell_numbers(const AppellFamily& family, std::size_t order);

/// beta_0..beta_order with A'(t)/A(t) = sum beta_k t^k/k!.
/// Throws Errc::not_strict_appell when A_0 = 0.
std::vector<Rational> beta_coefficients(const AppellFamily& family, std::size_t order);

}  // namespace gap
