#include "gap/appell.hpp"

#include <utility>

#include "gap/errors.hpp"

namespace gap {

namespace {

PowerSeries bernoulli_series(std::size_t order) {
  // t / (e^t - 1); the division drops one order, so build one order higher.
  const std::size_t n = order + 1;
  const PowerSeries exp_minus_one = PowerSeries::exponential(n) - PowerSeries::constant(Rational(1), n);
  return divide(PowerSeries::variable(n), exp_minus_one);
}

PowerSeries euler_series_convention(std::size_t order) {
  const PowerSeries exp_plus_one = PowerSeries::exponential(order) + PowerSeries::constant(Rational(1), order);
  return divide(PowerSeries::constant(Rational(2), order), exp_plus_one);
}

PowerSeries euler_integer_convention(std::size_t order) {
  // sech t = 2 e^t / (e^{2t} + 1)
  const PowerSeries numerator = Rational(2) * PowerSeries::exponential(order);
  const PowerSeries denominator =
      PowerSeries::exponential(order, Rational(2)) + PowerSeries::constant(Rational(1), order);
  return divide(numerator, denominator);
}

PowerSeries genocchi_series(std::size_t order) {
  // 2t / (e^t + 1)
  const PowerSeries exp_plus_one = PowerSeries::exponential(order) + PowerSeries::constant(Rational(1), order);
  return divide(Rational(2) * PowerSeries::variable(order), exp_plus_one);
}

}  // namespace

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::bernoulli: return "bernoulli";
    case FamilyKind::euler: return "euler";
    case FamilyKind::genocchi: return "genocchi";
    case FamilyKind::hermite: return "hermite";
    case FamilyKind::custom: return "custom";
  }
  return "custom";
}

std::string_view to_string(EulerConvention convention) noexcept {
  return convention == EulerConvention::series ? "series" : "integer";
}

FamilyKind parse_family(std::string_view name) {
  if (name == "bernoulli") return FamilyKind::bernoulli;
  if (name == "euler") return FamilyKind::euler;
  if (name == "genocchi") return FamilyKind::genocchi;
  if (name == "hermite") return FamilyKind::hermite;
  if (name == "custom") return FamilyKind::custom;
  throw Error(Errc::unknown_family, "unknown Appell family '" + std::string(name) + "'");
}

EulerConvention parse_convention(std::string_view name) {
  if (name == "series") return EulerConvention::series;
  if (name == "integer") return EulerConvention::integer;
  throw Error(Errc::parse_error, "unknown Euler convention '" + std::string(name) + "'");
}

AppellFamily::AppellFamily(FamilyKind kind, EulerConvention convention, SeriesGenerator generator)
    : kind_(kind), convention_(convention), generator_(std::move(generator)) {}

AppellFamily AppellFamily::custom(std::vector<Rational> numbers) {
  if (numbers.empty()) numbers.emplace_back(0);
  return AppellFamily(FamilyKind::custom, EulerConvention::integer,
                      [numbers = std::move(numbers)](std::size_t order) {
                        std::vector<Rational> c(order + 1);
                        for (std::size_t k = 0; k <= order && k < numbers.size(); ++k) c[k] = numbers[k];
                        return PowerSeries(std::move(c));
                      });
}

AppellFamily builtin_family(FamilyKind kind, EulerConvention convention) {
  switch (kind) {
    case FamilyKind::bernoulli:
      return AppellFamily(kind, convention, bernoulli_series);
    case FamilyKind::euler:
      return AppellFamily(kind, convention,
                          convention == EulerConvention::series ? euler_series_convention : euler_integer_convention);
    case FamilyKind::genocchi:
      return AppellFamily(kind, convention, genocchi_series);
    case FamilyKind::hermite:
      return AppellFamily(kind, convention, exp_neg_half_t_squared);
    case FamilyKind::custom:
      break;
  }
  throw Error(Errc::unknown_family, "custom families need explicit numbers");
}

AppellFamily builtin_family(std::string_view name, EulerConvention convention) {
  return builtin_family(parse_family(name), convention);
}

AppellNumbers appell_numbers(const AppellFamily& family, std::size_t order) {
  const PowerSeries a = family.series(order);
  return AppellNumbers{family.kind(), order, std::vector<Rational>(a.coeffs().begin(), a.coeffs().end())};
}

std::vector<Rational> beta_coefficients(const AppellFamily& family, std::size_t order) {
  const PowerSeries a = family.series(order + 1);
  if (a[0].is_zero()) {
    throw Error(Errc::not_strict_appell,
                family.name() + " has A_0 = 0; A'(t)/A(t) has a pole at t = 0");
  }
  const PowerSeries log_derivative = divide(derivative(a), a);
  return std::vector<Rational>(log_derivative.coeffs().begin(), log_derivative.coeffs().end());
}

}  // namespace gap
