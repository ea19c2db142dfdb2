#include <doctest.h>

#include <string>
#include <vector>

#include "gap/errors.hpp"
#include "gap/gauss_appell.hpp"
#include "oracles.hpp"
#include "printed_tables.hpp"

using gap::AppellFamily;
using gap::EulerConvention;
using gap::HypergeomParams;
using gap::Polynomial;
using gap::Rational;

namespace {

const HypergeomParams kFigure{Rational(3), Rational(1), Rational(7)};

struct Named {
  const char* name;
  AppellFamily family;
  std::vector<Rational> (*numbers)(unsigned);
};

std::vector<Named> all_families() {
  return {
      {"bernoulli", gap::builtin_family("bernoulli"), oracle::bernoulli},
      {"euler", gap::builtin_family("euler"), oracle::euler_integer},
      {"euler-series", gap::builtin_family("euler", EulerConvention::series), oracle::euler_series},
      {"genocchi", gap::builtin_family("genocchi"), oracle::genocchi},
      {"hermite", gap::builtin_family("hermite"), oracle::hermite},
  };
}

gap::Errc error_code(const auto& fn) {
  try {
    fn();
  } catch (const gap::Error& e) {
    return e.code();
  }
  FAIL("expected gap::Error");
  return gap::Errc::parse_error;
}

}  // namespace

TEST_CASE("explicit construction agrees with the closed form") {
  oracle::Rng rng(31);
  for (const auto& f : all_families()) {
    for (int trial = 0; trial < 3; ++trial) {
      const HypergeomParams p = rng.params();
      const auto a = f.numbers(12);
      for (unsigned n = 0; n <= 12; ++n) CHECK(gap::gap_explicit(f.family, p, n) == oracle::gap_closed_form(a, p, n));
    }
  }
}

TEST_CASE("first five rows of the tables") {
  oracle::Rng rng(32);
  for (int trial = 0; trial < 5; ++trial) {
    const HypergeomParams p = rng.params();
    for (unsigned n = 0; n <= 4; ++n) {
      CHECK(gap::gap_explicit(gap::builtin_family("bernoulli"), p, n) == oracle::printed("bernoulli", p, n));
      CHECK(gap::gap_explicit(gap::builtin_family("euler"), p, n) == oracle::printed("euler", p, n));
      CHECK(gap::gap_explicit(gap::builtin_family("genocchi"), p, n) == oracle::printed("genocchi", p, n));
    }
  }
  CHECK(gap::gap_explicit(gap::builtin_family("genocchi"), kFigure, 0).is_zero());
}

TEST_CASE("worked values at (3,1;7)") {
  const Polynomial b2 = gap::gap_explicit(gap::builtin_family("bernoulli"), kFigure, 2);
  CHECK(b2 == Polynomial({Rational(1, 6), Rational(-3, 7), Rational(3, 7)}));
  CHECK(b2.evaluate(Rational(1)) == Rational(1, 6));
  CHECK(b2.evaluate(Rational(0)) == Rational(1, 6));
  CHECK(gap::gap_explicit(gap::builtin_family("hermite"), kFigure, 0) == Polynomial::constant(1));
}

TEST_CASE("explicit, flipped, generating and recurrence agree") {
  oracle::Rng rng(33);
  for (const auto& f : all_families()) {
    const HypergeomParams p = rng.params();
    for (unsigned n = 0; n <= 20; ++n) {
      const Polynomial e = gap::gap_explicit(f.family, p, n);
      CHECK(gap::gap_explicit_flipped(f.family, p, n) == e);
      CHECK(gap::gap_from_generating(f.family, p, n) == e);
    }
    if (f.family.is_strict()) {
      for (unsigned n = 0; n <= 14; ++n) CHECK(gap::gap_by_recurrence(f.family, p, n) == gap::gap_explicit(f.family, p, n));
    } else {
      CHECK(error_code([&] { (void)gap::gap_by_recurrence(f.family, p, 3); }) == gap::Errc::not_strict_appell);
    }
  }
}

TEST_CASE("degree and leading coefficient") {
  oracle::Rng rng(34);
  for (const auto& f : all_families()) {
    const HypergeomParams p = rng.params();
    for (unsigned n = 1; n <= 12; ++n) {
      const Polynomial e = gap::gap_explicit(f.family, p, n);
      // Leading term phi_n A_0 x^n; for Genocchi A_0 = 0 and the degree drops to n-1 with A_1 = 1.
      if (f.family.is_strict()) {
        CHECK(e.degree() == std::optional<std::size_t>(n));
        CHECK(e.coeff(n) == oracle::phi(p, n) * f.numbers(0)[0]);
      } else {
        CHECK(e.degree() == std::optional<std::size_t>(n - 1));
        CHECK(e.coeff(n - 1) == Rational(static_cast<long>(n)) * oracle::phi(p, n - 1));
      }
    }
  }
}

TEST_CASE("invalid parameter c") {
  const HypergeomParams bad{Rational(1), Rational(1), Rational(-2)};
  const AppellFamily b = gap::builtin_family("bernoulli");
  CHECK_NOTHROW(gap::gap_explicit(b, bad, 2));
  CHECK(error_code([&] { (void)gap::gap_explicit(b, bad, 3); }) == gap::Errc::invalid_parameter_c);
  CHECK(error_code([&] { (void)gap::gap_from_generating(b, bad, 5); }) == gap::Errc::invalid_parameter_c);
}

TEST_CASE("summation formula on random tuples") {
  oracle::Rng rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const auto families = all_families();
    const auto& f = families[static_cast<std::size_t>(rng.integer(0, 4))];
    const HypergeomParams p = rng.params();
    const unsigned n = static_cast<unsigned>(rng.integer(0, 10));
    const Rational x = rng.rational();
    const Rational y = rng.rational(9, 7, false);
    CHECK(gap::gap_argument_shift_check(f.family, p, n, x, y));

    // Independent evaluation of both sides.
    const auto a = f.numbers(n);
    const Rational lhs = oracle::gap_closed_form(a, p, n).evaluate(x + y);
    Rational rhs(0);
    for (unsigned k = 0; k <= n; ++k) {
      rhs += oracle::binom(n, k) * gap::pow(Rational(1) + x / y, k) * oracle::phi(p, k) * gap::pow(y, k) * a[n - k];
    }
    CHECK(lhs == rhs);
  }
  CHECK(error_code([] {
          (void)gap::gap_argument_shift_check(gap::builtin_family("bernoulli"), kFigure, 3, Rational(1), Rational(0));
        }) == gap::Errc::zero_shift_base);
}

TEST_CASE("x-derivative lowers n and shifts the parameters") {
  oracle::Rng rng(36);
  for (const auto& f : all_families()) {
    const HypergeomParams p = rng.params();
    for (unsigned n = 1; n <= 12; ++n) {
      CHECK(gap::derivative_identity_check(f.family, p, n));
      const Polynomial lhs = gap::gap_x_derivative(gap::gap_explicit(f.family, p, n));
      const Polynomial rhs = Rational(static_cast<long>(n)) * (p.a * p.b / p.c) *
                             oracle::gap_closed_form(f.numbers(n), gap::shift_params(p, 1), n - 1);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("chi shift identity") {
  oracle::Rng rng(37);
  for (const auto& f : all_families()) {
    const HypergeomParams p = rng.params();
    for (unsigned n = 0; n <= 12; ++n) {
      for (unsigned m = 0; m <= 5; ++m) {
        CHECK(gap::chi_shift_identity_check(f.family, p, n, m));
        const Polynomial rhs =
            oracle::phi(p, m) * oracle::gap_closed_form(f.numbers(n), gap::shift_params(p, m), n);
        std::vector<Rational> lhs(n + 1);
        const auto a = f.numbers(n);
        for (unsigned k = 0; k <= n; ++k) lhs[k] = oracle::binom(n, k) * oracle::phi(p, k + m) * a[n - k];
        CHECK(Polynomial(lhs) == rhs);
      }
    }
  }
}

TEST_CASE("bivariate extension") {
  oracle::Rng rng(38);
  for (const auto& f : all_families()) {
    const HypergeomParams p = rng.params();
    const auto a = f.numbers(10);
    for (unsigned n = 0; n <= 10; ++n) {
      const gap::BivariatePolynomial poly = gap::bivariate_gap(f.family, p, n);
      // Multinomial closed form: coefficient of x^i y^j is n!/(i! j! m!) phi_j A_m, m = n - i - 2j.
      gap::BivariatePolynomial expected;
      for (unsigned j = 0; 2 * j <= n; ++j) {
        for (unsigned i = 0; i + 2 * j <= n; ++i) {
          const unsigned m = n - i - 2 * j;
          const Rational c = oracle::fact(n) / (oracle::fact(i) * oracle::fact(j) * oracle::fact(m)) *
                             oracle::phi(p, j) * a[m];
          if (!c.is_zero()) expected.add_term(c, i, j);
        }
      }
      CHECK(poly == expected);

      // y = 0 collapses to the classical Appell polynomial sum C(n,k) A_{n-k} x^k.
      std::vector<Rational> appell(n + 1);
      for (unsigned k = 0; k <= n; ++k) appell[k] = oracle::binom(n, k) * a[n - k];
      CHECK(poly.at_y_zero() == Polynomial(appell));

      // x = 0 keeps only even total degree in t from the 2F1 factor.
      std::vector<Rational> at_x0(n / 2 + 1);
      for (unsigned j = 0; 2 * j <= n; ++j) {
        at_x0[j] = oracle::fact(n) / (oracle::fact(j) * oracle::fact(n - 2 * j)) * oracle::phi(p, j) * a[n - 2 * j];
      }
      CHECK(poly.at_x_zero() == Polynomial(at_x0));
    }
  }
}

TEST_CASE("bivariate n = 2 by hand") {
  // A e^{xt} (1 + phi_1 y t^2 + ...): t^2/2! coefficient is A_2 + 2 A_1 x + x^2 + 2 phi_1 y.
  const auto poly = gap::bivariate_gap(gap::builtin_family("bernoulli"), kFigure, 2);
  gap::BivariatePolynomial expected;
  expected.add_term(Rational(1, 6), 0, 0);
  expected.add_term(Rational(-1), 1, 0);
  expected.add_term(Rational(1), 2, 0);
  expected.add_term(Rational(6, 7), 0, 1);
  CHECK(poly == expected);
  CHECK(poly.evaluate(Rational(1), Rational(7, 6)) == Rational(1, 6) - 1 + 1 + 1);
}
