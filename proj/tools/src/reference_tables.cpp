#include "gapcli/reference_tables.hpp"

#include <vector>

namespace gap::cli {

std::optional<Polynomial> printed_row(FamilyKind family, EulerConvention convention,
                                      const HypergeomParams& params, unsigned n) {
  if (n > 4) return std::nullopt;
  const GaussCoefficients phi(params, 4);
  const Rational& p1 = phi[1];
  const Rational& p2 = phi[2];
  const Rational& p3 = phi[3];
  const Rational& p4 = phi[4];
  const Rational half(1, 2);

  switch (family) {
    case FamilyKind::bernoulli: {
      const std::vector<std::vector<Rational>> rows = {
          {1},
          {Rational(-1, 2), p1},
          {Rational(1, 6), -p1, p2},
          {0, half * p1, Rational(-3, 2) * p2, p3},
          {Rational(-1, 30), 0, p2, Rational(-2) * p3, p4},
      };
      return Polynomial(rows[n]);
    }
    case FamilyKind::euler: {
      if (convention != EulerConvention::integer) return std::nullopt;
      const std::vector<std::vector<Rational>> rows = {
          {1},
          {0, p1},
          {-1, 0, p2},
          {0, Rational(-3) * p1, 0, p3},
          {5, 0, Rational(-6) * p2, 0, p4},
      };
      return Polynomial(rows[n]);
    }
    case FamilyKind::genocchi: {
      const std::vector<std::vector<Rational>> rows = {
          {0},
          {1},
          {-1, Rational(2) * p1},
          {0, Rational(-3) * p1, Rational(3) * p2},
          {1, 0, Rational(-6) * p2, Rational(4) * p3},
      };
      return Polynomial(rows[n]);
    }
    case FamilyKind::hermite:
    case FamilyKind::custom:
      break;
  }
  return std::nullopt;
}

}  // namespace gap::cli
