#pragma once

#include <optional>

#include "gap/appell.hpp"
#include "gap/hypergeom.hpp"
#include "gap/polynomial.hpp"

namespace gap::cli {

/// The first five Gauss-Bernoulli, Gauss-Euler (integer Euler numbers) and
/// Gauss-Genocchi polynomials as printed in closed form in terms of
/// phi_k = (a)_k (b)_k / (c)_k. nullopt for other families or n > 4.
std::optional<Polynomial> printed_row(FamilyKind family, EulerConvention convention,
                                      const HypergeomParams& params, unsigned n);

}  // namespace gap::cli
