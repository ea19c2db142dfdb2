#pragma once

#include <span>

#include <json.hpp>

#include "gap/appell.hpp"
#include "gap/hypergeom.hpp"
#include "gap/polynomial.hpp"

namespace gap::cli {

using Json = nlohmann::ordered_json;

/// Rationals as canonical "p/q" strings ("p" for integers).
Json rationals_json(std::span<const Rational> values);
Json coeffs_json(const Polynomial& p);
Json params_json(const HypergeomParams& params);
/// Convention name for euler, null otherwise.
Json convention_json(const AppellFamily& family);

}  // namespace gap::cli
