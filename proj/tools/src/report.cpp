#include "gapcli/report.hpp"

namespace gap::cli {

Json rationals_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

Json coeffs_json(const Polynomial& p) { return rationals_json(p.coeffs()); }

Json params_json(const HypergeomParams& params) {
  Json out;
  out["a"] = params.a.str();
  out["b"] = params.b.str();
  out["c"] = params.c.str();
  return out;
}

Json convention_json(const AppellFamily& family) {
  if (family.kind() != FamilyKind::euler) return nullptr;
  return std::string(to_string(family.convention()));
}

}  // namespace gap::cli
