#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "gap/appell.hpp"
#include "gap/hypergeom.hpp"
#include "gap/polynomial.hpp"
#include "gap/rational.hpp"

namespace gap {

// A finite model of the two-umbra calculus. A state is a formal linear
// combination of monomials chi^p (x chi)^j a^m, where chi is the 2F1 umbra and
// a the Appell umbra. Writing u = x chi and v = a, the operators below act on
// (u, v) as on ordinary polynomials; chi^p is a passive prefix. Projection
// applies both vacua:
//   chi^p (x chi)^j a^m  |->  phi_{p+j} A_m x^j.

struct UmbralMonomial {
  unsigned chi = 0;  // p: bare chi prefix
  unsigned u = 0;    // j: power of x*chi
  unsigned v = 0;    // m: power of the Appell umbra

  friend auto operator<=>(const UmbralMonomial&, const UmbralMonomial&) = default;
};

class UmbralState {
 public:
  UmbralState() = default;

  static UmbralState monomial(const Rational& coeff, UmbralMonomial term);

  const std::map<UmbralMonomial, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Rational coeff(UmbralMonomial term) const;

  void add(const Rational& coeff, UmbralMonomial term);

  UmbralState& operator+=(const UmbralState& rhs);
  UmbralState& operator-=(const UmbralState& rhs);
  friend UmbralState operator+(UmbralState lhs, const UmbralState& rhs) { return lhs += rhs; }
  friend UmbralState operator-(UmbralState lhs, const UmbralState& rhs) { return lhs -= rhs; }
  friend UmbralState operator*(const Rational& scalar, const UmbralState& s);
  friend bool operator==(const UmbralState&, const UmbralState&) = default;

 private:
  std::map<UmbralMonomial, Rational> terms_;
};

/// (x chi + a)^n = sum_k C(n,k) (x chi)^k a^{n-k}.
UmbralState binomial_state(unsigned n);

/// Vacuum tables for one (family, params) pair.
class ProjectionContext {
 public:
  ProjectionContext(const AppellFamily& family, const HypergeomParams& params, std::size_t max_order);

  std::size_t max_order() const { return phi_.size() - 1; }
  const std::vector<Rational>& phi() const { return phi_; }
  const std::vector<Rational>& numbers() const { return numbers_; }

 private:
  std::vector<Rational> phi_;
  std::vector<Rational> numbers_;
};

/// Throws Errc::order_exceeded if some term needs phi or A beyond max_order.
Polynomial project(const UmbralState& s, const ProjectionContext& ctx);

/// D_u: derivative in x chi.
UmbralState op_D_u(const UmbralState& s);
/// D_v: derivative in the Appell umbra.
UmbralState op_D_v(const UmbralState& s);
/// Multiplication by x chi.
UmbralState op_mul_u(const UmbralState& s);
/// chi^m prefix.
UmbralState op_chi(const UmbralState& s, unsigned m);

/// Lowering operators (1/n) D.
UmbralState lowering_u(const UmbralState& s, unsigned n);
UmbralState lowering_v(const UmbralState& s, unsigned n);

/// Raising operators x chi + sum_{k=0}^{order_n} beta_k/k! D^k.
/// Throw Errc::not_strict_appell when beta is undefined.
UmbralState raising_u(const UmbralState& s, const AppellFamily& family, unsigned order_n);
UmbralState raising_v(const UmbralState& s, const AppellFamily& family, unsigned order_n);

enum class ResidualKind { ode_u, ode_v, pde_uv, pde_vu };

const char* to_string(ResidualKind kind) noexcept;

/// Applies the differential operator of `kind`, minus `constant`, to
/// (x chi + a)^n and projects:
///   ode_u : 1 + u D_u + sum beta_k/k! D_u^{k+1}
///   ode_v :     u D_v + sum beta_k/k! D_v^{k+1}
///   pde_uv: 1 + u D_u + sum beta_k/k! D_u D_v^k
///   pde_vu:     u D_v + sum beta_k/k! D_v D_u^k
/// with sums over k = 0..n. Throws Errc::not_strict_appell.
Polynomial ode_residual(ResidualKind kind, const AppellFamily& family, const HypergeomParams& params,
                        unsigned n, const Rational& constant);

}  // namespace gap
