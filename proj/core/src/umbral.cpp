#include "gap/umbral.hpp"

#include <string>

#include "gap/errors.hpp"
#include "gap/power_series.hpp"

namespace gap {

namespace {

template <typename Map>
UmbralState transform(const UmbralState& s, Map&& map) {
  UmbralState out;
  for (const auto& [term, coeff] : s.terms()) map(out, term, coeff);
  return out;
}

// sum_{k=0}^{order_n} beta_k/k! * D^k s
UmbralState beta_sum(const UmbralState& s, const std::vector<Rational>& beta, unsigned order_n,
                     UmbralState (*derivative)(const UmbralState&)) {
  UmbralState out;
  UmbralState dk = s;
  for (unsigned k = 0; k <= order_n && !dk.empty(); ++k) {
    out += (beta[k] / factorial(k)) * dk;
    dk = derivative(dk);
  }
  return out;
}

}  // namespace

UmbralState UmbralState::monomial(const Rational& coeff, UmbralMonomial term) {
  UmbralState s;
  s.add(coeff, term);
  return s;
}

Rational UmbralState::coeff(UmbralMonomial term) const {
  const auto it = terms_.find(term);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UmbralState::add(const Rational& coeff, UmbralMonomial term) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(term, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UmbralState& UmbralState::operator+=(const UmbralState& rhs) {
  for (const auto& [term, coeff] : rhs.terms_) add(coeff, term);
  return *this;
}

UmbralState& UmbralState::operator-=(const UmbralState& rhs) {
  for (const auto& [term, coeff] : rhs.terms_) add(-coeff, term);
  return *this;
}

UmbralState operator*(const Rational& scalar, const UmbralState& s) {
  UmbralState out;
  for (const auto& [term, coeff] : s.terms_) out.add(scalar * coeff, term);
  return out;
}

UmbralState binomial_state(unsigned n) {
  UmbralState s;
  const auto row = binomial_row(n);
  for (unsigned k = 0; k <= n; ++k) s.add(row[k], {0, k, n - k});
  return s;
}

ProjectionContext::ProjectionContext(const AppellFamily& family, const HypergeomParams& params,
                                     std::size_t max_order)
    : phi_(gauss_coefficients(params, max_order).values()), numbers_(appell_numbers(family, max_order).values) {}

Polynomial project(const UmbralState& s, const ProjectionContext& ctx) {
  std::vector<Rational> c;
  for (const auto& [term, coeff] : s.terms()) {
    const std::size_t chi_total = static_cast<std::size_t>(term.chi) + term.u;
    if (chi_total > ctx.max_order() || term.v > ctx.max_order()) {
      throw Error(Errc::order_exceeded, "term chi^" + std::to_string(term.chi) + " u^" + std::to_string(term.u) +
                                            " v^" + std::to_string(term.v) + " exceeds projection order " +
                                            std::to_string(ctx.max_order()));
    }
    if (c.size() <= term.u) c.resize(term.u + 1);
    c[term.u] += coeff * ctx.phi()[chi_total] * ctx.numbers()[term.v];
  }
  return Polynomial(std::move(c));
}

UmbralState op_D_u(const UmbralState& s) {
  return transform(s, [](UmbralState& out, const UmbralMonomial& t, const Rational& c) {
    if (t.u != 0) out.add(Rational(static_cast<long>(t.u)) * c, {t.chi, t.u - 1, t.v});
  });
}

UmbralState op_D_v(const UmbralState& s) {
  return transform(s, [](UmbralState& out, const UmbralMonomial& t, const Rational& c) {
    if (t.v != 0) out.add(Rational(static_cast<long>(t.v)) * c, {t.chi, t.u, t.v - 1});
  });
}

UmbralState op_mul_u(const UmbralState& s) {
  return transform(s, [](UmbralState& out, const UmbralMonomial& t, const Rational& c) {
    out.add(c, {t.chi, t.u + 1, t.v});
  });
}

UmbralState op_chi(const UmbralState& s, unsigned m) {
  return transform(s, [m](UmbralState& out, const UmbralMonomial& t, const Rational& c) {
    out.add(c, {t.chi + m, t.u, t.v});
  });
}

UmbralState lowering_u(const UmbralState& s, unsigned n) {
  return Rational(1, static_cast<long>(n)) * op_D_u(s);
}

UmbralState lowering_v(const UmbralState& s, unsigned n) {
  return Rational(1, static_cast<long>(n)) * op_D_v(s);
}

UmbralState raising_u(const UmbralState& s, const AppellFamily& family, unsigned order_n) {
  const auto beta = beta_coefficients(family, order_n);
  return op_mul_u(s) + beta_sum(s, beta, order_n, op_D_u);
}

UmbralState raising_v(const UmbralState& s, const AppellFamily& family, unsigned order_n) {
  const auto beta = beta_coefficients(family, order_n);
  return op_mul_u(s) + beta_sum(s, beta, order_n, op_D_v);
}

const char* to_string(ResidualKind kind) noexcept {
  switch (kind) {
    case ResidualKind::ode_u: return "ode_u";
    case ResidualKind::ode_v: return "ode_v";
    case ResidualKind::pde_uv: return "pde_uv";
    case ResidualKind::pde_vu: return "pde_vu";
  }
  return "ode_u";
}

Polynomial ode_residual(ResidualKind kind, const AppellFamily& family, const HypergeomParams& params,
                        unsigned n, const Rational& constant) {
  const auto beta = beta_coefficients(family, n);
  const UmbralState s = binomial_state(n);

  UmbralState applied;
  switch (kind) {
    case ResidualKind::ode_u:
      applied = s + op_mul_u(op_D_u(s)) + op_D_u(beta_sum(s, beta, n, op_D_u));
      break;
    case ResidualKind::ode_v:
      applied = op_mul_u(op_D_v(s)) + op_D_v(beta_sum(s, beta, n, op_D_v));
      break;
    case ResidualKind::pde_uv:
      applied = s + op_mul_u(op_D_u(s)) + op_D_u(beta_sum(s, beta, n, op_D_v));
      break;
    case ResidualKind::pde_vu:
      applied = op_mul_u(op_D_v(s)) + op_D_v(beta_sum(s, beta, n, op_D_u));
      break;
  }
  applied -= constant * s;
  return project(applied, ProjectionContext(family, params, n + 1));
}

}  // namespace gap
