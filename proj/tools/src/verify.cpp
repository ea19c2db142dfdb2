#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gap/errors.hpp"
#include "gap/gauss_appell.hpp"
#include "gap/umbral.hpp"
#include "gapcli/cli.hpp"
#include "gapcli/reference_tables.hpp"
#include "gapcli/report.hpp"

namespace gap::cli {

namespace {

enum class Status { pass, fail, skip };

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "fail";
}

// Records are written in a fixed (suite, check, trial, n) order, one JSON
// object per line.
class Reporter {
 public:
  Reporter(std::ostream& out, const AppellFamily& family) : out_(out), family_(family) {}

  Json record(std::string_view suite, std::string_view check) const {
    Json r;
    r["suite"] = suite;
    r["check"] = check;
    r["family"] = family_.name();
    r["convention"] = convention_json(family_);
    return r;
  }

  void emit(Json r, Status status) {
    r["status"] = status_name(status);
    switch (status) {
      case Status::pass: ++passed_; break;
      case Status::fail: ++failed_; break;
      case Status::skip: ++skipped_; break;
    }
    out_ << r.dump() << '\n';
  }

  // Runs `check`, turning library errors into fail records (or skip records
  // for NotStrictAppell, which several suites expect for A_0 = 0).
  void run(Json r, const std::function<bool(Json&)>& check) {
    try {
      const bool ok = check(r);
      emit(std::move(r), ok ? Status::pass : Status::fail);
    } catch (const Error& e) {
      r["reason"] = e.what();
      emit(std::move(r), e.code() == Errc::not_strict_appell ? Status::skip : Status::fail);
    }
  }

  int passed() const { return passed_; }
  int failed() const { return failed_; }
  int skipped() const { return skipped_; }

 private:
  std::ostream& out_;
  const AppellFamily& family_;
  int passed_ = 0;
  int failed_ = 0;
  int skipped_ = 0;
};

struct SuiteContext {
  const AppellFamily& family;
  std::vector<HypergeomParams> params;
  unsigned nmax;
  std::uint64_t seed;
  Reporter& reporter;
};

Json trial_record(const SuiteContext& ctx, std::string_view suite, std::string_view check, std::size_t trial,
                  std::optional<unsigned> n) {
  Json r = ctx.reporter.record(suite, check);
  r["trial"] = trial;
  r["params"] = params_json(ctx.params[trial]);
  if (n) r["n"] = *n;
  return r;
}

// Emits a single skip record when the family has no beta coefficients.
bool skip_if_not_strict(const SuiteContext& ctx, std::string_view suite, std::string_view check) {
  if (ctx.family.is_strict()) return false;
  Json r = ctx.reporter.record(suite, check);
  r["reason"] = std::string(to_string(Errc::not_strict_appell)) + ": A_0 = 0, beta_k undefined";
  ctx.reporter.emit(std::move(r), Status::skip);
  return true;
}

void suite_expansion(const SuiteContext& ctx) {
  for (std::size_t t = 0; t < ctx.params.size(); ++t) {
    const HypergeomParams& p = ctx.params[t];
    for (unsigned n = 0; n <= ctx.nmax; ++n) {
      ctx.reporter.run(trial_record(ctx, "expansion", "explicit==flipped==generating", t, n), [&](Json&) {
        const Polynomial e = gap_explicit(ctx.family, p, n);
        return e == gap_explicit_flipped(ctx.family, p, n) && e == gap_from_generating(ctx.family, p, n);
      });
      ctx.reporter.run(trial_record(ctx, "expansion", "leading_coefficient", t, n), [&](Json&) {
        const Polynomial e = gap_explicit(ctx.family, p, n);
        const Rational expected = gauss_coefficients(p, n)[n] * ctx.family.series(0)[0];
        return (!e.degree() || *e.degree() <= n) && e.coeff(n) == expected;
      });
      const auto numbers = appell_numbers(ctx.family, 1).values;
      if (!numbers[0].is_zero() || !numbers[1].is_zero()) {
        ctx.reporter.run(trial_record(ctx, "expansion", "degree_law", t, n), [&](Json& r) {
          const Polynomial e = gap_explicit(ctx.family, p, n);
          if (!numbers[0].is_zero()) return e.degree() == std::optional<std::size_t>(n);
          r["note"] = "A_0 = 0: degree n-1 for n >= 1, zero polynomial for n = 0";
          return n == 0 ? e.is_zero() : e.degree() == std::optional<std::size_t>(n - 1);
        });
      }
      if (const auto row = printed_row(ctx.family.kind(), ctx.family.convention(), p, n)) {
        ctx.reporter.run(trial_record(ctx, "expansion", "printed_table_row", t, n),
                         [&](Json&) { return gap_explicit(ctx.family, p, n) == *row; });
      }
    }
  }
}

void suite_recurrence(const SuiteContext& ctx) {
  if (skip_if_not_strict(ctx, "recurrence", "explicit==recurrence")) return;
  for (std::size_t t = 0; t < ctx.params.size(); ++t) {
    for (unsigned n = 0; n <= ctx.nmax; ++n) {
      ctx.reporter.run(trial_record(ctx, "recurrence", "explicit==recurrence", t, n), [&](Json&) {
        return gap_explicit(ctx.family, ctx.params[t], n) == gap_by_recurrence(ctx.family, ctx.params[t], n);
      });
    }
  }
  if (ctx.family.kind() == FamilyKind::bernoulli) {
    Json r = ctx.reporter.record("recurrence", "beta_k==-B_{k+1}(1)/(k+1)");
    r["k_max"] = ctx.nmax;
    ctx.reporter.run(std::move(r), [&](Json&) {
      const std::size_t order = ctx.nmax + 1;
      // B_n(1): coefficients of t e^t / (e^t - 1).
      const std::size_t m = order + 1;
      const PowerSeries shifted_bernoulli =
          divide(PowerSeries::variable(m) * PowerSeries::exponential(m),
                 PowerSeries::exponential(m) - PowerSeries::constant(Rational(1), m));
      const auto beta = beta_coefficients(ctx.family, ctx.nmax);
      for (unsigned k = 0; k <= ctx.nmax; ++k) {
        if (beta[k] != -shifted_bernoulli[k + 1] / Rational(static_cast<long>(k) + 1)) return false;
      }
      return true;
    });
  }
}

void suite_shift(const SuiteContext& ctx) {
  constexpr unsigned kMaxShift = 5;
  for (std::size_t t = 0; t < ctx.params.size(); ++t) {
    const HypergeomParams& p = ctx.params[t];
    for (unsigned n = 0; n <= ctx.nmax; ++n) {
      Json r = trial_record(ctx, "shift", "chi^m_identity", t, n);
      r["m_max"] = kMaxShift;
      ctx.reporter.run(std::move(r), [&](Json&) {
        for (unsigned m = 0; m <= kMaxShift; ++m) {
          if (!chi_shift_identity_check(ctx.family, p, n, m)) return false;
        }
        return true;
      });
      Json u = trial_record(ctx, "shift", "umbral_chi^m_projection", t, n);
      u["m_max"] = kMaxShift;
      ctx.reporter.run(std::move(u), [&](Json&) {
        const ProjectionContext pc(ctx.family, p, n + kMaxShift);
        const GaussCoefficients phi(p, kMaxShift);
        for (unsigned m = 0; m <= kMaxShift; ++m) {
          const Polynomial lhs = project(op_chi(binomial_state(n), m), pc);
          if (lhs != phi[m] * gap_explicit(ctx.family, shift_params(p, m, n), n)) return false;
        }
        return true;
      });
    }
  }
}

void suite_summation(const SuiteContext& ctx) {
  constexpr unsigned kTuples = 50;
  const unsigned n_cap = std::min(ctx.nmax, 10U);
  std::uint64_t state = ctx.seed ^ 0x5DEECE66DULL;
  for (unsigned i = 0; i < kTuples; ++i) {
    const std::size_t t = i % ctx.params.size();
    const Rational x = sample_rational(state, true);
    const Rational y = sample_rational(state, false);
    const auto n = static_cast<unsigned>(next_random(state) % (n_cap + 1));
    Json r = trial_record(ctx, "summation", "argument_shift", t, n);
    r["x"] = x.str();
    r["y"] = y.str();
    ctx.reporter.run(std::move(r),
                     [&](Json&) { return gap_argument_shift_check(ctx.family, ctx.params[t], n, x, y); });
  }
}

void suite_derivative(const SuiteContext& ctx) {
  for (std::size_t t = 0; t < ctx.params.size(); ++t) {
    for (unsigned n = 1; n <= ctx.nmax; ++n) {
      ctx.reporter.run(trial_record(ctx, "derivative", "d/dx==n*(ab/c)*shifted", t, n),
                       [&](Json&) { return derivative_identity_check(ctx.family, ctx.params[t], n); });
    }
  }
}

void suite_theorem3(const SuiteContext& ctx) {
  for (std::size_t t = 0; t < ctx.params.size(); ++t) {
    const HypergeomParams& p = ctx.params[t];
    for (unsigned n = 0; n <= ctx.nmax; ++n) {
      const ProjectionContext pc(ctx.family, p, n);
      const UmbralState base = binomial_state(n);
      auto check_power = [&](UmbralState (*op)(const UmbralState&)) {
        UmbralState s = base;
        for (unsigned m = 0; m <= n; ++m) {
          const Rational falling = factorial(n) / factorial(n - m);
          if (project(s, pc) != falling * gap_explicit(ctx.family, p, n - m)) return false;
          s = op(s);
        }
        return true;
      };
      ctx.reporter.run(trial_record(ctx, "theorem3", "D_u^m", t, n), [&](Json&) { return check_power(op_D_u); });
      ctx.reporter.run(trial_record(ctx, "theorem3", "D_v^m", t, n), [&](Json&) { return check_power(op_D_v); });
      ctx.reporter.run(trial_record(ctx, "theorem3", "D_u==D_v", t, n), [&](Json&) {
        UmbralState su = base;
        UmbralState sv = base;
        for (unsigned m = 0; m <= n; ++m) {
          if (project(su, pc) != project(sv, pc)) return false;
          su = op_D_u(su);
          sv = op_D_v(sv);
        }
        return true;
      });
    }
  }
}

void suite_lemma1(const SuiteContext& ctx) {
  for (std::size_t t = 0; t < ctx.params.size(); ++t) {
    const HypergeomParams& p = ctx.params[t];
    for (unsigned n = 1; n <= ctx.nmax; ++n) {
      const ProjectionContext pc(ctx.family, p, n);
      const Polynomial lower = gap_explicit(ctx.family, p, n - 1);
      ctx.reporter.run(trial_record(ctx, "lemma1", "lowering_u", t, n),
                       [&](Json&) { return project(lowering_u(binomial_state(n), n), pc) == lower; });
      ctx.reporter.run(trial_record(ctx, "lemma1", "lowering_v", t, n),
                       [&](Json&) { return project(lowering_v(binomial_state(n), n), pc) == lower; });
    }
  }
  if (skip_if_not_strict(ctx, "lemma1", "raising")) return;
  for (std::size_t t = 0; t < ctx.params.size(); ++t) {
    const HypergeomParams& p = ctx.params[t];
    for (unsigned n = 0; n <= ctx.nmax; ++n) {
      const ProjectionContext pc(ctx.family, p, n + 1);
      const Polynomial upper = gap_explicit(ctx.family, p, n + 1);
      ctx.reporter.run(trial_record(ctx, "lemma1", "raising_u", t, n), [&](Json&) {
        return project(raising_u(binomial_state(n), ctx.family, n), pc) == upper;
      });
      ctx.reporter.run(trial_record(ctx, "lemma1", "raising_v", t, n), [&](Json&) {
        return project(raising_v(binomial_state(n), ctx.family, n), pc) == upper;
      });
    }
  }
}

// For each kind the residual is computed with constant n (as printed) and
// n+1. Operators with the standalone "1 +" term vanish at n+1 and leave
// 2F1A_n at n; the others vanish at n and leave -2F1A_n at n+1.
void suite_residuals(const SuiteContext& ctx, std::string_view suite, ResidualKind with_one,
                     ResidualKind without_one) {
  for (const ResidualKind kind : {with_one, without_one}) {
    if (skip_if_not_strict(ctx, suite, to_string(kind))) continue;
    for (std::size_t t = 0; t < ctx.params.size(); ++t) {
      const HypergeomParams& p = ctx.params[t];
      for (unsigned n = 1; n <= ctx.nmax; ++n) {
        ctx.reporter.run(trial_record(ctx, suite, to_string(kind), t, n), [&](Json& r) {
          const Rational nr(static_cast<long>(n));
          const Polynomial at_n = ode_residual(kind, ctx.family, p, n, nr);
          const Polynomial at_n1 = ode_residual(kind, ctx.family, p, n, nr + Rational(1));
          const Polynomial gap_n = gap_explicit(ctx.family, p, n);
          const bool has_one = kind == with_one;
          r["residual_at_n"] = coeffs_json(at_n);
          r["residual_at_n_plus_1"] = coeffs_json(at_n1);
          r["zero_at"] = has_one ? "n+1" : "n";
          r["printed_constant_holds"] = at_n.is_zero();
          if (has_one) {
            r["note"] = "printed constant n leaves residual 2F1A_n; residual vanishes with n+1";
            return at_n == gap_n && at_n1.is_zero();
          }
          return at_n.is_zero() && at_n1 == Rational(-1) * gap_n;
        });
      }
    }
  }
}

}  // namespace

int cmd_verify(Suite suite, const RunConfig& config, std::ostream& out) {
  (void)config.effective_order();
  const AppellFamily family = config.make_family();
  Reporter reporter(out, family);
  SuiteContext ctx{family, parameter_sets(config), config.nmax, config.seed, reporter};

  Json header;
  header["report"] = "verify";
  header["suite"] = to_string(suite);
  header["family"] = family.name();
  header["convention"] = convention_json(family);
  header["mode"] = config.params ? "explicit" : "sampled";
  header["seed"] = config.seed;
  header["nmax"] = config.nmax;
  header["trials"] = ctx.params.size();
  Json sets = Json::array();
  for (const auto& p : ctx.params) sets.push_back(params_json(p));
  header["params"] = std::move(sets);
  out << header.dump() << '\n';

  auto wants = [suite](Suite s) { return suite == Suite::all || suite == s; };
  if (wants(Suite::expansion)) suite_expansion(ctx);
  if (wants(Suite::recurrence)) suite_recurrence(ctx);
  if (wants(Suite::shift)) suite_shift(ctx);
  if (wants(Suite::summation)) suite_summation(ctx);
  if (wants(Suite::derivative)) suite_derivative(ctx);
  if (wants(Suite::theorem3)) suite_theorem3(ctx);
  if (wants(Suite::lemma1)) suite_lemma1(ctx);
  if (wants(Suite::odes)) suite_residuals(ctx, "odes", ResidualKind::ode_u, ResidualKind::ode_v);
  if (wants(Suite::pdes)) suite_residuals(ctx, "pdes", ResidualKind::pde_uv, ResidualKind::pde_vu);

  const int exit_code = reporter.failed() == 0 ? kExitOk : kExitCheckFailed;
  Json summary;
  summary["summary"] = true;
  summary["seed"] = config.seed;
  summary["passed"] = reporter.passed();
  summary["failed"] = reporter.failed();
  summary["skipped"] = reporter.skipped();
  summary["exit"] = exit_code;
  out << summary.dump() << '\n';
  return exit_code;
}

}  // namespace gap::cli
