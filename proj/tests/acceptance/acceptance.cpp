// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gap/gap.hpp"
#include "gapcli/cli.hpp"
#include "oracles.hpp"
#include "printed_tables.hpp"

using gap::AppellFamily;
using gap::HypergeomParams;
using gap::Polynomial;
using gap::Rational;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<HypergeomParams> kSeeded = gap::cli::sample_params(42, 5);

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // <= 0: untimed
  std::function<bool(std::string&)> body;
};

struct FamilyCase {
  AppellFamily family;
  std::vector<Rational> (*numbers)(unsigned);
};

std::vector<FamilyCase> families() {
  return {
      {gap::builtin_family("bernoulli"), oracle::bernoulli},
      {gap::builtin_family("euler"), oracle::euler_integer},
      {gap::builtin_family("euler", gap::EulerConvention::series), oracle::euler_series},
      {gap::builtin_family("genocchi"), oracle::genocchi},
      {gap::builtin_family("hermite"), oracle::hermite},
  };
}

std::vector<FamilyCase> ode_families() {
  return {{gap::builtin_family("bernoulli"), oracle::bernoulli},
          {gap::builtin_family("euler"), oracle::euler_integer},
          {gap::builtin_family("hermite"), oracle::hermite}};
}

// Each failing check records a short reason; the first one is reported.
struct Tally {
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && first_failure.empty()) first_failure = what;
  }
  bool finish(std::string& detail) {
    detail = first_failure.empty() ? std::to_string(checks) + " checks" : first_failure;
    return first_failure.empty();
  }
};

std::string where(const AppellFamily& f, std::size_t trial, unsigned n) {
  return f.name() + " trial " + std::to_string(trial) + " n=" + std::to_string(n);
}

bool printed_tables(const std::vector<std::string>& names, std::string& detail) {
  Tally tally;
  for (const auto& name : names) {
    const AppellFamily family = gap::builtin_family(name);
    for (std::size_t t = 0; t < kSeeded.size(); ++t) {
      for (unsigned n = 0; n <= 4; ++n) {
        tally.expect(gap::gap_explicit(family, kSeeded[t], n) == oracle::printed(name, kSeeded[t], n),
                     where(family, t, n));
      }
    }
  }
  if (names.back() == "genocchi") {
    for (const auto& p : kSeeded) {
      tally.expect(gap::gap_explicit(gap::builtin_family("genocchi"), p, 0).is_zero(), "genocchi n=0 nonzero");
    }
  }
  return tally.finish(detail);
}

bool triple_equivalence(std::string& detail) {
  Tally tally;
  for (const auto& f : families()) {
    for (std::size_t t = 0; t < kSeeded.size(); ++t) {
      const auto& p = kSeeded[t];
      for (unsigned n = 0; n <= 20; ++n) {
        const Polynomial e = gap::gap_explicit(f.family, p, n);
        tally.expect(gap::gap_explicit_flipped(f.family, p, n) == e, "flipped " + where(f.family, t, n));
        tally.expect(gap::gap_from_generating(f.family, p, n) == e, "generating " + where(f.family, t, n));
        if (f.family.is_strict()) {
          tally.expect(gap::gap_by_recurrence(f.family, p, n) == e, "recurrence " + where(f.family, t, n));
        }
      }
    }
  }
  return tally.finish(detail);
}

bool chi_shift(std::string& detail) {
  Tally tally;
  for (const auto& f : families()) {
    const auto a = f.numbers(12);
    for (std::size_t t = 0; t < kSeeded.size(); ++t) {
      const auto& p = kSeeded[t];
      for (unsigned n = 0; n <= 12; ++n) {
        const gap::ProjectionContext ctx(f.family, p, n + 5);
        for (unsigned m = 0; m <= 5; ++m) {
          const Polynomial rhs = oracle::phi(p, m) * oracle::gap_closed_form(a, gap::shift_params(p, m), n);
          tally.expect(gap::project(gap::op_chi(gap::binomial_state(n), m), ctx) == rhs,
                       "projection " + where(f.family, t, n) + " m=" + std::to_string(m));
          tally.expect(gap::chi_shift_identity_check(f.family, p, n, m),
                       "identity " + where(f.family, t, n) + " m=" + std::to_string(m));
        }
      }
    }
  }
  return tally.finish(detail);
}

// Ordinary (not divided) coefficients of t e^t / (e^t - 1) by long division,
// then rescaled by k!: these are B_k(1).
std::vector<Rational> bernoulli_at_one(unsigned order) {
  std::vector<Rational> num(order + 2);
  std::vector<Rational> den(order + 2);
  for (unsigned k = 0; k <= order + 1; ++k) {
    num[k] = Rational(1) / oracle::fact(k);      // (t e^t)/t = e^t
    den[k] = Rational(1) / oracle::fact(k + 1);  // (e^t - 1)/t
  }
  std::vector<Rational> q(order + 2);
  for (unsigned k = 0; k <= order + 1; ++k) {
    Rational acc = num[k];
    for (unsigned j = 0; j < k; ++j) acc -= q[j] * den[k - j];
    q[k] = acc / den[0];
  }
  for (unsigned k = 0; k <= order + 1; ++k) q[k] *= oracle::fact(k);
  return q;
}

bool recurrence_and_beta(std::string& detail) {
  Tally tally;
  for (const auto& f : families()) {
    if (!f.family.is_strict()) continue;
    for (std::size_t t = 0; t < kSeeded.size(); ++t) {
      for (unsigned n = 0; n <= 20; ++n) {
        tally.expect(gap::gap_by_recurrence(f.family, kSeeded[t], n) ==
                         oracle::gap_closed_form(f.numbers(20), kSeeded[t], n),
                     where(f.family, t, n));
      }
    }
  }
  const auto beta = gap::beta_coefficients(gap::builtin_family("bernoulli"), 12);
  const auto b1 = bernoulli_at_one(12);
  for (unsigned k = 0; k <= 12; ++k) {
    tally.expect(beta[k] == -b1[k + 1] / Rational(static_cast<long>(k + 1)), "beta_" + std::to_string(k));
  }
  return tally.finish(detail);
}

bool derivative_projections(std::string& detail) {
  Tally tally;
  for (const auto& f : families()) {
    for (std::size_t t = 0; t < kSeeded.size(); ++t) {
      const auto& p = kSeeded[t];
      const auto a = f.numbers(12);
      for (unsigned n = 0; n <= 12; ++n) {
        const gap::ProjectionContext ctx(f.family, p, n);
        gap::UmbralState du = gap::binomial_state(n);
        gap::UmbralState dv = du;
        for (unsigned m = 0; m <= n; ++m) {
          const Polynomial expected = (oracle::fact(n) / oracle::fact(n - m)) * oracle::gap_closed_form(a, p, n - m);
          const Polynomial pu = gap::project(du, ctx);
          tally.expect(pu == expected, "D_u " + where(f.family, t, n) + " m=" + std::to_string(m));
          tally.expect(gap::project(dv, ctx) == pu, "D_v " + where(f.family, t, n) + " m=" + std::to_string(m));
          du = gap::op_D_u(du);
          dv = gap::op_D_v(dv);
        }
      }
    }
  }
  return tally.finish(detail);
}

bool residuals(std::string& detail) {
  Tally tally;
  using gap::ResidualKind;
  for (const auto& f : ode_families()) {
    for (std::size_t t = 0; t < kSeeded.size(); ++t) {
      const auto& p = kSeeded[t];
      const auto a = f.numbers(12);
      for (unsigned n = 0; n <= 12; ++n) {
        const Rational nr(static_cast<long>(n));
        const Polynomial gap_n = oracle::gap_closed_form(a, p, n);
        const std::string at = where(f.family, t, n);
        tally.expect(gap::ode_residual(ResidualKind::ode_v, f.family, p, n, nr).is_zero(), "ode_v " + at);
        tally.expect(gap::ode_residual(ResidualKind::pde_vu, f.family, p, n, nr).is_zero(), "pde_vu " + at);
        for (const auto kind : {ResidualKind::ode_u, ResidualKind::pde_uv}) {
          const std::string name = std::string(gap::to_string(kind)) + " " + at;
          tally.expect(gap::ode_residual(kind, f.family, p, n, nr + 1).is_zero(), name + " constant n+1");
          tally.expect(gap::ode_residual(kind, f.family, p, n, nr) == gap_n, name + " constant n");
        }
      }
    }
  }
  return tally.finish(detail);
}

bool summation(std::string& detail) {
  Tally tally;
  oracle::Rng rng(20240601);
  const auto fams = families();
  for (int i = 0; i < 50; ++i) {
    const auto& f = fams[static_cast<std::size_t>(rng.integer(0, static_cast<long>(fams.size()) - 1))];
    const HypergeomParams p = rng.params();
    const auto n = static_cast<unsigned>(rng.integer(0, 10));
    const Rational x = rng.rational();
    const Rational y = rng.rational(9, 7, false);
    const auto a = f.numbers(n);
    Rational rhs(0);
    for (unsigned k = 0; k <= n; ++k) {
      rhs += oracle::binom(n, k) * gap::pow(Rational(1) + x / y, k) * oracle::phi(p, k) * gap::pow(y, k) * a[n - k];
    }
    const std::string at = "tuple " + std::to_string(i);
    tally.expect(gap::gap_evaluate(gap::gap_explicit(f.family, p, n), x + y) == rhs, at);
    tally.expect(gap::gap_argument_shift_check(f.family, p, n, x, y), at + " (library check)");
  }
  return tally.finish(detail);
}

bool figures(std::string& detail) {
  Tally tally;
  const HypergeomParams figure{Rational(3), Rational(1), Rational(7)};
  constexpr unsigned kSamples = 201;
  for (const char* name : {"bernoulli", "euler", "genocchi"}) {
    for (unsigned n : {2U, 3U}) {
      gap::cli::RunConfig config;
      config.family = name;
      config.params = figure;
      config.n_set = {n};
      std::ostringstream out;
      tally.expect(gap::cli::cmd_plot(config, Rational(-1), Rational(1), kSamples, out) == 0, "cmd_plot failed");
      std::istringstream in(out.str());
      std::string line;
      std::getline(in, line);
      tally.expect(line == "x,y", "missing header");

      const std::vector<Rational> numbers = std::string(name) == "bernoulli" ? oracle::bernoulli(n)
                                            : std::string(name) == "euler"   ? oracle::euler_integer(n)
                                                                             : oracle::genocchi(n);
      const Polynomial poly = oracle::gap_closed_form(numbers, figure, n);
      unsigned rows = 0;
      while (std::getline(in, line)) {
        const Rational x = Rational(-1) + Rational(2 * static_cast<long>(rows), kSamples - 1);
        const std::string y = line.substr(line.find(',') + 1);
        tally.expect(y == poly.evaluate(x).to_decimal(12),
                     std::string(name) + " n=" + std::to_string(n) + " row " + std::to_string(rows));
        // Cross-check the 12-digit rendering against the machine value.
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", poly.evaluate(x).to_double());
        const double rel = std::abs(std::stod(y) - std::stod(buf));
        tally.expect(rel <= 1e-11 * std::max(1.0, std::abs(std::stod(buf))), "double cross-check");
        ++rows;
      }
      tally.expect(rows == kSamples, "sample count");
    }
  }
  return tally.finish(detail);
}

bool bivariate(std::string& detail) {
  Tally tally;
  for (const auto& f : families()) {
    const auto a = f.numbers(10);
    for (std::size_t t = 0; t < kSeeded.size(); ++t) {
      const auto& p = kSeeded[t];
      for (unsigned n = 0; n <= 10; ++n) {
        gap::BivariatePolynomial expected;
        for (unsigned j = 0; 2 * j <= n; ++j) {
          for (unsigned i = 0; i + 2 * j <= n; ++i) {
            const unsigned m = n - i - 2 * j;
            const Rational c =
                oracle::fact(n) / (oracle::fact(i) * oracle::fact(j) * oracle::fact(m)) * oracle::phi(p, j) * a[m];
            if (!c.is_zero()) expected.add_term(c, i, j);
          }
        }
        const auto poly = gap::bivariate_gap(f.family, p, n);
        tally.expect(poly == expected, "closed form " + where(f.family, t, n));
        std::vector<Rational> appell(n + 1);
        for (unsigned k = 0; k <= n; ++k) appell[k] = oracle::binom(n, k) * a[n - k];
        tally.expect(poly.at_y_zero() == Polynomial(appell), "y=0 " + where(f.family, t, n));
      }
    }
  }
  return tally.finish(detail);
}

bool determinism(std::string& detail) {
  const std::vector<std::string> args = {"verify", "--suite", "all", "--seed", "42"};
  std::string reports[2];
  int codes[2];
  for (int i = 0; i < 2; ++i) {
    std::ostringstream out;
    std::ostringstream err;
    codes[i] = gap::cli::run(args, out, err);
    reports[i] = out.str();
  }
  if (codes[0] != 0 || codes[1] != 0) {
    detail = "verify exited with " + std::to_string(codes[0]) + "/" + std::to_string(codes[1]);
    return false;
  }
  if (reports[0] != reports[1]) {
    detail = "reports differ";
    return false;
  }
  detail = std::to_string(reports[0].size()) + " identical bytes";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "Gauss-Bernoulli table rows n=0..4", 1.0,
       [](std::string& d) { return printed_tables({"bernoulli"}, d); }},
      {"AC2", "Gauss-Euler (integer) and Gauss-Genocchi table rows", 1.0,
       [](std::string& d) { return printed_tables({"euler", "genocchi"}, d); }},
      {"AC3", "explicit = flipped = generating (= recurrence), n<=20", 10.0, triple_equivalence},
      {"AC4", "chi^m shift identity, n<=12, m<=5", 0, chi_shift},
      {"AC5", "recurrence reproduction and Bernoulli beta_k", 0, recurrence_and_beta},
      {"AC6", "D_u^m / D_v^m projections, m<=n<=12", 0, derivative_projections},
      {"AC7", "ODE/PDE residuals at constants n and n+1", 0, residuals},
      {"AC8", "summation formula, 50 random tuples", 0, summation},
      {"AC9", "plot samples match exact evaluation to 12 digits", 0, figures},
      {"AC10", "bivariate closed form and y=0 collapse, n<=10", 0, bivariate},
      {"AC11", "verify --suite all --seed 42 is byte-identical", 0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = Clock::now();
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (ok && c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      ok = false;
      detail += "; over time limit";
    }
    if (!ok) ++failures;
    std::printf("[%s] %-4s %s (%s; %.3f s%s)\n", ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                detail.c_str(), seconds,
                c.time_limit_s > 0 ? (" < " + std::to_string(static_cast<int>(c.time_limit_s)) + " s").c_str() : "");
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
