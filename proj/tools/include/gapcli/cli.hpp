#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gap/appell.hpp"
#include "gap/hypergeom.hpp"
#include "gap/rational.hpp"

namespace gap::cli {

/// Exit codes of the gapoly tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string family = "bernoulli";
  EulerConvention convention = EulerConvention::integer;
  std::vector<Rational> custom_numbers;  // --numbers, family "custom" only
  std::optional<HypergeomParams> params;  // unset: symbolic-check mode
  std::vector<unsigned> n_set{0};
  std::optional<std::size_t> order;
  unsigned nmax = 12;
  unsigned trials = 5;
  std::uint64_t seed = 42;
  std::string format;  // per-command default when empty
  std::string out;     // empty: stdout

  AppellFamily make_family() const;
  /// max(n_set) + 6 unless --order was given; throws if --order is too small.
  std::size_t effective_order() const;
};

/// "3", "0,2,5", "0..4" or mixtures such as "0..2,7".
std::vector<unsigned> parse_n_set(std::string_view text);

/// Deterministic parameter triples for symbolic-check mode. a, b and c are
/// never zero or negative integers, so every (c)_k and phi_k is nonzero.
std::vector<HypergeomParams> sample_params(std::uint64_t seed, std::size_t count);

/// splitmix64 step; the generator behind every sampled value.
std::uint64_t next_random(std::uint64_t& state);

/// Small random rational p/q with |p| <= 9, 1 <= q <= 6, drawn from `state`.
Rational sample_rational(std::uint64_t& state, bool allow_zero);

/// Parameter sets a command iterates over: the explicit triple, or
/// `trials` sampled triples.
std::vector<HypergeomParams> parameter_sets(const RunConfig& config);

int cmd_gen(const RunConfig& config, std::ostream& out);
int cmd_eval(const RunConfig& config, const Rational& x, std::ostream& out);
int cmd_numbers(const RunConfig& config, std::size_t order, std::ostream& out);
int cmd_plot(const RunConfig& config, const Rational& xmin, const Rational& xmax, unsigned samples,
             std::ostream& out);

enum class Suite { expansion, recurrence, shift, summation, derivative, theorem3, lemma1, odes, pdes, all };
Suite parse_suite(std::string_view name);
std::string_view to_string(Suite suite) noexcept;

int cmd_verify(Suite suite, const RunConfig& config, std::ostream& out);

/// Full command-line entry point; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gap::cli
