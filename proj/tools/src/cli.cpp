#include "gapcli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gap/errors.hpp"
#include "gap/gauss_appell.hpp"
#include "gapcli/report.hpp"

namespace gap::cli {

std::uint64_t next_random(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

namespace {

bool is_nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

Rational sample_parameter(std::uint64_t& state) {
  for (;;) {
    Rational r = sample_rational(state, false);
    if (!is_nonpositive_integer(r)) return r;
  }
}

unsigned parse_unsigned(std::string_view text) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(Errc::parse_error, "not a non-negative integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.str();
  return "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string latex_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? -c : c;
    if (k == 0 || magnitude != Rational(1)) out += latex_rational(magnitude);
    if (k > 0) out += "x";
    if (k > 1) out += "^{" + std::to_string(k) + "}";
  }
  return out;
}

char family_letter(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::bernoulli: return 'B';
    case FamilyKind::euler: return 'E';
    case FamilyKind::genocchi: return 'G';
    case FamilyKind::hermite: return 'H';
    case FamilyKind::custom: return 'A';
  }
  return 'A';
}

constexpr std::size_t kNoOrder = std::numeric_limits<std::size_t>::max();

void check_n_against_order(const RunConfig& config) {
  // Throws when --order is too small for the requested indices.
  (void)config.effective_order();
}

}  // namespace

AppellFamily RunConfig::make_family() const {
  const FamilyKind kind = parse_family(family);
  if (kind == FamilyKind::custom) {
    if (custom_numbers.empty()) throw Error(Errc::parse_error, "family custom needs --numbers");
    return AppellFamily::custom(custom_numbers);
  }
  return builtin_family(kind, convention);
}

std::size_t RunConfig::effective_order() const {
  const unsigned max_n = n_set.empty() ? 0U : *std::max_element(n_set.begin(), n_set.end());
  const std::size_t required = static_cast<std::size_t>(max_n) + 6;
  if (!order) return required;
  if (*order < required) {
    throw Error(Errc::parse_error, "--order " + std::to_string(*order) + " is below max(n) + 6 = " +
                                       std::to_string(required));
  }
  return *order;
}

std::vector<unsigned> parse_n_set(std::string_view text) {
  std::vector<unsigned> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_unsigned(item));
    } else {
      const unsigned lo = parse_unsigned(item.substr(0, dots));
      const unsigned hi = parse_unsigned(item.substr(dots + 2));
      if (lo > hi) throw Error(Errc::parse_error, "empty range '" + std::string(item) + "'");
      for (unsigned n = lo; n <= hi; ++n) out.push_back(n);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational sample_rational(std::uint64_t& state, bool allow_zero) {
  for (;;) {
    const long p = static_cast<long>(next_random(state) % 19) - 9;
    const long q = static_cast<long>(next_random(state) % 6) + 1;
    if (p == 0 && !allow_zero) continue;
    return Rational(p, q);
  }
}

std::vector<HypergeomParams> sample_params(std::uint64_t seed, std::size_t count) {
  std::uint64_t state = seed;
  std::vector<HypergeomParams> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rational a = sample_parameter(state);
    Rational b = sample_parameter(state);
    Rational c = sample_parameter(state);
    out.push_back({std::move(a), std::move(b), std::move(c)});
  }
  return out;
}

std::vector<HypergeomParams> parameter_sets(const RunConfig& config) {
  if (config.params) return {*config.params};
  return sample_params(config.seed, config.trials);
}

int cmd_gen(const RunConfig& config, std::ostream& out) {
  check_n_against_order(config);
  const AppellFamily family = config.make_family();
  const std::string format = config.format.empty() ? "json" : config.format;
  if (format != "json" && format != "csv" && format != "latex") {
    throw Error(Errc::parse_error, "gen supports --format json|csv|latex");
  }
  const auto sets = parameter_sets(config);
  if (format == "csv") out << "family,convention,a,b,c,n,k,coeff\n";
  for (const auto& params : sets) {
    for (const unsigned n : config.n_set) {
      const Polynomial p = gap_explicit(family, params, n);
      if (format == "json") {
        nlohmann::ordered_json record;
        record["family"] = family.name();
        record["convention"] = convention_json(family);
        record["params"] = params_json(params);
        record["n"] = n;
        record["coeffs"] = coeffs_json(p);
        out << record.dump() << '\n';
      } else if (format == "csv") {
        const std::string prefix = family.name() + "," +
                                   (family.kind() == FamilyKind::euler ? std::string(to_string(family.convention())) : "") +
                                   "," + params.a.str() + "," + params.b.str() + "," + params.c.str() + "," +
                                   std::to_string(n) + ",";
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) out << prefix << k << ',' << p.coeffs()[k] << '\n';
      } else {
        out << "{}_{2}F_{1}" << family_letter(family.kind()) << "_{" << n << "}(" << latex_rational(params.a) << ","
            << latex_rational(params.b) << ";" << latex_rational(params.c) << ";x) = " << latex_polynomial(p)
            << " \\\\\n";
      }
    }
  }
  return kExitOk;
}

int cmd_eval(const RunConfig& config, const Rational& x, std::ostream& out) {
  check_n_against_order(config);
  if (config.n_set.size() != 1) throw Error(Errc::parse_error, "eval needs a single --n");
  if (!config.params) throw Error(Errc::parse_error, "eval needs --a, --b and --c");
  const AppellFamily family = config.make_family();
  out << gap_evaluate(gap_explicit(family, *config.params, config.n_set.front()), x).str() << '\n';
  return kExitOk;
}

int cmd_numbers(const RunConfig& config, std::size_t order, std::ostream& out) {
  const AppellFamily family = config.make_family();
  const auto numbers = appell_numbers(family, order).values;
  std::optional<std::vector<Rational>> beta;
  std::string note;
  try {
    beta = beta_coefficients(family, order);
  } catch (const Error& e) {
    if (e.code() != Errc::not_strict_appell) throw;
    note = "undefined (A_0=0)";
  }

  const std::string format = config.format.empty() ? "text" : config.format;
  if (format == "json") {
    nlohmann::ordered_json record;
    record["family"] = family.name();
    record["convention"] = convention_json(family);
    record["order"] = order;
    record["A"] = rationals_json(numbers);
    record["beta"] = beta ? rationals_json(*beta) : nlohmann::ordered_json(nullptr);
    if (!beta) record["note"] = note;
    out << record.dump() << '\n';
    return kExitOk;
  }
  if (format != "text") throw Error(Errc::parse_error, "numbers supports --format text|json");
  auto join = [](const std::vector<Rational>& values) {
    std::string s;
    for (std::size_t k = 0; k < values.size(); ++k) s += (k == 0 ? "" : ",") + values[k].str();
    return s;
  };
  out << "A: " << join(numbers) << '\n';
  out << "beta: " << (beta ? join(*beta) : note) << '\n';
  return kExitOk;
}

Suite parse_suite(std::string_view name) {
  static constexpr std::pair<std::string_view, Suite> kSuites[] = {
      {"expansion", Suite::expansion}, {"recurrence", Suite::recurrence}, {"shift", Suite::shift},
      {"summation", Suite::summation}, {"derivative", Suite::derivative}, {"theorem3", Suite::theorem3},
      {"lemma1", Suite::lemma1},       {"odes", Suite::odes},             {"pdes", Suite::pdes},
      {"all", Suite::all},
  };
  for (const auto& [text, suite] : kSuites) {
    if (text == name) return suite;
  }
  throw Error(Errc::parse_error, "unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::expansion: return "expansion";
    case Suite::recurrence: return "recurrence";
    case Suite::shift: return "shift";
    case Suite::summation: return "summation";
    case Suite::derivative: return "derivative";
    case Suite::theorem3: return "theorem3";
    case Suite::lemma1: return "lemma1";
    case Suite::odes: return "odes";
    case Suite::pdes: return "pdes";
    case Suite::all: return "all";
  }
  return "all";
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss-Appell polynomials with exact rational arithmetic", "gapoly"};
  app.require_subcommand(1);

  RunConfig config;
  std::string a_text;
  std::string b_text;
  std::string c_text;
  std::string n_text;
  std::string convention_text;
  std::string numbers_text;
  std::string x_text;
  std::string xmin_text = "-1";
  std::string xmax_text = "1";
  std::string suite_text = "all";
  unsigned samples = 201;
  std::size_t order_value = kNoOrder;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", config.family, "bernoulli|euler|genocchi|hermite|custom");
    sub->add_option("--euler-convention,--convention", convention_text, "series|integer (euler only)");
    sub->add_option("--numbers", numbers_text, "comma-separated A_0,A_1,... for --family custom");
    sub->add_option("--a", a_text, "parameter a (p/q)");
    sub->add_option("--b", b_text, "parameter b (p/q)");
    sub->add_option("--c", c_text, "parameter c (p/q)");
    sub->add_option("--n", n_text, "index, list or range i..j");
    sub->add_option("--order", order_value, "truncation order");
    sub->add_option("--nmax", config.nmax, "largest n for verify suites");
    sub->add_option("--trials", config.trials, "sampled parameter triples");
    sub->add_option("--seed", config.seed, "seed for sampled parameters");
    sub->add_option("--format", config.format, "json|csv|latex|svg|text");
    sub->add_option("--out", config.out, "output path (default stdout)");
  };

  CLI::App* gen = app.add_subcommand("gen", "print Gauss-Appell polynomial coefficients");
  CLI::App* eval = app.add_subcommand("eval", "evaluate one polynomial exactly");
  CLI::App* verify = app.add_subcommand("verify", "run identity verification suites");
  CLI::App* plot = app.add_subcommand("plot", "emit CSV or SVG plot data");
  CLI::App* numbers = app.add_subcommand("numbers", "print Appell numbers and beta coefficients");
  for (CLI::App* sub : {gen, eval, verify, plot, numbers}) add_common(sub);
  eval->add_option("--x", x_text, "evaluation point (p/q)")->required();
  verify->add_option("--suite", suite_text, "expansion|recurrence|shift|summation|derivative|theorem3|lemma1|odes|pdes|all");
  plot->add_option("--xmin", xmin_text, "left end (p/q)");
  plot->add_option("--xmax", xmax_text, "right end (p/q)");
  plot->add_option("--samples", samples, "number of sample points (>= 2)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!convention_text.empty()) config.convention = parse_convention(convention_text);
    if (!numbers_text.empty()) {
      std::stringstream ss(numbers_text);
      std::string item;
      while (std::getline(ss, item, ',')) config.custom_numbers.push_back(Rational::parse(item));
    }
    const int given = static_cast<int>(!a_text.empty()) + static_cast<int>(!b_text.empty()) +
                      static_cast<int>(!c_text.empty());
    if (given == 3) {
      config.params = HypergeomParams{Rational::parse(a_text), Rational::parse(b_text), Rational::parse(c_text)};
    } else if (given != 0) {
      throw Error(Errc::parse_error, "give all of --a, --b, --c or none of them");
    }
    if (!n_text.empty()) config.n_set = parse_n_set(n_text);
    if (order_value != kNoOrder) config.order = order_value;

    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.out.empty()) {
      file.open(config.out, std::ios::binary);
      if (!file) throw Error(Errc::parse_error, "cannot open --out " + config.out);
      sink = &file;
    }

    if (gen->parsed()) return cmd_gen(config, *sink);
    if (eval->parsed()) return cmd_eval(config, Rational::parse(x_text), *sink);
    if (numbers->parsed()) {
      const std::size_t order = config.order.value_or(n_text.empty() ? 10 : config.n_set.back());
      return cmd_numbers(config, order, *sink);
    }
    if (verify->parsed()) {
      if (n_text.empty()) config.n_set = {config.nmax};
      return cmd_verify(parse_suite(suite_text), config, *sink);
    }
    if (plot->parsed()) {
      return cmd_plot(config, Rational::parse(xmin_text), Rational::parse(xmax_text), samples, *sink);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gap::cli
