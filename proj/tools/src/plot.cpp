#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "gap/errors.hpp"
#include "gap/gauss_appell.hpp"
#include "gapcli/cli.hpp"

namespace gap::cli {

namespace {

struct Sample {
  Rational x;
  Rational y;
};

std::string fmt(double value, const char* pattern) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (const char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

void write_svg(std::ostream& out, const std::vector<Sample>& samples, const std::string& title) {
  constexpr double kWidth = 640;
  constexpr double kHeight = 480;
  constexpr double kLeft = 70;
  constexpr double kRight = 20;
  constexpr double kTop = 40;
  constexpr double kBottom = 50;
  constexpr int kTicks = 5;

  const double x0 = samples.front().x.to_double();
  const double x1 = samples.back().x.to_double();
  double y0 = samples.front().y.to_double();
  double y1 = y0;
  for (const auto& s : samples) {
    y0 = std::min(y0, s.y.to_double());
    y1 = std::max(y1, s.y.to_double());
  }
  if (y1 - y0 < 1e-12) {
    y0 -= 1;
    y1 += 1;
  }
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * plot_w; };
  auto sy = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * plot_h; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
      << xml_escape(title) << "</text>\n";

  // Axes frame; the x = 0 and y = 0 lines are drawn when inside the window.
  out << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\"" << plot_h << "\"/>\n";
  if (y0 < 0 && y1 > 0) {
    out << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(sy(0), "%.3f") << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
        << fmt(sy(0), "%.3f") << "\" stroke=\"gray\"/>\n";
  }
  if (x0 < 0 && x1 > 0) {
    out << "<line x1=\"" << fmt(sx(0), "%.3f") << "\" y1=\"" << kTop << "\" x2=\"" << fmt(sx(0), "%.3f") << "\" y2=\""
        << kTop + plot_h << "\" stroke=\"gray\"/>\n";
  }
  out << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = x0 + (x1 - x0) * i / kTicks;
    const double px = sx(fx);
    out << "<line x1=\"" << fmt(px, "%.3f") << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << fmt(px, "%.3f")
        << "\" y2=\"" << kTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(px, "%.3f") << "\" y=\"" << kTop + plot_h + 18 << "\" text-anchor=\"middle\">"
        << fmt(fx, "%.3g") << "</text>\n";
    const double fy = y0 + (y1 - y0) * i / kTicks;
    const double py = sy(fy);
    out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fmt(py, "%.3f") << "\" x2=\"" << kLeft << "\" y2=\""
        << fmt(py, "%.3f") << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(py + 4, "%.3f") << "\" text-anchor=\"end\">"
        << fmt(fy, "%.3g") << "</text>\n";
  }
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">x</text>\n";
  out << "</g>\n";

  out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i != 0) out << ' ';
    out << fmt(sx(samples[i].x.to_double()), "%.3f") << ',' << fmt(sy(samples[i].y.to_double()), "%.3f");
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace

int cmd_plot(const RunConfig& config, const Rational& xmin, const Rational& xmax, unsigned samples,
             std::ostream& out) {
  (void)config.effective_order();
  if (samples < 2) throw Error(Errc::parse_error, "--samples must be at least 2");
  if (!(xmin < xmax)) throw Error(Errc::parse_error, "--xmin must be below --xmax");
  if (config.n_set.size() != 1) throw Error(Errc::parse_error, "plot needs a single --n");
  if (!config.params) throw Error(Errc::parse_error, "plot needs --a, --b and --c");
  const std::string format = config.format.empty() ? "csv" : config.format;
  if (format != "csv" && format != "svg") throw Error(Errc::parse_error, "plot supports --format csv|svg");

  const AppellFamily family = config.make_family();
  const HypergeomParams& p = *config.params;
  const unsigned n = config.n_set.front();
  const Polynomial poly = gap_explicit(family, p, n);

  std::vector<Sample> points;
  points.reserve(samples);
  const Rational step = (xmax - xmin) / Rational(static_cast<long>(samples) - 1);
  for (unsigned i = 0; i < samples; ++i) {
    const Rational x = xmin + Rational(static_cast<long>(i)) * step;
    points.push_back({x, gap_evaluate(poly, x)});
  }

  if (format == "csv") {
    out << "x,y\n";
    for (const auto& s : points) out << s.x.to_decimal(12) << ',' << s.y.to_decimal(12) << '\n';
    return kExitOk;
  }
  const std::string title = family.name() + " n=" + std::to_string(n) + " (a,b;c)=(" + p.a.str() + "," +
                            p.b.str() + ";" + p.c.str() + ")";
  write_svg(out, points, title);
  return kExitOk;
}

}  // namespace gap::cli
