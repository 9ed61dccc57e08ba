#include "szeta/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "szeta/errors.hpp"
#include "szeta/version.hpp"

namespace szeta {

std::string fmt_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string config_header(const ConfigEcho& config) {
  std::string out = "# ";
  out += kVersion;
  out += "\n";
  for (const auto& [k, v] : config) {
    out += "# ";
    out += k;
    out += "=";
    out += v;
    out += "\n";
  }
  return out;
}

void write_histogram_svg(const SWindowStats& stats, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open svg for writing: " + path);
  const double W = 840.0, Hpx = 520.0, ml = 60.0, mr = 20.0, mt = 20.0, mb = 40.0;
  const double x_lo = stats.bin_lo;
  const double x_hi = stats.bin_lo + stats.bin_width * static_cast<double>(stats.bin_mass.size());
  double total = 0.0;
  for (double m : stats.bin_mass) total += m;
  if (total <= 0.0) total = 1.0;
  double dmax = 0.45;  // at least the N(0,1) peak
  for (double m : stats.bin_mass) dmax = std::max(dmax, m / (total * stats.bin_width));
  dmax *= 1.08;
  auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * (W - ml - mr); };
  auto py = [&](double d) { return Hpx - mb - d / dmax * (Hpx - mt - mb); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << Hpx
      << "\" viewBox=\"0 0 " << W << " " << Hpx << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t k = 0; k < stats.bin_mass.size(); ++k) {
    const double d = stats.bin_mass[k] / (total * stats.bin_width);
    if (d <= 0.0) continue;
    const double x0 = px(x_lo + static_cast<double>(k) * stats.bin_width);
    const double x1 = px(x_lo + static_cast<double>(k + 1) * stats.bin_width);
    out << "<rect x=\"" << x0 << "\" y=\"" << py(d) << "\" width=\"" << (x1 - x0)
        << "\" height=\"" << (py(0.0) - py(d)) << "\" fill=\"#7aa6d6\"/>\n";
  }
  out << "<polyline fill=\"none\" stroke=\"#b03030\" stroke-width=\"1.5\" points=\"";
  for (int i = 0; i <= 400; ++i) {
    const double x = x_lo + (x_hi - x_lo) * i / 400.0;
    const double d = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
    out << px(x) << "," << py(d) << " ";
  }
  out << "\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << py(0.0) << "\" x2=\"" << (W - mr) << "\" y2=\""
      << py(0.0) << "\" stroke=\"black\"/>\n";
  for (int x = static_cast<int>(std::ceil(x_lo)); x <= static_cast<int>(std::floor(x_hi)); ++x) {
    out << "<line x1=\"" << px(x) << "\" y1=\"" << py(0.0) << "\" x2=\"" << px(x) << "\" y2=\""
        << (py(0.0) + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << px(x) << "\" y=\"" << (py(0.0) + 20)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << x << "</text>\n";
  }
  out << "<text x=\"" << (W / 2) << "\" y=\"" << (Hpx - 6)
      << "\" font-size=\"12\" text-anchor=\"middle\">pi*sqrt(2)*S(t)/sqrt(loglog T)</text>\n";
  out << "</svg>\n";
  if (!out) throw ConfigError("write failure on svg: " + path);
}

}  // namespace szeta
