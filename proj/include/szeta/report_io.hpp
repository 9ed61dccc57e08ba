#pragma once

#include <string>
#include <utility>
#include <vector>

#include "szeta/zetaline.hpp"

namespace szeta {

// Shortest round-trip decimal form; used for every numeric field so that
// equal configs give byte-identical outputs.
std::string fmt_g17(double x);

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

// "# key=value" header lines (version first), then caller-written rows.
std::string config_header(const ConfigEcho& config);

// Histogram of the normalized S values with the standard normal overlay,
// written as a self-contained SVG.
void write_histogram_svg(const SWindowStats& stats, const std::string& path);

}  // namespace szeta
