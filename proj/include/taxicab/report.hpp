#pragma once

// Plain key: value instance report for the CLI.

#include <string>

#include "taxicab/cassini.hpp"

namespace taxicab {

/// Shortest round-trip-ish decimal (up to 12 significant digits), no "-0".
std::string format_number(double v);
std::string format_point(Point x);

/// Critical radius, topology, guide complements, standardizing isometry and
/// the region-by-region piece inventory with caller-frame endpoints.
std::string info_report(const CassiniSpec& spec);

}  // namespace taxicab
