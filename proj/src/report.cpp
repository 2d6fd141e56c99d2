#include "taxicab/report.hpp"

#include <fmt/format.h>

namespace taxicab {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  return fmt::format("{:.12g}", v);
}

std::string format_point(Point x) { return format_number(x.x1) + ", " + format_number(x.x2); }

namespace {

std::string describe(const CurvePiece& piece, const Isometry& toWorld) {
  std::string out = fmt::format("{} {} -> {}", to_string(piece.kind), format_point(toWorld(piece.start)),
                                format_point(toWorld(piece.end)));
  if (piece.kind == PieceKind::GuideSegment) {
    out += fmt::format(" slope {}", piece.slope);
  } else {
    out += fmt::format(" center {} branch {}", format_point(toWorld(piece.center)), piece.branch);
  }
  return out;
}

}  // namespace

std::string info_report(const CassiniSpec& input) {
  const CassiniSpec spec = make_spec(input.p, input.q, input.r);
  const FociFrame frame = foci_frame(spec.p, spec.q);
  const Topology topo = topology(spec);

  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out += fmt::format("{}: {}\n", key, value);
  };

  line("p", format_point(spec.p));
  line("q", format_point(spec.q));
  line("r", format_number(spec.r));
  line("r_star", format_number(critical_radius(spec.p, spec.q).rStar));
  line("topology", std::string(to_string(topo)));
  line("curves", std::to_string(curve_count(topo)));
  line("midpoint", format_point(frame.mid));
  line("c1", format_point(frame.c1));
  line("c2", format_point(frame.c2));
  line("g_plus", format_point(frame.gPlus));
  line("g_minus", format_point(frame.gMinus));

  const Standardized st = standardize(spec.p, spec.q);
  line("standardize.group", std::string(to_string(st.iso.group)));
  line("standardize.translation", format_point(st.iso.translation));
  line("standardize.p", format_point(st.p));
  line("standardize.q", format_point(st.q));

  if (topo == Topology::PointPair) {
    line("degenerate", spec.p == spec.q ? "single point" : "two points");
    line("pieces", "none");
    return out;
  }

  const Isometry toWorld = inverse(st.iso);
  if (topo == Topology::TaxicabCircle) {
    int k = 0;
    for (const CurvePiece& piece : build_curves(spec).front().pieces) {
      line(fmt::format("piece.{}", k++), describe(piece, toWorld));
    }
    return out;
  }

  // Inventory by region of the standard frame; endpoints in the caller's frame.
  const CassiniSpec standard{st.p, st.q, spec.r};
  for (RegionId region : kAllRegions) {
    std::vector<CurvePiece> pieces;
    if (is_quadrant(region)) {
      if (auto piece = quadrant_piece(standard, region)) pieces.push_back(*piece);
    } else if (is_strip(region)) {
      pieces = halfstrip_pieces(standard, region);
    } else {
      pieces = rectangle_pieces(standard);
    }
    const std::string key = fmt::format("region.{}", to_string(region));
    if (pieces.empty()) {
      line(key, "absent");
      continue;
    }
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      line(pieces.size() == 1 ? key : fmt::format("{}.{}", key, k), describe(pieces[k], toWorld));
    }
  }
  return out;
}

}  // namespace taxicab
