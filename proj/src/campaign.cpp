#include "taxicab/campaign.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "taxicab/characterization.hpp"
#include "taxicab/oracle.hpp"

namespace taxicab {

std::string_view to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::Thm2: return "Thm2";
    case VerifyMode::Thm3: return "Thm3";
    case VerifyMode::Cor1Sub: return "Cor1Sub";
    case VerifyMode::Cor2Eq: return "Cor2Eq";
    case VerifyMode::Topology: return "Topology";
    case VerifyMode::Residual: return "Residual";
    case VerifyMode::Boundary: return "Boundary";
  }
  return "?";
}

std::optional<VerifyMode> parse_mode(std::string_view name) {
  for (VerifyMode m : kAllModes) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<VerifyMode> parse_modes(std::string_view list) {
  if (list == "all") return {std::begin(kAllModes), std::end(kAllModes)};
  std::vector<VerifyMode> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view name = list.substr(0, comma);
    const auto mode = parse_mode(name);
    if (!mode) throw std::invalid_argument(fmt::format("unknown mode '{}'", name));
    if (std::find(out.begin(), out.end(), *mode) == out.end()) out.push_back(*mode);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("no modes selected");
  return out;
}

void VerifyConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (gridN < 16) throw std::invalid_argument("grid must be >= 16");
  if (!(band >= 0.0) || !std::isfinite(band)) throw std::invalid_argument("band must be >= 0");
  if (modes.empty()) throw std::invalid_argument("no modes selected");
}

bool CampaignReport::passed() const {
  return std::all_of(modes.begin(), modes.end(), [](const ModeReport& m) { return m.mismatches == 0; });
}

std::mt19937_64 mode_stream(std::uint64_t seed, VerifyMode mode) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(mode)};
  return std::mt19937_64(seq);
}

CassiniSpec random_spec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-20.0, 20.0);
  std::uniform_real_distribution<double> radius(0.0, 40.0);
  const double p1 = coord(rng), p2 = coord(rng), q1 = coord(rng), q2 = coord(rng);
  double r = 0.0;
  while (r == 0.0) r = radius(rng);
  return {{p1, p2}, {q1, q2}, r};
}

CassiniSpec random_topology_spec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-20.0, 20.0);
  std::uniform_real_distribution<double> ratio(0.0, 2.0);
  for (;;) {
    const Point p{coord(rng), coord(rng)};
    const Point q{coord(rng), coord(rng)};
    const double u = ratio(rng);
    const double rStar = critical_radius(p, q).rStar;
    if (rStar > 0.0 && u > 0.0 && u != 1.0) return {p, q, u * rStar};
  }
}

double feature_size(const CassiniSpec& spec) {
  const double span = taxicab_distance(spec.p, spec.q);
  const double rStar = 0.5 * span;
  const double r = spec.r;
  if (span == 0.0) return r;
  if (r < rStar) {
    // A loop reaches at least r^2 / d from its focus toward the other one;
    // the two loops are separated by the guide lines x1 + x2 = ±sqrt(r*^2 - r^2).
    const double gap = std::sqrt((rStar - r) * (rStar + r));
    return std::min(r * r / (2.0 * span), gap);
  }
  // Above r* the central rectangle is inside, so the waist is at least its
  // short side.
  const double shortSide = std::min(std::abs(spec.p.x1 - spec.q.x1), std::abs(spec.p.x2 - spec.q.x2));
  return std::min(std::max(r - rStar, shortSide), rStar);
}

double topology_spacing(const CassiniSpec& spec, int gridN) {
  const double rStar = critical_radius(spec.p, spec.q).rStar;
  const double coarse = rStar > 0.0 ? rStar / 64.0 : spec.r / 16.0;
  const double lattice = 2.0 * default_half_width(spec) / (std::max(gridN, 16) - 1);
  return std::min({coarse, 0.25 * feature_size(spec), lattice});
}

int oracle_component_count(const CassiniSpec& spec, int gridN, double* spacing) {
  const ScalarGrid grid = focus_aligned_field(spec, topology_spacing(spec, gridN), kMaxOracleGrid);
  if (spacing) *spacing = grid.spacing();
  return component_count(extract_contour(grid));
}

double max_relative_residual(const CassiniSpec& spec, int samplesPerCurve) {
  const double level = spec.r * spec.r;
  const double scale = std::max(1.0, level);
  double worst = 0.0;
  for (const ClosedCurve& curve : build_curves(spec)) {
    for (const Point& x : sample_curve(curve, samplesPerCurve)) {
      worst = std::max(worst, std::abs(product_value(spec, x) - level) / scale);
    }
  }
  return worst;
}

double boundary_probe_radius(const CassiniSpec& spec) {
  return std::min(0.05, 0.25 * feature_size(spec));
}

namespace {

IdentityMode identity_mode(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::Thm2: return IdentityMode::Thm2;
    case VerifyMode::Thm3: return IdentityMode::Thm3;
    case VerifyMode::Cor1Sub: return IdentityMode::Cor1Sub;
    default: return IdentityMode::Cor2Eq;
  }
}

ModeReport run_mode(const VerifyConfig& config, VerifyMode mode) {
  std::mt19937_64 rng = mode_stream(config.seed, mode);
  ModeReport report;
  report.mode = mode;

  switch (mode) {
    case VerifyMode::Thm2:
    case VerifyMode::Thm3:
    case VerifyMode::Cor1Sub:
    case VerifyMode::Cor2Eq: {
      IdentityReport total;
      for (int t = 0; t < config.trials; ++t) {
        const CassiniSpec spec = random_spec(rng);
        const auto [center, halfWidth] = identity_box(spec.p, spec.q, spec.r);
        const auto samples = grid_samples(center, halfWidth, config.gridN);
        total += verify_identity(spec.p, spec.q, spec.r, identity_mode(mode), samples, config.band);
      }
      report.instances = config.trials;
      report.samples = total.trials;
      report.mismatches = total.mismatches;
      report.skipped = total.skippedBoundaryBand;
      report.worstResidual = total.worstResidual;
      break;
    }
    case VerifyMode::Residual: {
      double worst = 0.0;
      for (int t = 0; t < config.trials; ++t) {
        const CassiniSpec spec = random_spec(rng);
        const double level = spec.r * spec.r;
        const double scale = std::max(1.0, level);
        for (const ClosedCurve& curve : build_curves(spec)) {
          for (const Point& x : sample_curve(curve, 64)) {
            const double residual = std::abs(product_value(spec, x) - level) / scale;
            worst = std::max(worst, residual);
            ++report.samples;
            if (residual > kOnCurveTolerance) ++report.mismatches;
          }
        }
      }
      report.instances = config.trials;
      report.worstResidual = worst;
      break;
    }
    case VerifyMode::Topology: {
      for (int t = 0; t < config.trials; ++t) {
        const CassiniSpec spec = random_topology_spec(rng);
        const int expected = curve_count(topology(spec));
        double spacing = 0.0;
        const int sampled = oracle_component_count(spec, config.gridN, &spacing);
        const double rStar = critical_radius(spec.p, spec.q).rStar;
        report.maxSpacingRatio = std::max(report.maxSpacingRatio, spacing / rStar);
        const int analytic = static_cast<int>(build_curves(spec).size());
        ++report.samples;
        if (analytic != expected || sampled != expected) ++report.mismatches;
      }
      report.instances = config.trials;
      break;
    }
    case VerifyMode::Boundary: {
      for (int t = 0; t < config.trials; ++t) {
        const CassiniSpec spec = random_spec(rng);
        const double probe = boundary_probe_radius(spec);
        for (const ClosedCurve& curve : build_curves(spec)) {
          const auto points = sample_curve(curve, 64);
          report.samples += static_cast<std::int64_t>(points.size());
          report.mismatches += boundary_failures(spec, points, probe);
        }
      }
      report.instances = config.trials;
      break;
    }
  }
  return report;
}

}  // namespace

CampaignReport run_campaign(const VerifyConfig& config) {
  config.validate();
  CampaignReport report;
  for (VerifyMode mode : config.modes) report.modes.push_back(run_mode(config, mode));
  return report;
}

std::string format_campaign(const CampaignReport& report) {
  std::string out;
  for (const ModeReport& m : report.modes) {
    out += fmt::format("mode: {}\n", to_string(m.mode));
    out += fmt::format("  instances: {}\n", m.instances);
    out += fmt::format("  samples: {}\n", m.samples);
    out += fmt::format("  mismatches: {}\n", m.mismatches);
    out += fmt::format("  skipped: {}\n", m.skipped);
    if (m.worstResidual) out += fmt::format("  worst_residual: {:.6e}\n", *m.worstResidual);
    if (m.mode == VerifyMode::Topology) {
      out += fmt::format("  max_spacing_over_rstar: {:.6e}\n", m.maxSpacingRatio);
    }
  }
  out += fmt::format("status: {}\n", report.passed() ? "ok" : "mismatch");
  return out;
}

}  // namespace taxicab
