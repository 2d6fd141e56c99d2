#pragma once

// Seeded verification campaigns over random instances. Every mode draws its
// instances from its own stream, so selecting modes never changes results.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "taxicab/cassini.hpp"

namespace taxicab {

enum class VerifyMode { Thm2, Thm3, Cor1Sub, Cor2Eq, Topology, Residual, Boundary };

inline constexpr VerifyMode kAllModes[] = {
    VerifyMode::Thm2,     VerifyMode::Thm3,     VerifyMode::Cor1Sub, VerifyMode::Cor2Eq,
    VerifyMode::Topology, VerifyMode::Residual, VerifyMode::Boundary,
};

std::string_view to_string(VerifyMode mode);
std::optional<VerifyMode> parse_mode(std::string_view name);
/// "all" or a comma-separated list of mode names; throws std::invalid_argument.
std::vector<VerifyMode> parse_modes(std::string_view list);

struct VerifyConfig {
  int trials = 200;
  std::uint64_t seed = 42;
  int gridN = 100;
  double band = 1e-9;
  std::vector<VerifyMode> modes{std::begin(kAllModes), std::end(kAllModes)};

  /// Throws std::invalid_argument on trials < 1, gridN < 16, band < 0 or no modes.
  void validate() const;
};

struct ModeReport {
  VerifyMode mode = VerifyMode::Thm2;
  std::int64_t instances = 0;
  std::int64_t samples = 0;
  std::int64_t mismatches = 0;
  std::int64_t skipped = 0;
  // Identity modes: smallest boundary margin among compared points.
  // Residual: largest relative residual. Other modes: unset.
  std::optional<double> worstResidual;
  double maxSpacingRatio = 0.0;  // Topology only: worst spacing / r*
};

struct CampaignReport {
  std::vector<ModeReport> modes;
  bool passed() const;
};

CampaignReport run_campaign(const VerifyConfig& config);

/// key: value text, one block per mode, then "status: ok|mismatch".
std::string format_campaign(const CampaignReport& report);

/// Random instance stream for one mode.
std::mt19937_64 mode_stream(std::uint64_t seed, VerifyMode mode);

/// Foci uniform in [-20, 20]^2 and r uniform in (0, 40].
CassiniSpec random_spec(std::mt19937_64& rng);

/// Distinct foci and r = u r* with u uniform in (0, 2] \ {1}.
CassiniSpec random_topology_spec(std::mt19937_64& rng);

/// Lower bound on the narrowest feature of the curve: the thickness of a
/// loop, the gap between two loops, or the waist of a single curve.
double feature_size(const CassiniSpec& spec);

/// Oracle lattice spacing for component counting: at most r* / 64, a quarter
/// of the feature size, and the spacing of a gridN lattice over the box.
double topology_spacing(const CassiniSpec& spec, int gridN);

inline constexpr int kMaxOracleGrid = 4097;

/// Closed components of the oracle contour on a focus-aligned lattice.
/// Reports the coarser axis spacing actually used through `spacing`.
int oracle_component_count(const CassiniSpec& spec, int gridN, double* spacing = nullptr);

/// Largest |f - r^2| / max(1, r^2) over 64 samples of every curve.
double max_relative_residual(const CassiniSpec& spec, int samplesPerCurve = 64);

/// Probe radius that stays inside the narrowest feature; at most 0.05.
double boundary_probe_radius(const CassiniSpec& spec);

}  // namespace taxicab
