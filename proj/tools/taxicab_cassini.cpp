// taxicab-cassini: info, render, classify and verify subcommands.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 malformed input, 3 I/O failure.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "taxicab/campaign.hpp"
#include "taxicab/instances.hpp"
#include "taxicab/render.hpp"
#include "taxicab/report.hpp"

namespace {

using namespace taxicab;

constexpr int kMismatch = 1;
constexpr int kMalformed = 2;
constexpr int kIoFailure = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double parse_real(const std::string& text, const char* what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    throw UsageError(fmt::format("{}: '{}' is not a finite number", what, text));
  }
  return v;
}

Point parse_point(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw UsageError(fmt::format("{}: expected X,Y but got '{}'", what, text));
  }
  return {parse_real(text.substr(0, comma), what), parse_real(text.substr(comma + 1), what)};
}

struct InstanceArgs {
  std::string p, q, r;

  void attach(CLI::App* cmd, bool required) {
    auto* op = cmd->add_option("--p", p, "first focus X,Y");
    auto* oq = cmd->add_option("--q", q, "second focus X,Y");
    auto* orr = cmd->add_option("--r", r, "radius, r >= 0");
    if (required) {
      op->required();
      oq->required();
      orr->required();
    }
  }

  bool given() const { return !p.empty() || !q.empty() || !r.empty(); }

  CassiniSpec spec() const {
    if (p.empty() || q.empty() || r.empty()) throw UsageError("--p, --q and --r are all required");
    try {
      return make_spec(parse_point(p, "--p"), parse_point(q, "--q"), parse_real(r, "--r"));
    } catch (const UsageError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Taxicab Cassini sets: construct, classify, render and verify."};
  app.require_subcommand(1);

  InstanceArgs infoArgs;
  auto* info = app.add_subcommand("info", "report topology, guide complements and the piece inventory");
  infoArgs.attach(info, true);

  InstanceArgs classifyArgs;
  std::string xText;
  double tol = kOnCurveTolerance;
  auto* classify = app.add_subcommand("classify", "print Inside, On or Outside for a point");
  classifyArgs.attach(classify, true);
  classify->add_option("--x", xText, "query point X,Y")->required();
  classify->add_option("--tol", tol, "relative on-curve band")->capture_default_str();

  InstanceArgs renderArgs;
  std::string instancesPath, outPath;
  RenderOptions renderOptions;
  auto* render = app.add_subcommand("render", "write an SVG figure");
  renderArgs.attach(render, false);
  render->add_option("--instances", instancesPath, "instance file (JSON lines)");
  render->add_option("--out", outPath, "output SVG path")->required();
  render->add_option("--samples", renderOptions.samplesPerArc, "points per hyperbola arc")->capture_default_str();
  render->add_flag("--overlay-oracle", renderOptions.overlayOracle, "draw the marching-squares contour");
  render->add_option("--grid", renderOptions.oracleGrid, "oracle lattice nodes per side")->capture_default_str();

  VerifyConfig config;
  std::string modes = "all";
  auto* verify = app.add_subcommand("verify", "run seeded verification campaigns");
  verify->add_option("--trials", config.trials, "instances per mode")->capture_default_str();
  verify->add_option("--seed", config.seed, "random seed")->capture_default_str();
  verify->add_option("--grid", config.gridN, "grid nodes per side")->capture_default_str();
  verify->add_option("--band", config.band, "relative boundary band")->capture_default_str();
  verify->add_option("--modes", modes,
                     "all, or a comma list of Thm2,Thm3,Cor1Sub,Cor2Eq,Topology,Residual,Boundary")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kMalformed;
  }

  try {
    if (info->parsed()) {
      std::cout << info_report(infoArgs.spec());
      return 0;
    }

    if (classify->parsed()) {
      const CassiniSpec spec = classifyArgs.spec();
      const Point x = parse_point(xText, "--x");
      if (!(tol >= 0.0) || !std::isfinite(tol)) throw UsageError("--tol must be >= 0");
      std::cout << to_string(classify_point(spec, x, tol)) << '\n';
      return 0;
    }

    if (render->parsed()) {
      std::vector<Instance> instances;
      if (!instancesPath.empty()) {
        if (renderArgs.given()) throw UsageError("give either --instances or --p/--q/--r, not both");
        instances = load_instances(instancesPath);
        if (instances.empty()) throw UsageError("instance file has no records");
      } else {
        instances.push_back({"instance", renderArgs.spec()});
      }
      const std::string svg = render_svg(instances, renderOptions);
      std::ofstream out(outPath, std::ios::binary);
      if (!out) throw IoError(fmt::format("cannot open {} for writing", outPath));
      out << svg;
      out.close();
      if (!out) throw IoError(fmt::format("write to {} failed", outPath));
      return 0;
    }

    if (verify->parsed()) {
      config.modes = parse_modes(modes);
      config.validate();
      const CampaignReport report = run_campaign(config);
      std::cout << format_campaign(report);
      return report.passed() ? 0 : kMismatch;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
  return kMalformed;
}
