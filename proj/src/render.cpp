#include "taxicab/render.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "taxicab/oracle.hpp"

namespace taxicab {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
  if (v == 0.0) v = 0.0;
  std::string s = fmt::format("{:.6f}", v);
  return s == "-0.000000" ? "0.000000" : s;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(Point p) {
    x0 = std::min(x0, p.x1);
    x1 = std::max(x1, p.x1);
    y0 = std::min(y0, p.x2);
    y1 = std::max(y1, p.x2);
  }
};

std::string path_of(const std::vector<Point>& pts, bool closed) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += fmt::format("{}{} {}", i == 0 ? "M" : " L", num(pts[i].x1), num(pts[i].x2));
  }
  if (closed) d += " Z";
  return d;
}

}  // namespace

std::string render_svg(const std::vector<Instance>& instances, const RenderOptions& options) {
  if (instances.empty()) throw std::invalid_argument("nothing to render");
  if (options.samplesPerArc < 2) throw std::invalid_argument("samples must be >= 2");
  if (options.oracleGrid < 16) throw std::invalid_argument("oracle grid must be >= 16");
  if (!(options.widthPx > 0.0)) throw std::invalid_argument("width must be positive");

  struct Drawn {
    const Instance* instance;
    std::vector<std::vector<Point>> curves;
  };
  std::vector<Drawn> drawn;
  Box box;
  for (const Instance& inst : instances) {
    const CassiniSpec spec = make_spec(inst.spec.p, inst.spec.q, inst.spec.r);
    Drawn d{&inst, {}};
    const auto curves = topology(spec) == Topology::PointPair ? std::vector<ClosedCurve>{} : build_curves(spec);
    for (const ClosedCurve& curve : curves) {
      d.curves.push_back(trace(curve, options.samplesPerArc));
      for (const Point& x : d.curves.back()) box.add(x);
    }
    box.add(spec.p);
    box.add(spec.q);
    drawn.push_back(std::move(d));
  }

  const double pad = 0.08 * std::max({box.x1 - box.x0, box.y1 - box.y0, 1.0});
  box.x0 -= pad;
  box.x1 += pad;
  box.y0 -= pad;
  box.y1 += pad;
  const double w = box.x1 - box.x0;
  const double h = box.y1 - box.y0;
  const double unit = w / options.widthPx;  // one pixel in world units

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
      num(options.widthPx), num(options.widthPx * h / w), num(box.x0), num(-box.y1), num(w), num(h));
  svg += "<rect x=\"" + num(box.x0) + "\" y=\"" + num(-box.y1) + "\" width=\"" + num(w) + "\" height=\"" +
         num(h) + "\" fill=\"white\"/>\n";
  svg += "<g transform=\"scale(1,-1)\">\n";

  auto line = [&](Point a, Point b, const char* color, double width, const std::string& dash) {
    svg += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{}\"", num(a.x1),
                       num(a.x2), num(b.x1), num(b.x2), color, num(width * unit));
    if (!dash.empty()) svg += fmt::format(" stroke-dasharray=\"{}\"", dash);
    svg += "/>\n";
  };
  const std::string dotted = num(1.0 * unit) + "," + num(3.0 * unit);
  const std::string dashed = num(6.0 * unit) + "," + num(4.0 * unit);

  std::set<std::pair<double, double>> foci;
  std::set<double> verticals, horizontals;
  for (const Drawn& d : drawn) {
    for (Point f : {d.instance->spec.p, d.instance->spec.q}) {
      foci.emplace(f.x1, f.x2);
      verticals.insert(f.x1);
      horizontals.insert(f.x2);
    }
  }

  svg += "<g id=\"coordinate-lines\">\n";
  for (double v : verticals) line({v, box.y0}, {v, box.y1}, "#888888", 0.8, dotted);
  for (double v : horizontals) line({box.x0, v}, {box.x1, v}, "#888888", 0.8, dotted);
  svg += "</g>\n<g id=\"guide-lines\">\n";
  for (const auto& [f1, f2] : foci) {
    // slope +1 and slope -1 through the focus, clipped to the box in x1
    line({box.x0, f2 + (box.x0 - f1)}, {box.x1, f2 + (box.x1 - f1)}, "#bbbbbb", 0.8, dashed);
    line({box.x0, f2 - (box.x0 - f1)}, {box.x1, f2 - (box.x1 - f1)}, "#bbbbbb", 0.8, dashed);
  }
  svg += "</g>\n";

  for (std::size_t k = 0; k < drawn.size(); ++k) {
    const Drawn& d = drawn[k];
    const char* color = kPalette[k % std::size(kPalette)];
    svg += fmt::format("<g id=\"instance-{}\">\n<title>{}</title>\n", k, xml_escape(d.instance->label));
    for (const auto& curve : d.curves) {
      svg += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" stroke-linejoin=\"round\"/>\n",
                         path_of(curve, true), color, num(2.0 * unit));
    }
    if (options.overlayOracle && d.instance->spec.r > 0.0) {
      const Contour contour = extract_contour(grid_field(d.instance->spec, options.oracleGrid));
      for (const Polyline& pl : contour.polylines) {
        svg += fmt::format(
            "<path class=\"oracle\" d=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{}\" "
            "stroke-dasharray=\"{}\"/>\n",
            path_of(pl.points, false), num(0.7 * unit), num(2.0 * unit) + "," + num(2.0 * unit));
      }
    }
    for (Point f : {d.instance->spec.p, d.instance->spec.q}) {
      svg += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n", num(f.x1), num(f.x2),
                         num(3.5 * unit), color);
    }
    svg += "</g>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace taxicab
