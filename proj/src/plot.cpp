#include "flp/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>

#include "flp/error.hpp"
#include "flp/radius_catalog.hpp"
#include "flp/region.hpp"
#include "flp/report.hpp"

namespace flp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMinSamples = 64;

double half_step_angle(int k, int n) { return -kPi + 2.0 * kPi * (k + 0.5) / n; }

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  // Avoid "-0.000000" so sign noise does not leak into the output.
  if (std::string_view(buf) == "-0.000000") return "0.000000";
  return buf;
}

Curve parabola(int n) {
  // y^2 = 3 - 2x for y in [-3, 3].
  Curve c{"parabola", {}, false};
  n += n % 2;  // keeps the vertex y = 0 on the grid
  for (int k = 0; k <= n; ++k) {
    const double y = -3.0 + 6.0 * k / n;
    c.points.emplace_back((3.0 - y * y) / 2.0, y);
  }
  return c;
}

std::vector<Curve> tangents() {
  // y = +-(x - 2), drawn from (2, 0) through the tangency points (1, -+1) onward to x = -1.
  return {Curve{"tangent-upper", {{2.0, 0.0}, {-1.0, 3.0}}, false},
          Curve{"tangent-lower", {{2.0, 0.0}, {-1.0, -3.0}}, false}};
}

Curve circle(std::string name, Complex center, double radius, int n) {
  Curve c{std::move(name), {}, true};
  for (int k = 0; k < n; ++k) c.points.push_back(center + std::polar(radius, half_step_angle(k, n)));
  return c;
}

Curve map_image(std::string name, TargetId id, const TargetParams& p, double r, int n) {
  Curve c{std::move(name), {}, true};
  for (int k = 0; k < n; ++k) {
    const Complex z = std::polar(r, half_step_angle(k, n));
    Complex w;
    try {
      w = eval_target(id, p, z);
    } catch (const Error& e) {
      throw Error(ErrorKind::SingularOnCircle, e.what());
    }
    c.points.push_back(w);
  }
  return c;
}

void add_region(std::vector<Curve>& out, int n) {
  out.push_back(parabola(n));
  for (auto& t : tangents()) out.push_back(std::move(t));
}


}  // namespace

std::vector<Curve> plot_curves(const PlotSpec& spec) {
  if (spec.samples < kMinSamples) throw Error(ErrorKind::DomainError, "plots need at least 64 samples");
  const int n = spec.samples;
  std::vector<Curve> out;
  add_region(out, n);
  auto add_discs = [&](const std::vector<double>& centers) {
    for (double a : centers) {
      const InscribedDisc d = inscribed_disc(a);
      out.push_back(circle("disc a=" + format_double(a), {a, 0.0}, d.radius, n));
    }
  };
  switch (spec.kind) {
    case PlotKind::Region:
      add_discs(spec.disc_centers);
      break;
    case PlotKind::MapImage:
      if (!(spec.r > 0.0 && spec.r < 1.0)) throw Error(ErrorKind::DomainError, "map images need 0 < r < 1");
      out.push_back(map_image(std::string(target_name(spec.map)) + " |z|=" + format_double(spec.r), spec.map,
                              spec.params, spec.r, n));
      add_discs(spec.disc_centers);
      break;
    case PlotKind::Discs:
      add_discs(spec.disc_centers.empty() ? std::vector<double>{-1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 1.4}
                                          : spec.disc_centers);
      break;
    case PlotKind::CorollaryFigure: {
      if (spec.corollary < 1 || spec.corollary > 9) throw Error(ErrorKind::UnknownId, "corollary figure needs 1..9");
      const RadiusEntry e = corollary_radius(spec.corollary);
      const TargetId id = corollary_target_map(spec.corollary);
      out.push_back(map_image(std::string(target_name(id)) + " |z|=1", id, {}, 1.0, n));
      out.push_back(circle("inner disc", {1.0, 0.0}, corollary_target_radius(spec.corollary), n));
      out.push_back(map_image("lp |z|=" + e.id, TargetId::LogParabolic, {}, e.closed_form, n));
      break;
    }
  }
  return out;
}

std::string render_csv(const std::vector<Curve>& curves) {
  std::string out = "# schema: " + std::to_string(kSchemaVersion) + "\ncurve,index,x,y\n";
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      out += c.name + ',' + std::to_string(i) + ',' + fixed(c.points[i].real()) + ',' + fixed(c.points[i].imag()) + '\n';
    }
  }
  return out;
}

std::string render_svg(const std::vector<Curve>& curves) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& c : curves) {
    for (const auto& p : c.points) {
      x0 = std::min(x0, p.real());
      x1 = std::max(x1, p.real());
      y0 = std::min(y0, p.imag());
      y1 = std::max(y1, p.imag());
    }
  }
  const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
  x0 -= pad;
  x1 += pad;
  y0 -= pad;
  y1 += pad;
  static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fixed(x0) + " " + fixed(-y1) + " " +
                    fixed(x1 - x0) + " " + fixed(y1 - y0) + "\" width=\"600\" height=\"" +
                    std::to_string(static_cast<int>(std::lround(600.0 * (y1 - y0) / (x1 - x0)))) + "\">\n";
  out += "<!-- schema: " + std::to_string(kSchemaVersion) + " -->\n";
  std::size_t color = 0;
  for (const auto& c : curves) {
    out += "<path data-name=\"" + c.name + "\" fill=\"none\" stroke=\"" + palette[color++ % 7] +
           "\" stroke-width=\"" + fixed(0.004 * (x1 - x0)) + "\" d=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      out += (i == 0 ? "M" : " L") + fixed(c.points[i].real()) + "," + fixed(-c.points[i].imag());
    }
    if (c.closed) out += " Z";
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_plot(const PlotSpec& spec) {
  const auto curves = plot_curves(spec);
  return spec.format == PlotFormat::Svg ? render_svg(curves) : render_csv(curves);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::FileWrite, "cannot open " + path);
  f << content;
  f.flush();
  if (!f) throw Error(ErrorKind::FileWrite, "write to " + path + " failed");
}

}  // namespace flp
