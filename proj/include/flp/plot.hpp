#pragma once

#include <string>
#include <vector>

#include "flp/map_kernel.hpp"

namespace flp {

enum class PlotKind { Region, MapImage, Discs, CorollaryFigure };
enum class PlotFormat { Svg, Csv };

struct PlotSpec {
  PlotKind kind = PlotKind::Region;
  double r = 0.5;
  TargetId map = TargetId::LogParabolic;
  TargetParams params;
  std::vector<double> disc_centers;  // inscribed discs; Discs defaults to the acceptance grid
  int corollary = 7;                 // which r_k for CorollaryFigure
  PlotFormat format = PlotFormat::Svg;
  int samples = 512;
};

struct Curve {
  std::string name;
  std::vector<Complex> points;
  bool closed = false;
};

/// Sampled curves for the spec. Angles are -pi + 2 pi (k + 1/2)/n, which keeps z = 1 off the grid.
/// Throws DomainError for samples < 64 or r outside (0, 1) on map images.
[[nodiscard]] std::vector<Curve> plot_curves(const PlotSpec& spec);

/// "curve,index,x,y" rows with fixed precision.
[[nodiscard]] std::string render_csv(const std::vector<Curve>& curves);
/// Standalone SVG, one path per curve, no timestamps.
[[nodiscard]] std::string render_svg(const std::vector<Curve>& curves);

[[nodiscard]] std::string render_plot(const PlotSpec& spec);

/// Throws FileWrite if the file cannot be written completely.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace flp
