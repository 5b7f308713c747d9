#pragma once

#include <span>
#include <string>
#include <utility>

#include "erid/trajectory.hpp"

namespace erid {

enum class PlotKind {
  kLineNashConv,  // metric vs step, one colored line per trajectory
  kTernary,       // barycentric triangle, one gradient path per player
  kSquarePhase,   // (pi1[0], pi2[0]) unit square, gradient paths
};

struct SvgOptions {
  int width = 760;
  int height = 540;
  std::string title;
  bool relative = false;  // line plot: plot relative_nashconv instead
};

// Unit-triangle coordinates of a 3-action distribution: vertices at (0,0),
// (1,0) and (0.5, sqrt(3)/2) for actions 0, 1 and 2.
std::pair<double, double> barycentric_xy(std::span<const double> probs);

// Standalone SVG document. Time runs along each path as a color gradient;
// PhaseSwitched schedules add vertical phase markers to line plots. Empty
// trajectories render frame and legend only.
std::string render_svg(std::span<const Trajectory> trajectories, PlotKind kind,
                       const SvgOptions& options = {});

}  // namespace erid
