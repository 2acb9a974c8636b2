#pragma once

#include <span>
#include <string>

#include "trajformer/dataset.hpp"

namespace trajformer {

/// SVG in scene-pixel coordinates (pixel = meters / meters_per_pixel) with the label map
/// underneath. Polylines: observed in gray (class "observed"), prediction in blue
/// (class "prediction"), ground truth in green (class "ground_truth").
std::string render_prediction_svg(const SceneMap& map, std::span<const Point2> observed_m,
                                  std::span<const Point2> predicted_m, std::span<const Point2> ground_truth_m);

/// "x1,y1 x2,y2 ..." in pixels.
std::string svg_points(std::span<const Point2> meters, double meters_per_pixel);

}  // namespace trajformer
