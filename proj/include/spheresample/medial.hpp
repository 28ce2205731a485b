#pragma once

#include "spheresample/samples.hpp"
#include "spheresample/shape.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace spheresample {

/// Approximate medial ball: the circumcircle of a Delaunay triangle of the
/// boundary samples whose center falls inside the shape.
struct PolarBall {
    Circle ball;
    std::array<std::uint32_t, 3> generators{}; // boundary-sample indices
};

/// Bowyer-Watson Delaunay triangulation. Returns CCW index triples into
/// `points`. Exactly cocircular configurations are resolved by treating a
/// point on a circumcircle as outside it, so the result is deterministic.
/// Throws DomainError for fewer than 3 points and DegenerateShapeError when
/// all points are collinear.
std::vector<std::array<std::uint32_t, 3>> delaunay_triangulate(std::span<const Point2> points);

/// Polar balls from `boundary_count` boundary samples, dropping balls smaller
/// than noise_radius_frac × bbox diagonal. Sorted by decreasing radius, ties
/// by (center.y, center.x).
std::vector<PolarBall> compute_polar_balls(const ElementShape& shape, int boundary_count,
                                           double noise_radius_frac = 0.005);

/// Simplified scale-axis step: drops ball i when a retained larger ball j
/// satisfies |c_i - c_j| + s·r_i <= s·r_j. Input must be sorted by decreasing radius.
std::vector<PolarBall> scale_axis_prune(std::span<const PolarBall> balls, double s);

/// Greedy spacing filter: walks the balls in order (largest first) and keeps
/// a ball only if its center is at least xi·(r + r') away from every ball
/// kept so far.
SampleSet select_touching_polar_balls(std::span<const PolarBall> balls, double xi);

} // namespace spheresample
