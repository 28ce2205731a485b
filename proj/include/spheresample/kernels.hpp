#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP version (used by the
// library) and a plain serial version kept as the reference the tests compare
// against. Reductions are done serially over per-item results, so both
// versions return bitwise identical values for any thread count.

#include "spheresample/geometry.hpp"
#include "spheresample/shape.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace spheresample::kernels {

/// Nearest center for every point; ties go to the lowest center index.
void assign_nearest(std::span<const Point2> points, std::span<const Point2> centers, std::span<std::uint32_t> owner);
void assign_nearest_serial(std::span<const Point2> points, std::span<const Point2> centers,
                           std::span<std::uint32_t> owner);

/// Smallest enclosing circle of each cluster. An empty cluster yields a
/// zero-radius circle at its fallback center.
std::vector<Circle> cluster_enclosing_circles(std::span<const Point2> points, std::span<const std::uint32_t> owner,
                                              std::span<const Point2> fallback_centers, std::uint64_t seed);
std::vector<Circle> cluster_enclosing_circles_serial(std::span<const Point2> points,
                                                     std::span<const std::uint32_t> owner,
                                                     std::span<const Point2> fallback_centers, std::uint64_t seed);

/// Per ball: area of the ball inside the triangulated shape.
std::vector<double> shape_intersection_areas(std::span<const Circle> balls, std::span<const Triangle> tris);
std::vector<double> shape_intersection_areas_serial(std::span<const Circle> balls, std::span<const Triangle> tris);

/// Per ball i: sum over j != i of lens(i, j).
std::vector<double> lens_row_sums(std::span<const Circle> balls);
std::vector<double> lens_row_sums_serial(std::span<const Circle> balls);

/// Lattice statistics for the asymmetry measure. A grid×grid lattice of cell
/// centers covers the ball's bounding square; inside[k] counts lattice points
/// in quadrant k+1 (CCW from +x) that are inside both the ball and the shape
/// (even-odd parity), per_quadrant counts quadrant-1 points inside the ball.
struct QuadrantCounts {
    std::array<std::int64_t, 4> inside{};
    std::int64_t per_quadrant = 0;

    friend bool operator==(const QuadrantCounts&, const QuadrantCounts&) = default;
};

/// Scanline version: one crossing list per lattice row.
std::vector<QuadrantCounts> quadrant_counts(std::span<const Circle> balls, const ElementShape& shape, int grid);
/// Reference: per-point ray casting.
std::vector<QuadrantCounts> quadrant_counts_serial(std::span<const Circle> balls, const ElementShape& shape, int grid);

int max_threads();

} // namespace spheresample::kernels
