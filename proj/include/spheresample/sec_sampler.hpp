#pragma once

#include "spheresample/geometry.hpp"
#include "spheresample/samples.hpp"
#include "spheresample/shape_io.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace spheresample {

struct ClusterState {
    std::vector<Circle> balls;
    std::vector<std::uint32_t> assignment; // owning ball per point
    int iteration = 0;
    bool converged = false;
};

struct KMeansOptions {
    int max_iter = 50;
    double move_tol = 1e-4; // fraction of the point-set bbox diagonal
    std::uint64_t seed = kDefaultSeed;
};

/// Sorts points by (y, x) and picks indices floor(i·n/B), i = 0..B-1.
/// Throws DomainError when B < 1 or there are fewer than B points.
std::vector<Point2> init_centers(std::span<const Point2> points, int clusters);
std::vector<Point2> init_centers(const std::vector<PointSample>& points, int clusters);

/// K-means whose update step replaces each cluster by its smallest enclosing
/// circle. Stops when every center moves less than move_tol × bbox diagonal,
/// when the assignment reaches a fixed point, or after max_iter rounds.
/// Empty clusters are refilled with the point farthest from its owner.
ClusterState kmeans_sec(std::span<const Point2> points, int clusters, const KMeansOptions& options = {});

/// Same, starting from explicit centers.
ClusterState kmeans_sec(std::span<const Point2> points, std::vector<Point2> centers, const KMeansOptions& options = {});

SampleSet to_sample_set(const ClusterState& state);

} // namespace spheresample
