#include "spheresample/sec_sampler.hpp"

#include "spheresample/errors.hpp"
#include "spheresample/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace spheresample {

namespace {

// Moves the farthest-from-owner point (among clusters that can spare one)
// into each empty cluster.
void repair_empty_clusters(std::span<const Point2> points, std::span<const Point2> centers,
                           std::vector<std::uint32_t>& owner)
{
    std::vector<std::size_t> sizes(centers.size(), 0);
    for (std::uint32_t o : owner)
        ++sizes[o];
    for (std::uint32_t k = 0; k < centers.size(); ++k) {
        if (sizes[k] != 0)
            continue;
        std::size_t pick = points.size();
        double best = -1.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (sizes[owner[i]] < 2)
                continue;
            const double d = distance_sq(points[i], centers[owner[i]]);
            if (d > best) {
                best = d;
                pick = i;
            }
        }
        if (pick == points.size())
            break; // fewer points than clusters; cannot happen after validation
        --sizes[owner[pick]];
        owner[pick] = k;
        ++sizes[k];
    }
}

} // namespace

std::vector<Point2> init_centers(std::span<const Point2> points, int clusters)
{
    if (clusters < 1)
        throw DomainError("init_centers: number of samples must be at least 1");
    if (points.size() < static_cast<std::size_t>(clusters))
        throw DomainError("init_centers: " + std::to_string(points.size()) + " points cannot seed " +
                          std::to_string(clusters) + " samples");
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return yx_less(points[a], points[b]); });

    std::vector<Point2> centers;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < static_cast<std::size_t>(clusters); ++i)
        centers.push_back(points[order[i * n / static_cast<std::size_t>(clusters)]]);
    return centers;
}

std::vector<Point2> init_centers(const std::vector<PointSample>& points, int clusters)
{
    const auto pts = positions(points);
    return init_centers(pts, clusters);
}

ClusterState kmeans_sec(std::span<const Point2> points, int clusters, const KMeansOptions& options)
{
    return kmeans_sec(points, init_centers(points, clusters), options);
}

ClusterState kmeans_sec(std::span<const Point2> points, std::vector<Point2> centers, const KMeansOptions& options)
{
    if (centers.empty())
        throw DomainError("kmeans_sec: number of samples must be at least 1");
    if (points.size() < centers.size())
        throw DomainError("kmeans_sec: fewer points than samples");
    if (options.max_iter < 1)
        throw DomainError("kmeans_sec: max_iter must be at least 1");
    if (!(options.move_tol > 0.0))
        throw DomainError("kmeans_sec: move_tol must be positive");

    const double move_limit = options.move_tol * bounding_box(points).diagonal();

    ClusterState state;
    std::vector<std::uint32_t> owner(points.size());
    kernels::assign_nearest(points, centers, owner);

    std::vector<std::uint32_t> next_owner(points.size());
    while (state.iteration < options.max_iter) {
        repair_empty_clusters(points, centers, owner);
        state.balls = kernels::cluster_enclosing_circles(points, owner, centers, options.seed);
        ++state.iteration;

        double moved = 0.0;
        for (std::size_t k = 0; k < centers.size(); ++k) {
            moved = std::max(moved, distance(centers[k], state.balls[k].center));
            centers[k] = state.balls[k].center;
        }

        kernels::assign_nearest(points, centers, next_owner);
        const bool fixed_point = next_owner == owner;
        state.assignment = owner;
        if (fixed_point || moved < move_limit || moved == 0.0) {
            state.converged = true;
            break;
        }
        owner.swap(next_owner);
    }
    return state;
}

SampleSet to_sample_set(const ClusterState& state)
{
    SampleSet out;
    out.balls = state.balls;
    out.method = "sec";
    out.parameters["samples"] = static_cast<double>(state.balls.size());
    out.iterations = state.iteration;
    out.converged = state.converged;
    return out;
}

} // namespace spheresample
