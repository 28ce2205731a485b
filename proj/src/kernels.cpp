#include "spheresample/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace spheresample::kernels {

namespace {

std::uint32_t nearest(Point2 p, std::span<const Point2> centers)
{
    std::uint32_t best = 0;
    double best_d = distance_sq(p, centers[0]);
    for (std::uint32_t k = 1; k < centers.size(); ++k) {
        const double d = distance_sq(p, centers[k]);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best;
}

std::vector<std::vector<Point2>> group_by_owner(std::span<const Point2> points, std::span<const std::uint32_t> owner,
                                                std::size_t clusters)
{
    std::vector<std::vector<Point2>> groups(clusters);
    for (std::size_t i = 0; i < points.size(); ++i)
        groups[owner[i]].push_back(points[i]);
    return groups;
}

Circle enclose_group(const std::vector<Point2>& group, Point2 fallback, std::uint64_t seed)
{
    return group.empty() ? Circle{fallback, 0.0} : smallest_enclosing_circle(group, seed);
}

double row_lens_sum(std::span<const Circle> balls, std::size_t i)
{
    double sum = 0.0;
    for (std::size_t j = 0; j < balls.size(); ++j) {
        if (j != i)
            sum += circle_lens_area(balls[i], balls[j]);
    }
    return sum;
}

// Symmetric lattice offset of cell i: (i + 0.5 - grid/2)·h.
double lattice_offset(int i, int grid, double h) { return (i + 0.5 - 0.5 * grid) * h; }

int quadrant_of(double dx, double dy)
{
    if (dx > 0.0 && dy > 0.0)
        return 0;
    if (dx < 0.0 && dy > 0.0)
        return 1;
    if (dx < 0.0 && dy < 0.0)
        return 2;
    if (dx > 0.0 && dy < 0.0)
        return 3;
    return -1; // on an axis
}

std::int64_t quadrant_capacity(const Circle& c, int grid, double h)
{
    std::int64_t q = 0;
    for (int iy = 0; iy < grid; ++iy) {
        const double dy = lattice_offset(iy, grid, h);
        for (int ix = 0; ix < grid; ++ix) {
            const double dx = lattice_offset(ix, grid, h);
            if (dx > 0.0 && dy > 0.0 && dx * dx + dy * dy <= c.radius * c.radius)
                ++q;
        }
    }
    return q;
}

QuadrantCounts counts_by_ray_cast(const Circle& c, const ElementShape& shape, int grid)
{
    QuadrantCounts out;
    if (c.radius <= 0.0)
        return out;
    const double h = 2.0 * c.radius / grid;
    out.per_quadrant = quadrant_capacity(c, grid, h);
    for (int iy = 0; iy < grid; ++iy) {
        const double dy = lattice_offset(iy, grid, h);
        for (int ix = 0; ix < grid; ++ix) {
            const double dx = lattice_offset(ix, grid, h);
            const int q = quadrant_of(dx, dy);
            if (q < 0 || dx * dx + dy * dy > c.radius * c.radius)
                continue;
            const Point2 p{c.center.x + dx, c.center.y + dy};
            bool inside = false;
            for (const Loop& loop : shape.loops) {
                if (point_in_loop(p, loop.vertices))
                    inside = !inside;
            }
            if (inside)
                ++out.inside[q];
        }
    }
    return out;
}

QuadrantCounts counts_by_scanline(const Circle& c, const ElementShape& shape, int grid, std::vector<double>& xs)
{
    QuadrantCounts out;
    if (c.radius <= 0.0)
        return out;
    const double h = 2.0 * c.radius / grid;
    out.per_quadrant = quadrant_capacity(c, grid, h);
    for (int iy = 0; iy < grid; ++iy) {
        const double dy = lattice_offset(iy, grid, h);
        if (dy == 0.0)
            continue;
        const double y = c.center.y + dy;
        // Same crossing expression as point_in_loop so both paths agree bit for bit.
        xs.clear();
        for (const Loop& loop : shape.loops) {
            const auto& v = loop.vertices;
            for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
                const Point2 a = v[j];
                const Point2 b = v[i];
                if ((a.y > y) != (b.y > y))
                    xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
            }
        }
        std::sort(xs.begin(), xs.end());
        for (int ix = 0; ix < grid; ++ix) {
            const double dx = lattice_offset(ix, grid, h);
            const int q = quadrant_of(dx, dy);
            if (q < 0 || dx * dx + dy * dy > c.radius * c.radius)
                continue;
            const double px = c.center.x + dx;
            const auto right = xs.end() - std::upper_bound(xs.begin(), xs.end(), px);
            if (right % 2 == 1)
                ++out.inside[q];
        }
    }
    return out;
}

} // namespace

void assign_nearest(std::span<const Point2> points, std::span<const Point2> centers, std::span<std::uint32_t> owner)
{
    const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        owner[i] = nearest(points[i], centers);
}

void assign_nearest_serial(std::span<const Point2> points, std::span<const Point2> centers,
                           std::span<std::uint32_t> owner)
{
    for (std::size_t i = 0; i < points.size(); ++i)
        owner[i] = nearest(points[i], centers);
}

std::vector<Circle> cluster_enclosing_circles(std::span<const Point2> points, std::span<const std::uint32_t> owner,
                                              std::span<const Point2> fallback_centers, std::uint64_t seed)
{
    const auto groups = group_by_owner(points, owner, fallback_centers.size());
    std::vector<Circle> out(groups.size());
    const auto n = static_cast<std::int64_t>(groups.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < n; ++k)
        out[k] = enclose_group(groups[k], fallback_centers[k], seed);
    return out;
}

std::vector<Circle> cluster_enclosing_circles_serial(std::span<const Point2> points,
                                                     std::span<const std::uint32_t> owner,
                                                     std::span<const Point2> fallback_centers, std::uint64_t seed)
{
    const auto groups = group_by_owner(points, owner, fallback_centers.size());
    std::vector<Circle> out;
    for (std::size_t k = 0; k < groups.size(); ++k)
        out.push_back(enclose_group(groups[k], fallback_centers[k], seed));
    return out;
}

std::vector<double> shape_intersection_areas(std::span<const Circle> balls, std::span<const Triangle> tris)
{
    std::vector<double> out(balls.size());
    const auto n = static_cast<std::int64_t>(balls.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i)
        out[i] = circle_shape_intersection_area(balls[i], tris);
    return out;
}

std::vector<double> shape_intersection_areas_serial(std::span<const Circle> balls, std::span<const Triangle> tris)
{
    std::vector<double> out;
    for (const Circle& c : balls)
        out.push_back(circle_shape_intersection_area(c, tris));
    return out;
}

std::vector<double> lens_row_sums(std::span<const Circle> balls)
{
    std::vector<double> out(balls.size());
    const auto n = static_cast<std::int64_t>(balls.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i)
        out[i] = row_lens_sum(balls, static_cast<std::size_t>(i));
    return out;
}

std::vector<double> lens_row_sums_serial(std::span<const Circle> balls)
{
    std::vector<double> out;
    for (std::size_t i = 0; i < balls.size(); ++i)
        out.push_back(row_lens_sum(balls, i));
    return out;
}

std::vector<QuadrantCounts> quadrant_counts(std::span<const Circle> balls, const ElementShape& shape, int grid)
{
    std::vector<QuadrantCounts> out(balls.size());
    const auto n = static_cast<std::int64_t>(balls.size());
#pragma omp parallel
    {
        std::vector<double> xs;
#pragma omp for schedule(dynamic)
        for (std::int64_t i = 0; i < n; ++i)
            out[i] = counts_by_scanline(balls[i], shape, grid, xs);
    }
    return out;
}

std::vector<QuadrantCounts> quadrant_counts_serial(std::span<const Circle> balls, const ElementShape& shape, int grid)
{
    std::vector<QuadrantCounts> out;
    for (const Circle& c : balls)
        out.push_back(counts_by_ray_cast(c, shape, grid));
    return out;
}

int max_threads() { return omp_get_max_threads(); }

} // namespace spheresample::kernels
