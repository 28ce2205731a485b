#include "spheresample/errors.hpp"
#include "spheresample/geometry.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace spheresample {

namespace {

constexpr double kContainEps = 1e-14;

// Candidate circle plus the indices (into the shuffled array) that define it.
struct Disk {
    Circle circle;
    std::array<std::size_t, 3> support{};
    int support_size = 0;
    bool valid = false;

    bool contains(Point2 p) const { return valid && distance(circle.center, p) <= circle.radius * (1.0 + kContainEps); }
};

Disk diameter_disk(const std::vector<Point2>& pts, std::size_t i, std::size_t j)
{
    const Point2 c = 0.5 * (pts[i] + pts[j]);
    const double r = std::max(distance(c, pts[i]), distance(c, pts[j]));
    return {{c, r}, {i, j, 0}, 2, true};
}

Disk circum_disk(const std::vector<Point2>& pts, std::size_t i, std::size_t j, std::size_t k)
{
    const Circle c = circumcircle(pts[i], pts[j], pts[k]);
    if (!(c.radius > 0.0) || !std::isfinite(c.center.x))
        return {};
    return {c, {i, j, k}, 3, true};
}

// Smallest circle with pts[p] and pts[q] on its boundary enclosing pts[0..end).
Disk two_point_disk(const std::vector<Point2>& pts, std::size_t end, std::size_t p, std::size_t q)
{
    const Disk base = diameter_disk(pts, p, q);
    const Point2 a = pts[p];
    const Point2 ab = pts[q] - a;
    Disk left, right;
    double left_score = 0.0, right_score = 0.0;

    for (std::size_t i = 0; i < end; ++i) {
        if (base.contains(pts[i]))
            continue;
        const double side = cross(ab, pts[i] - a);
        const Disk c = circum_disk(pts, p, q, i);
        if (!c.valid)
            continue;
        const double score = cross(ab, c.circle.center - a);
        if (side > 0.0 && (!left.valid || score > left_score)) {
            left = c;
            left_score = score;
        } else if (side < 0.0 && (!right.valid || score < right_score)) {
            right = c;
            right_score = score;
        }
    }

    if (!left.valid && !right.valid)
        return base;
    if (!left.valid)
        return right;
    if (!right.valid)
        return left;
    return left.circle.radius <= right.circle.radius ? left : right;
}

Disk one_point_disk(const std::vector<Point2>& pts, std::size_t end, std::size_t p)
{
    Disk c{{pts[p], 0.0}, {p, 0, 0}, 1, true};
    for (std::size_t i = 0; i < end; ++i) {
        if (c.contains(pts[i]))
            continue;
        c = c.circle.radius == 0.0 ? diameter_disk(pts, p, i) : two_point_disk(pts, i, p, i);
    }
    return c;
}

} // namespace

Circle smallest_enclosing_circle(std::span<const Point2> points, std::uint64_t seed)
{
    if (points.empty())
        throw DomainError("smallest_enclosing_circle: empty point set");

    std::vector<Point2> pts(points.begin(), points.end());
    // Fisher-Yates over mt19937_64 so the permutation is identical across
    // standard library implementations.
    std::mt19937_64 rng(seed);
    for (std::size_t i = pts.size(); i > 1; --i)
        std::swap(pts[i - 1], pts[rng() % i]);

    Disk c;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!c.contains(pts[i]))
            c = one_point_disk(pts, i, i);
    }

    std::array<Point2, 3> support;
    for (int k = 0; k < c.support_size; ++k)
        support[k] = pts[c.support[k]];
    std::sort(support.begin(), support.begin() + c.support_size,
              [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });

    switch (c.support_size) {
    case 1:
        return {support[0], 0.0};
    case 2: {
        const Point2 m = 0.5 * (support[0] + support[1]);
        return {m, std::max(distance(m, support[0]), distance(m, support[1]))};
    }
    default:
        return circumcircle(support[0], support[1], support[2]);
    }
}

} // namespace spheresample
