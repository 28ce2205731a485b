#include "spheresample/geometry.hpp"

#include "spheresample/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace spheresample {

double distance_to_segment(Point2 p, Point2 a, Point2 b)
{
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0)
        return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + ab * t);
}

BBox bounding_box(std::span<const Point2> points)
{
    if (points.empty())
        return {};
    BBox box{points.front(), points.front()};
    for (const Point2& p : points) {
        box.min.x = std::min(box.min.x, p.x);
        box.min.y = std::min(box.min.y, p.y);
        box.max.x = std::max(box.max.x, p.x);
        box.max.y = std::max(box.max.y, p.y);
    }
    return box;
}

double polygon_area(std::span<const Point2> loop)
{
    if (loop.size() < 3)
        throw DomainError("polygon_area: loop needs at least 3 vertices");
    double twice = 0.0;
    for (std::size_t i = 0, j = loop.size() - 1; i < loop.size(); j = i++)
        twice += loop[j].x * loop[i].y - loop[i].x * loop[j].y;
    return 0.5 * twice;
}

double circle_lens_area(const Circle& c1, const Circle& c2)
{
    // Evaluate with the larger circle first so that swapping the arguments
    // runs the identical floating-point sequence.
    const bool swap = c2.radius > c1.radius ||
                      (c2.radius == c1.radius && yx_less(c2.center, c1.center));
    const Circle& big = swap ? c2 : c1;
    const Circle& small = swap ? c1 : c2;

    const double r1 = big.radius;
    const double r2 = small.radius;
    if (r2 <= 0.0)
        return 0.0;
    const double d = distance(big.center, small.center);
    if (d >= r1 + r2)
        return 0.0;
    if (d <= r1 - r2)
        return small.area();

    const double a1 = std::clamp((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1), -1.0, 1.0);
    const double a2 = std::clamp((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2), -1.0, 1.0);
    const double k = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
    const double area = r1 * r1 * std::acos(a1) + r2 * r2 * std::acos(a2) - 0.5 * std::sqrt(std::max(k, 0.0));
    return std::clamp(area, 0.0, small.area());
}

namespace {

// Signed area of disc(origin, r) ∩ triangle(origin, a, b).
double wedge_area(Point2 a, Point2 b, double r)
{
    auto sector = [r](Point2 p, Point2 q) { return 0.5 * r * r * std::atan2(cross(p, q), dot(p, q)); };

    const Point2 d = b - a;
    const double qa = dot(d, d);
    if (qa == 0.0)
        return 0.0;
    const double qb = dot(a, d);
    const double qc = dot(a, a) - r * r;
    const double disc = qb * qb - qa * qc;
    if (disc <= 0.0)
        return sector(a, b);

    const double s = std::sqrt(disc);
    const double t1 = (-qb - s) / qa;
    const double t2 = (-qb + s) / qa;
    if (t2 <= 0.0 || t1 >= 1.0)
        return sector(a, b);

    const Point2 p1 = t1 > 0.0 ? a + d * t1 : a;
    const Point2 p2 = t2 < 1.0 ? a + d * t2 : b;
    double area = 0.5 * cross(p1, p2);
    if (t1 > 0.0)
        area += sector(a, p1);
    if (t2 < 1.0)
        area += sector(p2, b);
    return area;
}

} // namespace

double circle_triangle_area(const Circle& c, const Triangle& t)
{
    const double tri = t.signed_area();
    if (tri == 0.0 || c.radius <= 0.0)
        return 0.0;
    const Point2 a = t.a - c.center;
    const Point2 b = t.b - c.center;
    const Point2 d = t.c - c.center;
    double area = wedge_area(a, b, c.radius) + wedge_area(b, d, c.radius) + wedge_area(d, a, c.radius);
    if (tri < 0.0)
        area = -area;
    return std::clamp(area, 0.0, std::min(c.area(), std::abs(tri)));
}

double circle_shape_intersection_area(const Circle& c, std::span<const Triangle> tris)
{
    const double r = c.radius;
    double total = 0.0;
    for (const Triangle& t : tris) {
        const double lo_x = std::min({t.a.x, t.b.x, t.c.x});
        const double hi_x = std::max({t.a.x, t.b.x, t.c.x});
        const double lo_y = std::min({t.a.y, t.b.y, t.c.y});
        const double hi_y = std::max({t.a.y, t.b.y, t.c.y});
        if (hi_x < c.center.x - r || lo_x > c.center.x + r || hi_y < c.center.y - r || lo_y > c.center.y + r)
            continue;
        total += circle_triangle_area(c, t);
    }
    return total;
}

Circle circumcircle(Point2 a, Point2 b, Point2 c)
{
    // Work relative to the bounding-box center of the three points.
    const double ox = 0.5 * (std::min({a.x, b.x, c.x}) + std::max({a.x, b.x, c.x}));
    const double oy = 0.5 * (std::min({a.y, b.y, c.y}) + std::max({a.y, b.y, c.y}));
    const double ax = a.x - ox, ay = a.y - oy;
    const double bx = b.x - ox, by = b.y - oy;
    const double cx = c.x - ox, cy = c.y - oy;
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    if (d == 0.0)
        return {{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()}, 0.0};
    const double a2 = ax * ax + ay * ay;
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const Point2 center{ox + (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d,
                        oy + (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d};
    const double r = std::max({distance(center, a), distance(center, b), distance(center, c)});
    return {center, r};
}

namespace {

void subdivide_cubic(Point2 p0, Point2 p1, Point2 p2, Point2 p3, double tol, int depth, std::vector<Point2>& out)
{
    const double flatness = std::max(distance_to_segment(p1, p0, p3), distance_to_segment(p2, p0, p3));
    if (flatness <= tol || depth >= 32) {
        out.push_back(p3);
        return;
    }
    const Point2 p01 = 0.5 * (p0 + p1);
    const Point2 p12 = 0.5 * (p1 + p2);
    const Point2 p23 = 0.5 * (p2 + p3);
    const Point2 p012 = 0.5 * (p01 + p12);
    const Point2 p123 = 0.5 * (p12 + p23);
    const Point2 mid = 0.5 * (p012 + p123);
    subdivide_cubic(p0, p01, p012, mid, tol, depth + 1, out);
    subdivide_cubic(mid, p123, p23, p3, tol, depth + 1, out);
}

} // namespace

std::vector<Point2> flatten_cubic_bezier(Point2 p0, Point2 p1, Point2 p2, Point2 p3, double tol)
{
    if (!(tol > 0.0))
        throw DomainError("flatten_cubic_bezier: tolerance must be positive");
    std::vector<Point2> out{p0};
    subdivide_cubic(p0, p1, p2, p3, tol, 0, out);
    return out;
}

std::vector<Point2> flatten_quadratic_bezier(Point2 p0, Point2 p1, Point2 p2, double tol)
{
    // Degree elevation; exact.
    const Point2 c1 = p0 + (2.0 / 3.0) * (p1 - p0);
    const Point2 c2 = p2 + (2.0 / 3.0) * (p1 - p2);
    return flatten_cubic_bezier(p0, c1, c2, p2, tol);
}

} // namespace spheresample
