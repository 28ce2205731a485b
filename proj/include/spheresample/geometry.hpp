#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace spheresample {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }
inline Point2 operator*(double s, Point2 a) { return {a.x * s, a.y * s}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline double distance_sq(Point2 a, Point2 b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Twice the signed area of (a, b, c); positive when counter-clockwise.
inline double orient(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

// Lexicographic (y, x) order used for deterministic tie-breaking.
inline bool yx_less(Point2 a, Point2 b) { return a.y < b.y || (a.y == b.y && a.x < b.x); }

double distance_to_segment(Point2 p, Point2 a, Point2 b);

struct Circle {
    Point2 center;
    double radius = 0.0;

    double area() const { return std::numbers::pi * radius * radius; }
    bool contains(Point2 p, double slack = 0.0) const { return distance(center, p) <= radius + slack; }

    friend bool operator==(const Circle&, const Circle&) = default;
};

struct Triangle {
    Point2 a, b, c;

    double signed_area() const { return 0.5 * orient(a, b, c); }
};

struct BBox {
    Point2 min{0.0, 0.0};
    Point2 max{0.0, 0.0};

    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
    double diagonal() const { return std::hypot(width(), height()); }
    Point2 center() const { return {0.5 * (min.x + max.x), 0.5 * (min.y + max.y)}; }
};

BBox bounding_box(std::span<const Point2> points);

/// Signed shoelace area of an implicitly closed loop. Throws DomainError for
/// fewer than three vertices.
double polygon_area(std::span<const Point2> loop);

/// Area of c1 ∩ c2. Symmetric in its arguments bit for bit.
double circle_lens_area(const Circle& c1, const Circle& c2);

/// Area of circle ∩ triangle, computed exactly by splitting each edge into
/// chord pieces (straight) and arc pieces (circular sectors).
double circle_triangle_area(const Circle& c, const Triangle& t);

/// Sum of circle_triangle_area over a set of interior-disjoint triangles.
double circle_shape_intersection_area(const Circle& c, std::span<const Triangle> tris);

/// Circle through three points; radius is zero and center NaN when collinear.
Circle circumcircle(Point2 a, Point2 b, Point2 c);

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

/// Minimal enclosing circle (Welzl, iterative form) over a deterministically
/// shuffled copy of the input. The final circle is recomputed from its
/// lexicographically sorted support points, so the result depends only on
/// the support set and not on the shuffle order. Throws DomainError on empty input.
Circle smallest_enclosing_circle(std::span<const Point2> points, std::uint64_t seed = kDefaultSeed);

/// Adaptive de Casteljau flattening. Every emitted point lies on the curve and
/// the polyline stays within `tol` of it. Includes both endpoints.
std::vector<Point2> flatten_cubic_bezier(Point2 p0, Point2 p1, Point2 p2, Point2 p3, double tol);

std::vector<Point2> flatten_quadratic_bezier(Point2 p0, Point2 p1, Point2 p2, double tol);

} // namespace spheresample
