#include "spheresample/shape.hpp"

#include "spheresample/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace spheresample {

namespace {

void drop_repeated_vertices(std::vector<Point2>& v)
{
    v.erase(std::unique(v.begin(), v.end()), v.end());
    while (v.size() > 1 && v.front() == v.back())
        v.pop_back();
}

bool on_segment(Point2 p, Point2 a, Point2 b)
{
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_touch(Point2 a, Point2 b, Point2 c, Point2 d)
{
    const double o1 = orient(a, b, c);
    const double o2 = orient(a, b, d);
    const double o3 = orient(c, d, a);
    const double o4 = orient(c, d, b);
    if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0)))
        return true;
    return (o1 == 0 && on_segment(c, a, b)) || (o2 == 0 && on_segment(d, a, b)) ||
           (o3 == 0 && on_segment(a, c, d)) || (o4 == 0 && on_segment(b, c, d));
}

} // namespace

double loop_perimeter(std::span<const Point2> loop)
{
    double len = 0.0;
    for (std::size_t i = 0, j = loop.size() - 1; i < loop.size(); j = i++)
        len += distance(loop[j], loop[i]);
    return len;
}

bool point_in_loop(Point2 p, std::span<const Point2> loop)
{
    bool inside = false;
    for (std::size_t i = 0, j = loop.size() - 1; i < loop.size(); j = i++) {
        const Point2 a = loop[j];
        const Point2 b = loop[i];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x)
                inside = !inside;
        }
    }
    return inside;
}

bool point_in_shape(Point2 p, const ElementShape& shape)
{
    const double edge_tol = 1e-12 * shape.bbox.diagonal();
    bool inside = false;
    for (const Loop& loop : shape.loops) {
        const auto& v = loop.vertices;
        for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
            if (distance_to_segment(p, v[j], v[i]) <= edge_tol)
                return true;
        }
        if (point_in_loop(p, v))
            inside = !inside;
    }
    return inside;
}

void check_simple(const ElementShape& shape)
{
    struct Edge {
        Point2 a, b;
        std::size_t loop, index;
        double lo_x, hi_x;
    };
    std::vector<Edge> edges;
    for (std::size_t l = 0; l < shape.loops.size(); ++l) {
        const auto& v = shape.loops[l].vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2 a = v[i];
            const Point2 b = v[(i + 1) % v.size()];
            edges.push_back({a, b, l, i, std::min(a.x, b.x), std::max(a.x, b.x)});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& e, const Edge& f) { return e.lo_x < f.lo_x; });

    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        for (std::size_t j = i + 1; j < edges.size() && edges[j].lo_x <= e.hi_x; ++j) {
            const Edge& f = edges[j];
            if (e.loop == f.loop) {
                const std::size_t n = shape.loops[e.loop].vertices.size();
                const bool adjacent = (e.index + 1) % n == f.index || (f.index + 1) % n == e.index;
                if (adjacent) {
                    // Adjacent edges share one vertex; they only conflict when
                    // they fold back onto each other.
                    const Point2 shared = (e.index + 1) % n == f.index ? e.b : e.a;
                    const Point2 p = shared == e.a ? e.b : e.a;
                    const Point2 q = shared == f.a ? f.b : f.a;
                    if (orient(shared, p, q) == 0.0 && dot(p - shared, q - shared) > 0.0)
                        throw ShapeInvalidError("loop " + std::to_string(e.loop) + " folds back on itself");
                    continue;
                }
            }
            if (segments_touch(e.a, e.b, f.a, f.b))
                throw ShapeInvalidError("shape boundary self-intersects (loops " + std::to_string(e.loop) + " and " +
                                        std::to_string(f.loop) + ")");
        }
    }
}

void classify_holes_by_nesting(std::vector<Loop>& loops)
{
    for (std::size_t i = 0; i < loops.size(); ++i) {
        int depth = 0;
        for (std::size_t j = 0; j < loops.size(); ++j) {
            if (i != j && point_in_loop(loops[i].vertices.front(), loops[j].vertices))
                ++depth;
        }
        loops[i].is_hole = depth % 2 == 1;
    }
}

ElementShape make_element_shape(std::vector<Loop> loops)
{
    ElementShape shape;
    double outer_area = 0.0;
    double hole_area = 0.0;
    for (std::size_t l = 0; l < loops.size(); ++l) {
        Loop& loop = loops[l];
        drop_repeated_vertices(loop.vertices);
        for (const Point2& p : loop.vertices) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw ShapeInvalidError("loop " + std::to_string(l) + " has a non-finite coordinate");
        }
        if (loop.vertices.size() < 3)
            throw ShapeInvalidError("loop " + std::to_string(l) + " has fewer than 3 distinct vertices");
        const double a = polygon_area(loop.vertices);
        if (a == 0.0)
            throw ShapeInvalidError("loop " + std::to_string(l) + " has zero area");
        if ((a < 0.0) != loop.is_hole)
            std::reverse(loop.vertices.begin(), loop.vertices.end());
        (loop.is_hole ? hole_area : outer_area) += std::abs(a);
    }
    if (loops.empty())
        throw ShapeInvalidError("shape has no loops");

    shape.loops = std::move(loops);
    shape.area = outer_area - hole_area;
    if (!(shape.area > 0.0))
        throw ShapeInvalidError("shape has zero area");

    std::vector<Point2> all;
    for (const Loop& loop : shape.loops)
        all.insert(all.end(), loop.vertices.begin(), loop.vertices.end());
    shape.bbox = bounding_box(all);

    check_simple(shape);

    for (std::size_t h = 0; h < shape.loops.size(); ++h) {
        if (!shape.loops[h].is_hole)
            continue;
        const Point2 probe = shape.loops[h].vertices.front();
        const bool enclosed = std::any_of(shape.loops.begin(), shape.loops.end(), [&](const Loop& outer) {
            return !outer.is_hole && point_in_loop(probe, outer.vertices);
        });
        if (!enclosed)
            throw ShapeInvalidError("hole loop " + std::to_string(h) + " is not inside any outer loop");
    }
    return shape;
}

} // namespace spheresample
