#include "spheresample/errors.hpp"
#include "spheresample/shape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spheresample {

namespace {

bool in_triangle_inclusive(Point2 a, Point2 b, Point2 c, Point2 p)
{
    return orient(a, b, p) >= 0.0 && orient(b, c, p) >= 0.0 && orient(c, a, p) >= 0.0;
}

bool in_triangle_strict(Point2 a, Point2 b, Point2 c, Point2 p)
{
    const double s = orient(a, b, c) > 0.0 ? 1.0 : -1.0;
    return s * orient(a, b, p) > 0.0 && s * orient(b, c, p) > 0.0 && s * orient(c, a, p) > 0.0;
}

// Splices a CW hole into a CCW polygon through a mutually visible vertex pair
// (ray cast from the hole's rightmost vertex, then the reflex-vertex
// correction for when the hit edge's endpoint is occluded).
void bridge_hole(std::vector<Point2>& poly, const std::vector<Point2>& hole)
{
    std::size_t m_idx = 0;
    for (std::size_t i = 1; i < hole.size(); ++i) {
        if (hole[i].x > hole[m_idx].x || (hole[i].x == hole[m_idx].x && hole[i].y < hole[m_idx].y))
            m_idx = i;
    }
    const Point2 m = hole[m_idx];

    const std::size_t n = poly.size();
    double best_x = std::numeric_limits<double>::infinity();
    std::size_t best_vertex = n;
    std::size_t best_edge = n;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = poly[i];
        const Point2 b = poly[(i + 1) % n];
        if (a.y == m.y && a.x >= m.x && a.x < best_x) {
            best_x = a.x;
            best_vertex = i;
            best_edge = n;
        }
        if ((a.y < m.y && b.y > m.y) || (a.y > m.y && b.y < m.y)) {
            const double x = a.x + (m.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (x >= m.x && x < best_x) {
                best_x = x;
                best_edge = i;
                best_vertex = n;
            }
        }
    }
    if (best_vertex == n && best_edge == n)
        throw ShapeInvalidError("triangulate: hole is not enclosed by its outer loop");

    std::size_t p_idx = best_vertex;
    if (p_idx == n) {
        const std::size_t a = best_edge;
        const std::size_t b = (best_edge + 1) % n;
        p_idx = poly[a].x > poly[b].x ? a : b;
        const Point2 hit{best_x, m.y};
        const Point2 p = poly[p_idx];
        double best_angle = std::numeric_limits<double>::infinity();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 v = poly[i];
            if (i == p_idx || v == p)
                continue;
            const Point2 prev = poly[(i + n - 1) % n];
            const Point2 next = poly[(i + 1) % n];
            if (orient(prev, v, next) > 0.0)
                continue; // convex vertices cannot occlude
            if (!in_triangle_strict(m, hit, p, v))
                continue;
            const double angle = std::atan2(std::abs(v.y - m.y), v.x - m.x);
            const double dist = distance(m, v);
            if (angle < best_angle || (angle == best_angle && dist < best_dist)) {
                best_angle = angle;
                best_dist = dist;
                p_idx = i;
            }
        }
    }

    std::vector<Point2> merged;
    merged.reserve(n + hole.size() + 2);
    merged.insert(merged.end(), poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(p_idx) + 1);
    for (std::size_t k = 0; k <= hole.size(); ++k)
        merged.push_back(hole[(m_idx + k) % hole.size()]);
    merged.push_back(poly[p_idx]);
    merged.insert(merged.end(), poly.begin() + static_cast<std::ptrdiff_t>(p_idx) + 1, poly.end());
    poly = std::move(merged);
}

void ear_clip(const std::vector<Point2>& pts, std::vector<Triangle>& out)
{
    const std::size_t n = pts.size();
    std::vector<std::size_t> prev(n), next(n);
    for (std::size_t i = 0; i < n; ++i) {
        prev[i] = (i + n - 1) % n;
        next[i] = (i + 1) % n;
    }

    auto emit = [&](std::size_t a, std::size_t b, std::size_t c) {
        if (orient(pts[a], pts[b], pts[c]) > 0.0)
            out.push_back({pts[a], pts[b], pts[c]});
    };
    auto unlink = [&](std::size_t i) {
        next[prev[i]] = next[i];
        prev[next[i]] = prev[i];
    };
    auto is_ear = [&](std::size_t i) {
        const Point2 a = pts[prev[i]];
        const Point2 b = pts[i];
        const Point2 c = pts[next[i]];
        if (orient(a, b, c) <= 0.0)
            return false;
        for (std::size_t v = next[next[i]]; v != prev[i]; v = next[v]) {
            const Point2 p = pts[v];
            if (p == a || p == b || p == c)
                continue;
            if (in_triangle_inclusive(a, b, c, p))
                return false;
        }
        return true;
    };

    std::size_t remaining = n;
    std::size_t i = 0;
    std::size_t stall = 0;
    while (remaining > 3) {
        if (is_ear(i)) {
            emit(prev[i], i, next[i]);
            unlink(i);
            --remaining;
            i = next[i];
            stall = 0;
            continue;
        }
        i = next[i];
        if (++stall <= remaining)
            continue;

        // A full pass without an ear: shed a degenerate vertex if there is
        // one, otherwise clip the most convex vertex.
        std::size_t pick = n;
        double best = -std::numeric_limits<double>::infinity();
        std::size_t v = i;
        for (std::size_t k = 0; k < remaining; ++k, v = next[v]) {
            const double o = orient(pts[prev[v]], pts[v], pts[next[v]]);
            if (o == 0.0) {
                pick = v;
                break;
            }
            if (o > best) {
                best = o;
                pick = v;
            }
        }
        emit(prev[pick], pick, next[pick]);
        unlink(pick);
        --remaining;
        i = next[pick];
        stall = 0;
    }
    emit(prev[i], i, next[i]);
}

} // namespace

std::vector<Triangle> triangulate(const ElementShape& shape)
{
    check_simple(shape);

    std::vector<std::size_t> outers;
    for (std::size_t l = 0; l < shape.loops.size(); ++l) {
        if (!shape.loops[l].is_hole)
            outers.push_back(l);
    }

    // Each hole belongs to the smallest outer loop that contains it.
    std::vector<std::vector<std::size_t>> holes_of(shape.loops.size());
    for (std::size_t h = 0; h < shape.loops.size(); ++h) {
        if (!shape.loops[h].is_hole)
            continue;
        const Point2 probe = shape.loops[h].vertices.front();
        std::size_t owner = shape.loops.size();
        double owner_area = std::numeric_limits<double>::infinity();
        for (std::size_t o : outers) {
            const auto& v = shape.loops[o].vertices;
            if (!point_in_loop(probe, v))
                continue;
            const double a = std::abs(polygon_area(v));
            if (a < owner_area) {
                owner_area = a;
                owner = o;
            }
        }
        if (owner == shape.loops.size())
            throw ShapeInvalidError("triangulate: hole loop is not inside any outer loop");
        holes_of[owner].push_back(h);
    }

    std::vector<Triangle> out;
    for (std::size_t o : outers) {
        std::vector<Point2> poly = shape.loops[o].vertices;
        auto& holes = holes_of[o];
        auto max_x = [&](std::size_t h) {
            const auto& v = shape.loops[h].vertices;
            return std::max_element(v.begin(), v.end(), [](Point2 a, Point2 b) { return a.x < b.x; })->x;
        };
        std::sort(holes.begin(), holes.end(), [&](std::size_t a, std::size_t b) {
            const double xa = max_x(a), xb = max_x(b);
            return xa > xb || (xa == xb && a < b);
        });
        for (std::size_t h : holes)
            bridge_hole(poly, shape.loops[h].vertices);
        ear_clip(poly, out);
    }
    return out;
}

} // namespace spheresample
