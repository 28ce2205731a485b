#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's geometry code.

#include "spheresample/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using spheresample::Circle;
using spheresample::Point2;

#ifndef SPHERESAMPLE_CORPUS_DIR
#define SPHERESAMPLE_CORPUS_DIR "data/corpus"
#endif

inline std::string corpus_path(const std::string& name) { return std::string(SPHERESAMPLE_CORPUS_DIR) + "/" + name; }

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline const std::vector<std::string>& corpus_files()
{
    static const std::vector<std::string> files = {"L.json",       "S.json",        "T.json",    "U.json",
                                                   "annulus.json", "disk.svg",      "dumbbell.json", "leaf.svg",
                                                   "note.svg",     "plus.json",     "rect4x1.json",  "ring.svg",
                                                   "star.json"};
    return files;
}

// O(n^3) smallest enclosing circle: the smallest 2- or 3-point candidate
// circle containing every point. Candidates no smaller than the best so far
// are skipped before the O(n) containment check.
inline Circle brute_force_sec(const std::vector<Point2>& p)
{
    const std::size_t n = p.size();
    if (n == 1)
        return {p[0], 0.0};
    Circle best{{0, 0}, std::numeric_limits<double>::infinity()};
    auto contains_all = [&](Point2 c, double r) {
        const double lim = r * (1.0 + 1e-12) + 1e-15;
        for (const Point2& q : p) {
            if (std::hypot(q.x - c.x, q.y - c.y) > lim)
                return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point2 c{(p[i].x + p[j].x) / 2, (p[i].y + p[j].y) / 2};
            const double r = std::hypot(p[i].x - c.x, p[i].y - c.y);
            if (r < best.radius && contains_all(c, r))
                best = {c, r};
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const double ax = p[i].x, ay = p[i].y;
                const double bx = p[j].x - ax, by = p[j].y - ay;
                const double cx = p[k].x - ax, cy = p[k].y - ay;
                const double d = 2.0 * (bx * cy - by * cx);
                if (d == 0.0)
                    continue;
                const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
                const Point2 c{ax + (cy * b2 - by * c2) / d, ay + (bx * c2 - cx * b2) / d};
                const double r = std::max({std::hypot(p[i].x - c.x, p[i].y - c.y), std::hypot(p[j].x - c.x, p[j].y - c.y),
                                           std::hypot(p[k].x - c.x, p[k].y - c.y)});
                if (r < best.radius && contains_all(c, r))
                    best = {c, r};
            }
        }
    }
    return best;
}

// Even-odd ray cast written independently of the library.
inline bool inside_polygons(double x, double y, const std::vector<std::vector<Point2>>& loops)
{
    bool in = false;
    for (const auto& v : loops) {
        for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
            if ((v[i].y > y) != (v[j].y > y) && x < (v[j].x - v[i].x) * (y - v[i].y) / (v[j].y - v[i].y) + v[i].x)
                in = !in;
        }
    }
    return in;
}

// Jittered stratified Monte Carlo over the bounding square of `c` with
// roughly `samples` points. `in_region` decides membership of the second set.
template <class Region>
double mc_circle_area(const Circle& c, Region&& in_region, std::int64_t samples, std::uint64_t seed)
{
    const auto side = static_cast<std::int64_t>(std::sqrt(static_cast<double>(samples)));
    const double h = 2.0 * c.radius / static_cast<double>(side);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < side; ++i) {
        for (std::int64_t j = 0; j < side; ++j) {
            const double x = c.center.x - c.radius + (static_cast<double>(i) + u(rng)) * h;
            const double y = c.center.y - c.radius + (static_cast<double>(j) + u(rng)) * h;
            const double dx = x - c.center.x, dy = y - c.center.y;
            if (dx * dx + dy * dy <= c.radius * c.radius && in_region(x, y))
                ++hits;
        }
    }
    return static_cast<double>(hits) * h * h;
}

inline double mc_lens_area(const Circle& a, const Circle& b, std::int64_t samples, std::uint64_t seed)
{
    const Circle& small = a.radius <= b.radius ? a : b;
    const Circle& other = a.radius <= b.radius ? b : a;
    return mc_circle_area(
        small,
        [&](double x, double y) {
            const double dx = x - other.center.x, dy = y - other.center.y;
            return dx * dx + dy * dy <= other.radius * other.radius;
        },
        samples, seed);
}

inline std::vector<Point2> random_points(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Point2> p(n);
    for (auto& q : p)
        q = {u(rng), u(rng)};
    return p;
}

} // namespace oracle
