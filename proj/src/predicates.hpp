#pragma once

// Exact orientation and in-circle signs: a floating-point filter first, then
// nonoverlapping floating-point expansions (two_sum / two_product) when the
// filter cannot decide.

#include "spheresample/geometry.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace spheresample::exact {

using Expansion = std::vector<double>;

inline void two_sum(double a, double b, double& x, double& y)
{
    x = a + b;
    const double bv = x - a;
    const double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& x, double& y)
{
    x = a * b;
    y = std::fma(a, b, -x);
}

inline Expansion diff(double a, double b)
{
    double x, y;
    two_sum(a, -b, x, y);
    return {y, x};
}

// e + f, both nonoverlapping and ordered by increasing magnitude.
inline Expansion add(const Expansion& e, const Expansion& f)
{
    Expansion h = e;
    for (double b : f) {
        double q = b;
        for (double& hi : h) {
            double s, t;
            two_sum(q, hi, s, t);
            hi = t;
            q = s;
        }
        h.push_back(q);
    }
    Expansion out;
    for (double v : h) {
        if (v != 0.0)
            out.push_back(v);
    }
    return out;
}

inline Expansion scale(const Expansion& e, double b)
{
    Expansion h;
    double q = 0.0;
    for (double v : e) {
        double p, pe, s, t;
        two_product(v, b, p, pe);
        two_sum(q, pe, s, t);
        h.push_back(t);
        two_sum(p, s, q, t);
        h.push_back(t);
    }
    h.push_back(q);
    Expansion out;
    for (double v : h) {
        if (v != 0.0)
            out.push_back(v);
    }
    // Renormalize into increasing-magnitude order.
    return add(Expansion{}, out);
}

inline Expansion mul(const Expansion& e, const Expansion& f)
{
    Expansion acc;
    for (double v : f)
        acc = add(acc, scale(e, v));
    return acc;
}

inline Expansion neg(Expansion e)
{
    for (double& v : e)
        v = -v;
    return e;
}

inline int sign(const Expansion& e)
{
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        if (*it != 0.0)
            return *it > 0.0 ? 1 : -1;
    }
    return 0;
}

inline constexpr double eps = std::numeric_limits<double>::epsilon() / 2.0;

/// Sign of orient(a, b, c): +1 counter-clockwise, -1 clockwise, 0 collinear.
inline int orient_sign(Point2 a, Point2 b, Point2 c)
{
    const double l = (b.x - a.x) * (c.y - a.y);
    const double r = (b.y - a.y) * (c.x - a.x);
    const double det = l - r;
    const double bound = (3.0 * eps + 16.0 * eps * eps) * (std::abs(l) + std::abs(r));
    if (det > bound || -det > bound)
        return det > 0.0 ? 1 : -1;
    const Expansion d = add(mul(diff(b.x, a.x), diff(c.y, a.y)), neg(mul(diff(b.y, a.y), diff(c.x, a.x))));
    return sign(d);
}

/// Sign of the in-circle determinant: +1 when d is strictly inside the
/// circle through counter-clockwise a, b, c.
inline int incircle_sign(Point2 a, Point2 b, Point2 c, Point2 d)
{
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double bc = bdx * cdy - bdy * cdx;
    const double ca = cdx * ady - cdy * adx;
    const double ab = adx * bdy - ady * bdx;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;
    const double det = alift * bc + blift * ca + clift * ab;
    const double permanent = (std::abs(bdx * cdy) + std::abs(bdy * cdx)) * alift +
                             (std::abs(cdx * ady) + std::abs(cdy * adx)) * blift +
                             (std::abs(adx * bdy) + std::abs(ady * bdx)) * clift;
    const double bound = (10.0 * eps + 96.0 * eps * eps) * permanent;
    if (det > bound || -det > bound)
        return det > 0.0 ? 1 : -1;

    const Expansion eadx = diff(a.x, d.x), eady = diff(a.y, d.y);
    const Expansion ebdx = diff(b.x, d.x), ebdy = diff(b.y, d.y);
    const Expansion ecdx = diff(c.x, d.x), ecdy = diff(c.y, d.y);
    auto lift = [](const Expansion& x, const Expansion& y) { return add(mul(x, x), mul(y, y)); };
    auto cross = [](const Expansion& ux, const Expansion& uy, const Expansion& vx, const Expansion& vy) {
        return add(mul(ux, vy), neg(mul(uy, vx)));
    };
    const Expansion t1 = mul(lift(eadx, eady), cross(ebdx, ebdy, ecdx, ecdy));
    const Expansion t2 = mul(lift(ebdx, ebdy), cross(ecdx, ecdy, eadx, eady));
    const Expansion t3 = mul(lift(ecdx, ecdy), cross(eadx, eady, ebdx, ebdy));
    return sign(add(add(t1, t2), t3));
}

/// Exact sign of dot(p - a, (nx, ny)) for small integer nx, ny.
inline int dot_sign(Point2 p, Point2 a, double nx, double ny)
{
    return sign(add(scale(diff(p.x, a.x), nx), scale(diff(p.y, a.y), ny)));
}

} // namespace spheresample::exact
