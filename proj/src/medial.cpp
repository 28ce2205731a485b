#include "spheresample/medial.hpp"

#include "spheresample/errors.hpp"
#include "spheresample/shape_io.hpp"

#include <algorithm>
#include <cmath>

namespace spheresample {

std::vector<PolarBall> compute_polar_balls(const ElementShape& shape, int boundary_count, double noise_radius_frac)
{
    if (boundary_count < 16)
        throw DomainError("compute_polar_balls: boundary_count must be at least 16");
    if (!(noise_radius_frac >= 0.0 && noise_radius_frac < 1.0))
        throw DomainError("compute_polar_balls: noise_radius_frac must be in [0, 1)");

    const std::vector<Point2> pts = positions(sample_boundary(shape, boundary_count));
    const auto tris = delaunay_triangulate(pts);
    const double min_radius = noise_radius_frac * shape.bbox.diagonal();

    std::vector<PolarBall> balls;
    for (const auto& t : tris) {
        const Circle c = circumcircle(pts[t[0]], pts[t[1]], pts[t[2]]);
        if (!std::isfinite(c.center.x) || c.radius < min_radius)
            continue;
        if (!point_in_shape(c.center, shape))
            continue;
        balls.push_back({c, t});
    }
    std::sort(balls.begin(), balls.end(), [](const PolarBall& a, const PolarBall& b) {
        if (a.ball.radius != b.ball.radius)
            return a.ball.radius > b.ball.radius;
        if (a.ball.center != b.ball.center)
            return yx_less(a.ball.center, b.ball.center);
        return a.generators < b.generators;
    });
    return balls;
}

std::vector<PolarBall> scale_axis_prune(std::span<const PolarBall> balls, double s)
{
    if (!(s >= 1.0))
        throw DomainError("scale_axis_prune: scale must be >= 1");
    std::vector<PolarBall> kept;
    for (const PolarBall& b : balls) {
        const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const PolarBall& k) {
            return distance(b.ball.center, k.ball.center) + s * b.ball.radius <= s * k.ball.radius;
        });
        if (!dominated)
            kept.push_back(b);
    }
    return kept;
}

SampleSet select_touching_polar_balls(std::span<const PolarBall> balls, double xi)
{
    if (!(xi >= 0.0) || !std::isfinite(xi))
        throw DomainError("select_touching_polar_balls: spacing ratio must be finite and >= 0");

    SampleSet out;
    out.method = "mat";
    out.parameters["xi"] = xi;
    for (const PolarBall& b : balls) {
        bool include = true;
        for (const Circle& kept : out.balls) {
            if (distance(b.ball.center, kept.center) < xi * (b.ball.radius + kept.radius)) {
                include = false;
                break;
            }
        }
        if (include)
            out.balls.push_back(b.ball);
    }
    return out;
}

} // namespace spheresample
