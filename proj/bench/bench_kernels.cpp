// Serial reference vs OpenMP kernels on a synthetic workload.
// Usage: bench_kernels [balls] [repeats]

#include "spheresample/kernels.hpp"
#include "spheresample/shape_io.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

using namespace spheresample;

namespace {

double time_ms(const std::function<void()>& fn, int repeats)
{
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool same)
{
    std::printf("%-26s serial %9.3f ms   omp %9.3f ms   speedup %5.2fx   %s\n", name, serial, parallel,
                serial / parallel, same ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv)
{
    const int n_balls = argc > 1 ? std::atoi(argv[1]) : 400;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;

    // Star with a square hole: enough vertices to make the shape kernels work.
    std::vector<Point2> star;
    for (int i = 0; i < 64; ++i) {
        const double a = 2.0 * 3.14159265358979323846 * i / 64;
        const double r = (i % 2 == 0) ? 1.0 : 0.6;
        star.push_back({r * std::cos(a), r * std::sin(a)});
    }
    const ElementShape shape =
        make_element_shape({{star, false}, {{{-0.1, -0.1}, {-0.1, 0.1}, {0.1, 0.1}, {0.1, -0.1}}, true}});
    const auto tris = triangulate(shape);

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> pos(-1.0, 1.0), rad(0.05, 0.3);
    std::vector<Circle> balls;
    for (int i = 0; i < n_balls; ++i)
        balls.push_back({{pos(rng), pos(rng)}, rad(rng)});

    std::vector<Point2> pts = positions(sample_boundary(shape, 4000));
    const auto interior = positions(sample_interior(shape, 20000));
    pts.insert(pts.end(), interior.begin(), interior.end());
    std::vector<Point2> centers;
    for (int i = 0; i < 64; ++i)
        centers.push_back(pts[static_cast<std::size_t>(i) * pts.size() / 64]);

    std::printf("threads: %d, balls: %d, points: %zu, triangles: %zu\n", kernels::max_threads(), n_balls, pts.size(),
                tris.size());

    {
        std::vector<std::uint32_t> a(pts.size()), b(pts.size());
        const double s = time_ms([&] { kernels::assign_nearest_serial(pts, centers, b); }, repeats);
        const double p = time_ms([&] { kernels::assign_nearest(pts, centers, a); }, repeats);
        report("assign_nearest", s, p, a == b);
        std::vector<Circle> ca, cb;
        const double s2 = time_ms([&] { cb = kernels::cluster_enclosing_circles_serial(pts, b, centers, 1); }, repeats);
        const double p2 = time_ms([&] { ca = kernels::cluster_enclosing_circles(pts, a, centers, 1); }, repeats);
        bool same = ca.size() == cb.size();
        for (std::size_t i = 0; same && i < ca.size(); ++i)
            same = ca[i].center == cb[i].center && ca[i].radius == cb[i].radius;
        report("cluster_enclosing_circles", s2, p2, same);
    }
    {
        std::vector<double> a, b;
        const double s = time_ms([&] { b = kernels::shape_intersection_areas_serial(balls, tris); }, repeats);
        const double p = time_ms([&] { a = kernels::shape_intersection_areas(balls, tris); }, repeats);
        report("shape_intersection_areas", s, p, a == b);
    }
    {
        std::vector<double> a, b;
        const double s = time_ms([&] { b = kernels::lens_row_sums_serial(balls); }, repeats);
        const double p = time_ms([&] { a = kernels::lens_row_sums(balls); }, repeats);
        report("lens_row_sums", s, p, a == b);
    }
    {
        std::vector<kernels::QuadrantCounts> a, b;
        const double s = time_ms([&] { b = kernels::quadrant_counts_serial(balls, shape, 64); }, repeats);
        const double p = time_ms([&] { a = kernels::quadrant_counts(balls, shape, 64); }, repeats);
        report("quadrant_counts", s, p, a == b);
    }
    return 0;
}
