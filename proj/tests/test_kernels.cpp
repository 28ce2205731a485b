#include "oracles.hpp"

#include "spheresample/kernels.hpp"
#include "spheresample/shape_io.hpp"

#include <doctest.h>

#include <omp.h>

#include <random>

using namespace spheresample;

// Every parallel kernel must agree bit for bit with its serial reference,
// whatever the thread count.

namespace {

std::vector<Circle> random_balls(std::mt19937_64& rng, std::size_t n, double lo, double hi)
{
    std::uniform_real_distribution<double> pos(lo, hi), rad(0.05, 0.6);
    std::vector<Circle> out(n);
    for (auto& b : out)
        b = {{pos(rng), pos(rng)}, rad(rng)};
    return out;
}

} // namespace

TEST_CASE("kernels: parallel equals serial")
{
    const auto shape = parse_shape(oracle::read_text(oracle::corpus_path("note.svg")), ShapeFormat::svg_path);
    const auto tris = triangulate(shape);
    std::mt19937_64 rng(31);
    const auto points = oracle::random_points(rng, 3000);
    const auto centers = oracle::random_points(rng, 17);
    const auto balls = random_balls(rng, 40, shape.bbox.min.x, shape.bbox.max.x);

    for (int threads : {1, 2, 4}) {
        CAPTURE(threads);
        omp_set_num_threads(threads);

        std::vector<std::uint32_t> a(points.size()), b(points.size());
        kernels::assign_nearest(points, centers, a);
        kernels::assign_nearest_serial(points, centers, b);
        CHECK(a == b);

        CHECK(kernels::cluster_enclosing_circles(points, a, centers, 5) ==
              kernels::cluster_enclosing_circles_serial(points, a, centers, 5));
        CHECK(kernels::shape_intersection_areas(balls, tris) == kernels::shape_intersection_areas_serial(balls, tris));
        CHECK(kernels::lens_row_sums(balls) == kernels::lens_row_sums_serial(balls));
        CHECK(kernels::quadrant_counts(balls, shape, 64) == kernels::quadrant_counts_serial(balls, shape, 64));
    }
    omp_set_num_threads(kernels::max_threads());
}

TEST_CASE("kernels: assignment ties go to the lowest index")
{
    const std::vector<Point2> centers{{-1, 0}, {1, 0}, {-1, 0}};
    const std::vector<Point2> points{{0, 0}, {0, 5}, {-1, 0}};
    std::vector<std::uint32_t> owner(points.size());
    kernels::assign_nearest(points, centers, owner);
    CHECK(owner == std::vector<std::uint32_t>{0, 0, 0});
}

TEST_CASE("kernels: empty clusters keep their fallback center")
{
    const std::vector<Point2> points{{0, 0}, {1, 0}};
    const std::vector<std::uint32_t> owner{0, 0};
    const std::vector<Point2> fallback{{9, 9}, {3, 4}};
    const auto circles = kernels::cluster_enclosing_circles(points, owner, fallback, 1);
    REQUIRE(circles.size() == 2);
    CHECK(circles[0].radius == doctest::Approx(0.5));
    CHECK(circles[1].center == Point2{3, 4});
    CHECK(circles[1].radius == 0.0);
}

TEST_CASE("kernels: scanline quadrant counts on shapes with holes")
{
    const auto ring = parse_shape(oracle::read_text(oracle::corpus_path("ring.svg")), ShapeFormat::svg_path);
    const auto annulus = parse_shape(oracle::read_text(oracle::corpus_path("annulus.json")), ShapeFormat::polygon_json);
    std::mt19937_64 rng(32);
    for (const auto* s : {&ring, &annulus}) {
        const auto balls = random_balls(rng, 30, s->bbox.min.x, s->bbox.max.x);
        for (int grid : {8, 33, 64})
            CHECK(kernels::quadrant_counts(balls, *s, grid) == kernels::quadrant_counts_serial(balls, *s, grid));
    }
}
