#include "oracles.hpp"

#include "spheresample/errors.hpp"
#include "spheresample/sec_sampler.hpp"

#include <doctest.h>

#include <random>

using namespace spheresample;

TEST_CASE("init_centers: sorted picks")
{
    std::vector<Point2> column;
    for (int i = 9; i >= 0; --i)
        column.push_back({0.0, double(i)});
    const auto c2 = init_centers(column, 2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0] == Point2{0, 0});
    CHECK(c2[1] == Point2{0, 5});

    const std::vector<Point2> pts{{3, 1}, {1, 1}, {2, 0}, {0, 2}};
    const auto c1 = init_centers(pts, 1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == Point2{2, 0});

    // y first, then x.
    const auto all = init_centers(pts, 4);
    CHECK(all == std::vector<Point2>{{2, 0}, {1, 1}, {3, 1}, {0, 2}});

    CHECK_THROWS_AS(init_centers(pts, 5), DomainError);
    CHECK_THROWS_AS(init_centers(pts, 0), DomainError);
}

TEST_CASE("kmeans_sec: two pairs on a line")
{
    const std::vector<Point2> pts{{0, 0}, {1, 0}, {10, 0}, {11, 0}};
    const auto s = kmeans_sec(pts, std::vector<Point2>{{0, 0}, {10, 0}});
    CHECK(s.converged);
    CHECK(s.iteration <= 2);
    REQUIRE(s.balls.size() == 2);
    CHECK(s.balls[0].center.x == doctest::Approx(0.5));
    CHECK(s.balls[0].center.y == doctest::Approx(0.0));
    CHECK(s.balls[0].radius == doctest::Approx(0.5));
    CHECK(s.balls[1].center.x == doctest::Approx(10.5));
    CHECK(s.balls[1].radius == doctest::Approx(0.5));
    CHECK(s.assignment == std::vector<std::uint32_t>{0, 0, 1, 1});
}

TEST_CASE("kmeans_sec: one cluster is the smallest enclosing circle")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = oracle::random_points(rng, 60);
        const auto s = kmeans_sec(pts, 1);
        REQUIRE(s.balls.size() == 1);
        CHECK(s.balls[0] == smallest_enclosing_circle(pts));
        CHECK(s.converged);
        const Circle ref = oracle::brute_force_sec(pts);
        CHECK(s.balls[0].radius == doctest::Approx(ref.radius).epsilon(1e-9));
    }
}

TEST_CASE("kmeans_sec: singletons and identical points")
{
    const std::vector<Point2> pts{{0, 0}, {2, 1}, {5, 3}, {1, 4}};
    const auto s = kmeans_sec(pts, 4);
    REQUIRE(s.balls.size() == 4);
    for (const Circle& c : s.balls)
        CHECK(c.radius == 0.0);

    const std::vector<Point2> same(7, Point2{1.5, -2});
    const auto t = kmeans_sec(same, 3);
    REQUIRE(t.balls.size() == 3);
    for (const Circle& c : t.balls) {
        CHECK(c.center == Point2{1.5, -2});
        CHECK(c.radius == 0.0);
    }
    for (std::uint32_t a : t.assignment)
        CHECK(a < 3);
}

TEST_CASE("kmeans_sec: empty clusters are refilled")
{
    // Both starting centers sit on the left; the right cluster starts empty
    // after the first assignment unless it is repaired.
    const std::vector<Point2> pts{{0, 0}, {0.1, 0}, {0.2, 0}, {9, 0}};
    const auto s = kmeans_sec(pts, std::vector<Point2>{{0, 0}, {0, 0}});
    REQUIRE(s.balls.size() == 2);
    std::vector<int> sizes(2, 0);
    for (std::uint32_t a : s.assignment)
        ++sizes[a];
    CHECK(sizes[0] > 0);
    CHECK(sizes[1] > 0);
}

TEST_CASE("kmeans_sec: containment, index range, determinism")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const auto pts = oracle::random_points(rng, 300);
        for (int b : {2, 5, 13}) {
            const auto s = kmeans_sec(pts, b);
            REQUIRE(s.balls.size() == static_cast<std::size_t>(b));
            REQUIRE(s.assignment.size() == pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i) {
                REQUIRE(s.assignment[i] < static_cast<std::uint32_t>(b));
                const Circle& c = s.balls[s.assignment[i]];
                CHECK(distance(pts[i], c.center) <= c.radius + 1e-9);
            }
            const auto again = kmeans_sec(pts, b);
            CHECK(again.balls == s.balls);
            CHECK(again.assignment == s.assignment);
            CHECK(again.iteration == s.iteration);
        }
    }
}

TEST_CASE("kmeans_sec: argument checks and sample sets")
{
    const std::vector<Point2> pts{{0, 0}, {1, 0}};
    CHECK_THROWS_AS(kmeans_sec(pts, 3), DomainError);
    KMeansOptions bad;
    bad.max_iter = 0;
    CHECK_THROWS_AS(kmeans_sec(pts, 1, bad), DomainError);
    bad = {};
    bad.move_tol = 0.0;
    CHECK_THROWS_AS(kmeans_sec(pts, 1, bad), DomainError);

    KMeansOptions one;
    one.max_iter = 1;
    const auto s = kmeans_sec(std::vector<Point2>{{0, 0}, {1, 0}, {10, 0}, {11, 0}}, 2, one);
    CHECK(s.iteration == 1);
    const auto set = to_sample_set(s);
    CHECK(set.method == "sec");
    CHECK(set.balls == s.balls);
    CHECK(set.iterations == 1);
    CHECK(set.converged == s.converged);
}
