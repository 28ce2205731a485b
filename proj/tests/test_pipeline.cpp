#include "oracles.hpp"
#include "shapes.hpp"

#include "spheresample/errors.hpp"
#include "spheresample/pipeline.hpp"

#include <doctest.h>

using namespace spheresample;

namespace {

Config config_for(const std::string& name)
{
    Config c;
    c.format = name.ends_with(".svg") ? ShapeFormat::svg_path : ShapeFormat::polygon_json;
    c.boundary_points = 200;
    c.interior_points = 200;
    c.asymmetry_grid = 32;
    return c;
}

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("config: names and validation")
{
    for (auto m : {Method::mat, Method::sec, Method::automatic})
        CHECK(parse_method(to_string(m)) == m);
    CHECK(to_string(Method::automatic) == "auto");
    CHECK_THROWS_AS(parse_method("voronoi"), ConfigError);
    CHECK(parse_objective("area") == Objective::area);
    CHECK_THROWS_AS(parse_objective("volume"), ConfigError);

    CHECK_NOTHROW(validate(Config{}));
    auto bad = [](auto mutate) {
        Config c;
        mutate(c);
        return c;
    };
    CHECK_THROWS_AS(validate(bad([](Config& c) { c.xi = -0.1; })), ConfigError);
    CHECK_THROWS_AS(validate(bad([](Config& c) { c.samples_min = 4, c.samples_max = 2; })), ConfigError);
    CHECK_THROWS_AS(validate(bad([](Config& c) { c.r_min = 0.0; })), ConfigError);
    CHECK_THROWS_AS(validate(bad([](Config& c) { c.weights.adjacency = -1; })), ConfigError);
    CHECK_THROWS_AS(validate(bad([](Config& c) { c.boundary_points = 3; })), ConfigError);
    CHECK_THROWS_AS(validate(bad([](Config& c) { c.asymmetry_grid = 4; })), ConfigError);
    CHECK_THROWS_AS(validate(bad([](Config& c) { c.sat_scale = 0.5; })), ConfigError);
    CHECK_THROWS_AS(validate(bad([](Config& c) { c.move_tol = 0.0; })), ConfigError);
}

TEST_CASE("config: file round trip")
{
    Config c;
    CHECK(config_from_json(config_to_json(c)) == c);
    c.method = Method::sec;
    c.format = ShapeFormat::polygon_json;
    c.xi = 1.25;
    c.samples_min = 2;
    c.samples_max = 9;
    c.r_min = 0.125;
    c.weights = {0.5, 1.5, 3, 0.25};
    c.graph = GraphPolicy::complete;
    c.sat_scale = 1.1;
    c.objective = Objective::area;
    c.seed = 987654321;
    const std::string text = config_to_json(c);
    CHECK(config_from_json(text) == c);
    CHECK(config_to_json(config_from_json(text)) == text);

    // Missing keys keep defaults.
    const Config partial = config_from_json(R"({"method": "mat", "xi": 0.5})");
    CHECK(partial.method == Method::mat);
    CHECK(partial.xi == 0.5);
    CHECK(partial.boundary_points == Config{}.boundary_points);

    CHECK_THROWS_AS(config_from_json(R"({"bogus": 1})"), ConfigError);
    CHECK_THROWS_AS(config_from_json(R"({"xi": "wide"})"), ConfigError);
    CHECK_THROWS_AS(config_from_json(R"({"xi": 1,)"), ParseError);
    CHECK_THROWS_AS(config_from_json(R"({"weights": [1, 2]})"), ConfigError);
}

TEST_CASE("run: mat on the note glyph honors the spacing ratio")
{
    Config c = config_for("note.svg");
    c.method = Method::mat;
    c.xi = 0.8;
    const auto r = run(c, oracle::read_text(oracle::corpus_path("note.svg")));
    REQUIRE(r.samples.balls.size() >= 2);
    CHECK(r.samples.method == "mat");
    CHECK(r.samples.parameters.at("xi") == 0.8);
    CHECK(r.breakdown.empty());
    const auto& b = r.samples.balls;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            CHECK(distance(b[i].center, b[j].center) >= 0.8 * (b[i].radius + b[j].radius) - 1e-12);
    CHECK(r.graph.component_count() == 1);
    CHECK(r.timings_ms.contains("parse"));
}

TEST_CASE("run: sec with eight samples")
{
    for (const auto& name : oracle::corpus_files()) {
        CAPTURE(name);
        Config c = config_for(name);
        c.method = Method::sec;
        c.samples_max = 8;
        const auto r = run(c, oracle::read_text(oracle::corpus_path(name)));
        CHECK(r.samples.balls.size() <= 8);
        CHECK_FALSE(r.samples.balls.empty());
        CHECK(r.samples.parameters.at("samples") == 8);
        CHECK(r.graph.node_count == r.samples.balls.size());
    }
}

TEST_CASE("run: auto with samples-min 2 never returns one sample")
{
    for (const auto& name : {"disk.svg", "star.json", "leaf.svg"}) {
        CAPTURE(name);
        Config c = config_for(name);
        c.samples_min = 2;
        c.samples_max = 6;
        c.r_min = 10.0; // would trigger the one-circle fallback if it were allowed
        const auto r = run(c, oracle::read_text(oracle::corpus_path(name)));
        CHECK(r.samples.balls.size() >= 2);
        REQUIRE_FALSE(r.breakdown.empty());
        const auto chosen = std::find_if(r.breakdown.begin(), r.breakdown.end(), [](auto& x) { return x.chosen; });
        REQUIRE(chosen != r.breakdown.end());
        CHECK(static_cast<std::size_t>(chosen->n) == r.samples.balls.size());
    }
}

TEST_CASE("result JSON: round trip and byte-identical reruns")
{
    Config c = config_for("T.json");
    c.samples_max = 6;
    const std::string doc = oracle::read_text(oracle::corpus_path("T.json"));
    const auto r = run(c, doc);
    const std::string text = result_to_json(r, false);
    const auto back = result_from_json(text);
    REQUIRE(back.samples.balls.size() == r.samples.balls.size());
    for (std::size_t i = 0; i < r.samples.balls.size(); ++i) {
        CHECK(back.samples.balls[i].center.x == round_sig9(r.samples.balls[i].center.x));
        CHECK(back.samples.balls[i].radius == round_sig9(r.samples.balls[i].radius));
    }
    CHECK(back.graph == r.graph);
    CHECK(back.samples.method == r.samples.method);
    CHECK(back.samples.iterations == r.samples.iterations);
    CHECK(back.samples.converged == r.samples.converged);
    REQUIRE(back.breakdown.size() == r.breakdown.size());
    for (std::size_t i = 0; i < r.breakdown.size(); ++i) {
        CHECK(back.breakdown[i].n == r.breakdown[i].n);
        CHECK(back.breakdown[i].chosen == r.breakdown[i].chosen);
        CHECK(back.breakdown[i].total == round_sig9(r.breakdown[i].total));
        CHECK(back.breakdown[i].adjacency_count == r.breakdown[i].adjacency_count);
    }
    CHECK(result_to_json(back, false) == text);
    CHECK(back.timings_ms.empty());
    CHECK(result_from_json(result_to_json(r)).timings_ms.size() == r.timings_ms.size());

    CHECK(result_to_json(run(c, doc), false) == text);
    CHECK_THROWS_AS(result_from_json("{\"samples\": 3}"), ParseError);
    CHECK_THROWS_AS(result_from_json("[1,"), ParseError);
}

TEST_CASE("round_sig9")
{
    CHECK(round_sig9(0.123456789123) == 0.123456789);
    CHECK(round_sig9(123456789123.0) == 123456789000.0);
    CHECK(round_sig9(0.0) == 0.0);
    CHECK(round_sig9(-2.5) == -2.5);
}

TEST_CASE("render_svg: element counts")
{
    const auto shape = testshapes::square(0, 0, 4, 4);
    RunResult one;
    one.samples.balls = {{{2, 2}, 1}};
    one.graph.node_count = 1;
    std::string svg = render_svg(one, shape);
    CHECK(count(svg, "<circle") == 1);
    CHECK(count(svg, "<ellipse") == 1);
    CHECK(count(svg, "<line") == 0);
    CHECK(count(svg, "<svg") == 1);

    RunResult four;
    four.samples.balls = {{{1, 1}, 0.5}, {{3, 1}, 0.5}, {{1, 3}, 0.5}, {{3, 3}, 0.5}};
    four.graph = build_graph(four.samples.balls, GraphPolicy::complete, 0.02);
    svg = render_svg(four, shape);
    CHECK(count(svg, "<circle") == 4);
    CHECK(count(svg, "<ellipse") == 4);
    CHECK(count(svg, "<line") == 6);
    CHECK(count(svg, "#f2c200") == 1); // set once on the circle group

    four.graph = build_graph(four.samples.balls, GraphPolicy::none, 0.02);
    CHECK(count(render_svg(four, shape), "<line") == 0);
}

TEST_CASE("run: errors")
{
    Config c;
    c.format = ShapeFormat::svg_path;
    CHECK_THROWS_AS(run(c, "M0,0 L1,0 Lx"), ParseError);
    CHECK_THROWS_AS(run(c, "M0,0 L1,0 L2,0 Z"), ShapeInvalidError);
    c.method = Method::sec;
    c.samples_max = 100000;
    CHECK_THROWS_AS(run(c, "M0,0 L1,0 L1,1 L0,1 Z"), ConfigError);
    c.xi = -1;
    CHECK_THROWS_AS(run(c, "M0,0 L1,0 L1,1 L0,1 Z"), ConfigError);
}
