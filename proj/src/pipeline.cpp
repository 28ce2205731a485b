#include "spheresample/pipeline.hpp"

#include "spheresample/errors.hpp"
#include "spheresample/medial.hpp"
#include "spheresample/sec_sampler.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>

namespace spheresample {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string_view format_name(ShapeFormat f) { return f == ShapeFormat::svg_path ? "svg" : "json"; }

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw ConfigError(message);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

class Stopwatch {
public:
    double lap()
    {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::vector<Point2> clustering_points(const Config& config, const ElementShape& shape)
{
    std::vector<Point2> pts = positions(sample_boundary(shape, config.boundary_points));
    if (config.interior_in_clustering) {
        const auto interior = positions(sample_interior(shape, config.interior_points));
        pts.insert(pts.end(), interior.begin(), interior.end());
    }
    return pts;
}

ScanOptions scan_options(const Config& config)
{
    ScanOptions o;
    o.boundary_count = config.boundary_points;
    o.interior_count = config.interior_points;
    o.interior_in_clustering = config.interior_in_clustering;
    o.adjacency_eps = config.adjacency_eps;
    o.asymmetry_grid = config.asymmetry_grid;
    o.kmeans = {config.max_iter, config.move_tol, config.seed};
    o.objective = config.objective;
    return o;
}

ordered_json measures_json(const Measures& m)
{
    return {{"overlap", round_sig9(m.overlap)},
            {"exterior", round_sig9(m.exterior)},
            {"adjacency", round_sig9(m.adjacency)},
            {"asymmetry", round_sig9(m.asymmetry)}};
}

Measures measures_from(const ordered_json& j)
{
    return {j.at("overlap").get<double>(), j.at("exterior").get<double>(), j.at("adjacency").get<double>(),
            j.at("asymmetry").get<double>()};
}

} // namespace

Method parse_method(std::string_view name)
{
    if (name == "mat")
        return Method::mat;
    if (name == "sec")
        return Method::sec;
    if (name == "auto")
        return Method::automatic;
    throw ConfigError("unknown method '" + std::string(name) + "' (expected mat, sec or auto)");
}

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::mat: return "mat";
    case Method::sec: return "sec";
    case Method::automatic: return "auto";
    }
    return "auto";
}

Objective parse_objective(std::string_view name)
{
    if (name == "cost")
        return Objective::cost;
    if (name == "area")
        return Objective::area;
    throw ConfigError("unknown objective '" + std::string(name) + "' (expected cost or area)");
}

std::string_view to_string(Objective objective) { return objective == Objective::cost ? "cost" : "area"; }

double round_sig9(double v)
{
    if (v == 0.0 || !std::isfinite(v))
        return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::strtod(buf, nullptr);
}

void validate(const Config& c)
{
    require(finite_nonneg(c.xi), "xi must be finite and >= 0");
    require(!c.samples_min || *c.samples_min >= 1, "samples-min must be at least 1");
    require(!c.samples_max || *c.samples_max >= 1, "samples-max must be at least 1");
    require(!c.samples_min || !c.samples_max || *c.samples_min <= *c.samples_max,
            "samples-min (" + std::to_string(c.samples_min.value_or(0)) + ") exceeds samples-max (" +
                std::to_string(c.samples_max.value_or(0)) + ")");
    require(!c.r_min || (std::isfinite(*c.r_min) && *c.r_min > 0.0), "r-min must be positive");
    for (double w : {c.weights.overlap, c.weights.exterior, c.weights.adjacency, c.weights.asymmetry})
        require(finite_nonneg(w), "weights must be finite and >= 0");
    require(c.boundary_points >= 16, "boundary-points must be at least 16");
    require(c.interior_points >= 0, "interior-points must be >= 0");
    require(finite_nonneg(c.adjacency_eps), "adj-eps must be finite and >= 0");
    require(c.asymmetry_grid >= 8, "grid must be at least 8");
    require(c.max_iter >= 1, "max-iter must be at least 1");
    require(std::isfinite(c.move_tol) && c.move_tol > 0.0, "move-tol must be positive");
    require(!c.sat_scale || (std::isfinite(*c.sat_scale) && *c.sat_scale >= 1.0), "sat-scale must be >= 1");
    require(std::isfinite(c.flatten_tolerance) && c.flatten_tolerance > 0.0, "flatten tolerance must be positive");
    require(c.noise_radius >= 0.0 && c.noise_radius < 1.0, "noise radius fraction must be in [0, 1)");
}

std::string config_to_json(const Config& c)
{
    auto opt = [](const auto& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
    ordered_json j;
    j["method"] = to_string(c.method);
    j["format"] = format_name(c.format);
    j["xi"] = c.xi;
    j["samples_min"] = opt(c.samples_min);
    j["samples_max"] = opt(c.samples_max);
    j["r_min"] = opt(c.r_min);
    j["weights"] = {c.weights.overlap, c.weights.exterior, c.weights.adjacency, c.weights.asymmetry};
    j["boundary_points"] = c.boundary_points;
    j["interior_points"] = c.interior_points;
    j["interior_in_clustering"] = c.interior_in_clustering;
    j["adjacency_eps"] = c.adjacency_eps;
    j["asymmetry_grid"] = c.asymmetry_grid;
    j["max_iter"] = c.max_iter;
    j["move_tol"] = c.move_tol;
    j["seed"] = c.seed;
    j["graph"] = to_string(c.graph);
    j["sat_scale"] = opt(c.sat_scale);
    j["objective"] = to_string(c.objective);
    j["flatten_tolerance"] = c.flatten_tolerance;
    j["noise_radius"] = c.noise_radius;
    return j.dump(2) + "\n";
}

Config config_from_json(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!j.is_object())
        throw ConfigError("config: top level must be an object");

    static const std::set<std::string> known = {
        "method",         "format",          "xi",          "samples_min", "samples_max",       "r_min",
        "weights",        "boundary_points", "interior_points", "interior_in_clustering", "adjacency_eps",
        "asymmetry_grid", "max_iter",        "move_tol",    "seed",        "graph",             "sat_scale",
        "objective",      "flatten_tolerance", "noise_radius"};
    Config c;
    try {
        for (const auto& [key, v] : j.items()) {
            if (!known.count(key))
                throw ConfigError("config: unknown key '" + key + "'");
            if (key == "method")
                c.method = parse_method(v.get<std::string>());
            else if (key == "format")
                c.format = parse_shape_format(v.get<std::string>());
            else if (key == "xi")
                c.xi = v.get<double>();
            else if (key == "samples_min")
                c.samples_min = v.is_null() ? std::nullopt : std::optional<int>(v.get<int>());
            else if (key == "samples_max")
                c.samples_max = v.is_null() ? std::nullopt : std::optional<int>(v.get<int>());
            else if (key == "r_min")
                c.r_min = v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
            else if (key == "weights") {
                const auto w = v.get<std::vector<double>>();
                if (w.size() != 4)
                    throw ConfigError("config: weights needs 4 values (overlap, exterior, adjacency, asymmetry)");
                c.weights = {w[0], w[1], w[2], w[3]};
            } else if (key == "boundary_points")
                c.boundary_points = v.get<int>();
            else if (key == "interior_points")
                c.interior_points = v.get<int>();
            else if (key == "interior_in_clustering")
                c.interior_in_clustering = v.get<bool>();
            else if (key == "adjacency_eps")
                c.adjacency_eps = v.get<double>();
            else if (key == "asymmetry_grid")
                c.asymmetry_grid = v.get<int>();
            else if (key == "max_iter")
                c.max_iter = v.get<int>();
            else if (key == "move_tol")
                c.move_tol = v.get<double>();
            else if (key == "seed")
                c.seed = v.get<std::uint64_t>();
            else if (key == "graph")
                c.graph = parse_graph_policy(v.get<std::string>());
            else if (key == "sat_scale")
                c.sat_scale = v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
            else if (key == "objective")
                c.objective = parse_objective(v.get<std::string>());
            else if (key == "flatten_tolerance")
                c.flatten_tolerance = v.get<double>();
            else if (key == "noise_radius")
                c.noise_radius = v.get<double>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: wrong value type: ") + e.what());
    }
    return c;
}

RunResult run(const Config& config, const ElementShape& shape)
{
    validate(config);
    RunResult out;
    Stopwatch clock;

    switch (config.method) {
    case Method::mat: {
        auto balls = compute_polar_balls(shape, config.boundary_points, config.noise_radius);
        if (config.sat_scale)
            balls = scale_axis_prune(balls, *config.sat_scale);
        out.samples = select_touching_polar_balls(balls, config.xi);
        if (config.sat_scale)
            out.samples.parameters["sat_scale"] = *config.sat_scale;
        break;
    }
    case Method::sec: {
        const CountRange range = resolve_count_range(shape, config.samples_min, config.samples_max, config.r_min);
        const auto pts = clustering_points(config, shape);
        if (range.n_max < 1)
            throw ConfigError("sample count resolves to " + std::to_string(range.n_max) +
                              "; pass --samples-max or a smaller --r-min");
        if (static_cast<std::size_t>(range.n_max) > pts.size())
            throw ConfigError("samples-max = " + std::to_string(range.n_max) + " exceeds the " +
                              std::to_string(pts.size()) + " clustering points");
        const ClusterState state = kmeans_sec(pts, range.n_max, {config.max_iter, config.move_tol, config.seed});
        out.samples = to_sample_set(state);
        out.samples.parameters["samples"] = range.n_max;
        break;
    }
    case Method::automatic: {
        const CountRange range = resolve_count_range(shape, config.samples_min, config.samples_max, config.r_min);
        CountSelection sel = optimize_sample_count(shape, range, config.weights, scan_options(config));
        out.samples = std::move(sel.samples);
        out.breakdown = std::move(sel.breakdown);
        break;
    }
    }
    out.timings_ms["sample"] = clock.lap();

    if (out.samples.balls.empty())
        throw GenerationError("sampling produced no circles");
    out.graph = build_graph(out.samples.balls, config.graph, config.adjacency_eps);
    out.timings_ms["graph"] = clock.lap();
    return out;
}

RunResult run(const Config& config, std::string_view document)
{
    validate(config);
    Stopwatch clock;
    const ElementShape shape = parse_shape(document, config.format, {config.flatten_tolerance});
    const double parse_ms = clock.lap();
    RunResult out = run(config, shape);
    out.timings_ms["parse"] = parse_ms;
    return out;
}

std::string result_to_json(const RunResult& r, bool include_timings)
{
    ordered_json j;
    j["method"] = r.samples.method;
    j["chosen_n"] = r.samples.balls.size();
    auto samples = ordered_json::array();
    for (const Circle& c : r.samples.balls)
        samples.push_back({{"cx", round_sig9(c.center.x)}, {"cy", round_sig9(c.center.y)}, {"r", round_sig9(c.radius)}});
    j["samples"] = std::move(samples);
    auto edges = ordered_json::array();
    for (const auto& [a, b] : r.graph.edges)
        edges.push_back({a, b});
    j["edges"] = std::move(edges);
    j["iterations"] = r.samples.iterations;
    j["converged"] = r.samples.converged;
    auto params = ordered_json::object();
    for (const auto& [k, v] : r.samples.parameters)
        params[k] = round_sig9(v);
    j["parameters"] = std::move(params);
    auto rows = ordered_json::array();
    for (const CostBreakdown& row : r.breakdown) {
        rows.push_back({{"n", row.n},
                        {"raw", measures_json(row.raw)},
                        {"normalized", measures_json(row.normalized)},
                        {"total", round_sig9(row.total)},
                        {"adjacency_count", row.adjacency_count},
                        {"ball_area", round_sig9(row.ball_area)},
                        {"chosen", row.chosen}});
    }
    j["breakdown"] = std::move(rows);
    if (include_timings) {
        auto t = ordered_json::object();
        for (const auto& [k, v] : r.timings_ms)
            t[k] = round_sig9(v);
        j["timings_ms"] = std::move(t);
    }
    return j.dump(2) + "\n";
}

RunResult result_from_json(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("result: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    RunResult r;
    try {
        r.samples.method = j.at("method").get<std::string>();
        for (const auto& s : j.at("samples"))
            r.samples.balls.push_back({{s.at("cx").get<double>(), s.at("cy").get<double>()}, s.at("r").get<double>()});
        r.graph.node_count = r.samples.balls.size();
        for (const auto& e : j.at("edges"))
            r.graph.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        r.samples.iterations = j.at("iterations").get<int>();
        r.samples.converged = j.at("converged").get<bool>();
        for (const auto& [k, v] : j.at("parameters").items())
            r.samples.parameters[k] = v.get<double>();
        for (const auto& row : j.at("breakdown")) {
            CostBreakdown b;
            b.n = row.at("n").get<int>();
            b.raw = measures_from(row.at("raw"));
            b.normalized = measures_from(row.at("normalized"));
            b.total = row.at("total").get<double>();
            b.adjacency_count = row.at("adjacency_count").get<int>();
            b.ball_area = row.at("ball_area").get<double>();
            b.chosen = row.at("chosen").get<bool>();
            r.breakdown.push_back(b);
        }
        if (j.contains("timings_ms")) {
            for (const auto& [k, v] : j.at("timings_ms").items())
                r.timings_ms[k] = v.get<double>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("result: ") + e.what(), ParseError::npos);
    }
    return r;
}

} // namespace spheresample
