#pragma once

#include "spheresample/cost_model.hpp"
#include "spheresample/graph.hpp"
#include "spheresample/samples.hpp"
#include "spheresample/shape_io.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spheresample {

enum class Method { mat, sec, automatic };

Method parse_method(std::string_view name);
std::string_view to_string(Method method);
Objective parse_objective(std::string_view name);
std::string_view to_string(Objective objective);

/// Every knob of an end-to-end run. Unset optionals are derived from the shape.
struct Config {
    Method method = Method::automatic;
    ShapeFormat format = ShapeFormat::svg_path;
    double xi = 0.8;
    std::optional<int> samples_min;
    std::optional<int> samples_max;
    std::optional<double> r_min;
    Weights weights;
    int boundary_points = 400;
    int interior_points = 400;
    bool interior_in_clustering = true;
    double adjacency_eps = 0.02;
    int asymmetry_grid = 64;
    int max_iter = 50;
    double move_tol = 1e-4;
    std::uint64_t seed = 1;
    GraphPolicy graph = GraphPolicy::touching_connected;
    std::optional<double> sat_scale;
    Objective objective = Objective::cost;
    double flatten_tolerance = 0.0025; // fraction of bbox diagonal
    double noise_radius = 0.005;       // fraction of bbox diagonal

    friend bool operator==(const Config&, const Config&) = default;
};

/// Throws ConfigError describing the first invalid field.
void validate(const Config& config);

/// Config file form (JSON object; every field written, optionals as null).
std::string config_to_json(const Config& config);
/// Missing keys keep their defaults; unknown keys are rejected.
Config config_from_json(std::string_view text);

struct RunResult {
    SampleSet samples;
    ElementGraph graph;
    std::vector<CostBreakdown> breakdown; // empty unless method = automatic
    std::map<std::string, double> timings_ms;
};

RunResult run(const Config& config, const ElementShape& shape);
RunResult run(const Config& config, std::string_view document);

/// Result JSON; reals carry 9 significant digits. Timings are optional so two
/// runs can be compared byte for byte.
std::string result_to_json(const RunResult& result, bool include_timings = true);
RunResult result_from_json(std::string_view text);

/// Standalone SVG: gray shape, yellow sample circles, black center dots,
/// blue graph edges.
std::string render_svg(const RunResult& result, const ElementShape& shape);

/// Rounds to 9 significant digits (the precision written to result JSON).
double round_sig9(double v);

} // namespace spheresample
