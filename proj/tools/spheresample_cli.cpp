// spheresample: approximate a 2D outline with sample circles.
//
// Exit codes: 0 ok, 1 usage/config, 2 input parse error, 3 degenerate or
// invalid shape (including sampling failures).

#include "spheresample/errors.hpp"
#include "spheresample/pipeline.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace spheresample;

namespace {

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw ConfigError("cannot write " + path.string());
}

// Extension wins; otherwise the configured format (which defaults to svg).
ShapeFormat format_for(const fs::path& path, ShapeFormat fallback)
{
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".svg")
        return ShapeFormat::svg_path;
    if (ext == ".json")
        return ShapeFormat::polygon_json;
    return fallback;
}

Weights parse_weights(const std::string& text)
{
    std::vector<double> w;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            w.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ConfigError("--weights: '" + item + "' is not a number");
        }
    }
    if (w.size() != 4)
        throw ConfigError("--weights expects four comma-separated values o,e,a,y");
    return {w[0], w[1], w[2], w[3]};
}

void process(const Config& config, const fs::path& input, const std::string& out_json, const std::string& out_svg)
{
    const std::string doc = read_file(input);
    const ElementShape shape = parse_shape(doc, config.format, {config.flatten_tolerance});
    const RunResult result = run(config, shape);
    const std::string json = result_to_json(result);
    if (out_json.empty() || out_json == "-")
        std::cout << json;
    else
        write_file(out_json, json);
    if (!out_svg.empty())
        write_file(out_svg, render_svg(result, shape));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Approximate a 2D vector shape with a small set of sample circles."};

    std::string input, input_dir, out_dir, config_path, out_json, out_svg;
    std::string format, method, weights, graph, objective;
    double xi = 0, r_min = 0, adj_eps = 0, sat_scale = 0, move_tol = 0, flatten_tol = 0, noise_frac = 0;
    int samples_min = 0, samples_max = 0, boundary = 0, interior = 0, grid = 0, max_iter = 0, threads = 0;
    std::uint64_t seed = 0;
    bool interior_in_clustering = true;

    auto* o_input = app.add_option("--input", input, "Shape file (.svg or .json)");
    auto* o_dir = app.add_option("--input-dir", input_dir, "Process every .svg/.json file in a directory");
    app.add_option("--out-dir", out_dir, "Output directory for --input-dir (NAME.json, NAME.svg)");
    o_input->excludes(o_dir);
    app.add_option("--config", config_path, "JSON config file; command-line flags override it");
    auto* o_format = app.add_option("--format", format, "svg | json (default: from the file extension)")
                         ->check(CLI::IsMember({"svg", "json"}));
    auto* o_method = app.add_option("--method", method, "mat | sec | auto")->check(CLI::IsMember({"mat", "sec", "auto"}));
    auto* o_xi = app.add_option("--xi", xi, "Spacing ratio for mat");
    auto* o_nmin = app.add_option("--samples-min", samples_min, "Smallest sample count scanned by auto");
    auto* o_nmax = app.add_option("--samples-max", samples_max, "Largest count scanned by auto; B for sec");
    auto* o_rmin = app.add_option("--r-min", r_min, "Smallest sample radius (default 4% of bbox diagonal)");
    auto* o_weights = app.add_option("--weights", weights, "Cost weights o,e,a,y (default 1,1,2,1)");
    auto* o_boundary = app.add_option("--boundary-points", boundary, "Boundary sample count (default 400)");
    auto* o_interior = app.add_option("--interior-points", interior, "Interior sample count (default 400)");
    auto* o_iic = app.add_option("--interior-in-clustering", interior_in_clustering,
                                 "Cluster interior points too (default true)");
    auto* o_eps = app.add_option("--adj-eps", adj_eps, "Touching tolerance (default 0.02)");
    auto* o_grid = app.add_option("--grid", grid, "Asymmetry lattice resolution (default 64)");
    auto* o_iter = app.add_option("--max-iter", max_iter, "k-means iteration cap (default 50)");
    auto* o_tol = app.add_option("--move-tol", move_tol, "k-means stop threshold, fraction of bbox diagonal");
    auto* o_seed = app.add_option("--seed", seed, "Seed for the enclosing-circle shuffle");
    auto* o_graph = app.add_option("--graph", graph, "none | complete | touching | touching-connected")
                        ->check(CLI::IsMember({"none", "complete", "touching", "touching-connected"}));
    auto* o_sat = app.add_option("--sat-scale", sat_scale, "Enable scale-axis pruning with this factor (>= 1)");
    auto* o_obj = app.add_option("--objective", objective, "cost | area")->check(CLI::IsMember({"cost", "area"}));
    auto* o_flat = app.add_option("--flatten-tol", flatten_tol, "Bezier tolerance, fraction of bbox diagonal");
    auto* o_noise = app.add_option("--noise-frac", noise_frac, "Drop polar balls below this fraction of the diagonal");
    auto* o_threads = app.add_option("--threads", threads, "OpenMP thread count");
    app.add_option("--out-json", out_json, "Result JSON path (default stdout)");
    app.add_option("--out-svg", out_svg, "Visualization SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (input.empty() && input_dir.empty())
            throw ConfigError("one of --input or --input-dir is required");
        if (!input_dir.empty() && out_dir.empty())
            throw ConfigError("--input-dir needs --out-dir");

        Config config = config_path.empty() ? Config{} : config_from_json(read_file(config_path));
        if (*o_method) config.method = parse_method(method);
        if (*o_xi) config.xi = xi;
        if (*o_nmin) config.samples_min = samples_min;
        if (*o_nmax) config.samples_max = samples_max;
        if (*o_rmin) config.r_min = r_min;
        if (*o_weights) config.weights = parse_weights(weights);
        if (*o_boundary) config.boundary_points = boundary;
        if (*o_interior) config.interior_points = interior;
        if (*o_iic) config.interior_in_clustering = interior_in_clustering;
        if (*o_eps) config.adjacency_eps = adj_eps;
        if (*o_grid) config.asymmetry_grid = grid;
        if (*o_iter) config.max_iter = max_iter;
        if (*o_tol) config.move_tol = move_tol;
        if (*o_seed) config.seed = seed;
        if (*o_graph) config.graph = parse_graph_policy(graph);
        if (*o_sat) config.sat_scale = sat_scale;
        if (*o_obj) config.objective = parse_objective(objective);
        if (*o_flat) config.flatten_tolerance = flatten_tol;
        if (*o_noise) config.noise_radius = noise_frac;
        if (*o_threads) {
            if (threads < 1)
                throw ConfigError("--threads must be at least 1");
            omp_set_num_threads(threads);
        }
        validate(config);

        if (!input.empty()) {
            config.format = *o_format ? parse_shape_format(format) : format_for(input, config.format);
            process(config, input, out_json, out_svg);
            return 0;
        }

        // Batch mode: shapes are independent; the first failure stops the run.
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(input_dir)) {
            const auto ext = entry.path().extension();
            if (entry.is_regular_file() && (ext == ".svg" || ext == ".json"))
                files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        fs::create_directories(out_dir);
        for (const fs::path& f : files) {
            Config c = config;
            c.format = *o_format ? parse_shape_format(format) : format_for(f, config.format);
            const fs::path stem = fs::path(out_dir) / f.stem();
            process(c, f, stem.string() + ".json", stem.string() + ".svg");
            std::cerr << f.filename().string() << ": ok\n";
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "shape error: " << e.what() << '\n';
        return 3;
    }
}
