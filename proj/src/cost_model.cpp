#include "spheresample/cost_model.hpp"

#include "spheresample/errors.hpp"
#include "spheresample/kernels.hpp"
#include "spheresample/shape_io.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>

namespace spheresample {

namespace {

double total_ball_area(std::span<const Circle> balls)
{
    double total = 0.0;
    for (const Circle& c : balls)
        total += c.area();
    return total;
}

void check_weights(const Weights& w)
{
    for (double v : {w.overlap, w.exterior, w.adjacency, w.asymmetry}) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ConfigError("weights must be finite and non-negative");
    }
}

} // namespace

CountRange resolve_count_range(const ElementShape& shape, std::optional<int> n_min, std::optional<int> n_max,
                               std::optional<double> r_min)
{
    CountRange range;
    range.r_min = r_min.value_or(0.04 * shape.bbox.diagonal());
    if (!(range.r_min > 0.0) || !std::isfinite(range.r_min))
        throw ConfigError("r_min must be positive");
    range.n_min = n_min.value_or(1);
    if (range.n_min < 1)
        throw ConfigError("samples-min must be at least 1");
    if (n_max) {
        range.n_max = *n_max;
    } else {
        const double cap = std::floor(shape.area / (std::numbers::pi * range.r_min * range.r_min));
        range.n_max = static_cast<int>(std::min(cap, 1e6));
    }
    return range;
}

double measure_overlap(std::span<const Circle> balls)
{
    const double total = total_ball_area(balls);
    if (!(total > 0.0))
        return 0.0;
    double overlap = 0.0;
    for (double row : kernels::lens_row_sums(balls))
        overlap += row;
    return std::min(1.0, overlap / total);
}

double measure_exterior(std::span<const Circle> balls, std::span<const Triangle> tris)
{
    const double total = total_ball_area(balls);
    if (!(total > 0.0))
        return 0.0;
    const auto inside = kernels::shape_intersection_areas(balls, tris);
    double outside = 0.0;
    for (std::size_t i = 0; i < balls.size(); ++i)
        outside += std::max(0.0, balls[i].area() - inside[i]);
    return std::clamp(outside / total, 0.0, 1.0);
}

double measure_exterior(std::span<const Circle> balls, const ElementShape& shape)
{
    const auto tris = triangulate(shape);
    return measure_exterior(balls, tris);
}

Adjacency measure_adjacency(std::span<const Circle> balls, double eps)
{
    const std::size_t n = balls.size();
    if (n < 2)
        throw DomainError("measure_adjacency: needs at least 2 samples");
    int pairs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (distance(balls[i].center, balls[j].center) <= (1.0 + eps) * (balls[i].radius + balls[j].radius))
                ++pairs;
        }
    }
    Adjacency out;
    out.count = 2 * pairs;
    const double desired = 2.0 * static_cast<double>(n - 1);
    const double practical_max = 3.0 * static_cast<double>(n - 1);
    out.measure = std::clamp(std::abs(out.count - desired) / practical_max, 0.0, 1.0);
    return out;
}

double measure_asymmetry(std::span<const Circle> balls, const ElementShape& shape, int grid)
{
    if (grid < 8)
        throw DomainError("measure_asymmetry: grid must be at least 8");
    if (balls.empty())
        return 0.0;
    double sum = 0.0;
    for (const auto& q : kernels::quadrant_counts(balls, shape, grid)) {
        if (q.per_quadrant == 0)
            continue;
        const double p1 = static_cast<double>(q.inside[0]);
        const double p2 = static_cast<double>(q.inside[1]);
        const double p3 = static_cast<double>(q.inside[2]);
        const double p4 = static_cast<double>(q.inside[3]);
        const double m = (0.5 * std::abs(p1 - p3) + 0.5 * std::abs(p2 - p4)) / static_cast<double>(q.per_quadrant);
        sum += std::clamp(m, 0.0, 1.0);
    }
    return sum / static_cast<double>(balls.size());
}

double total_cost(const CostBreakdown& row, const Weights& w)
{
    const Measures& m = row.normalized;
    double c = w.overlap * m.overlap + w.exterior * m.exterior + w.asymmetry * m.asymmetry;
    if (row.n != 2)
        c += w.adjacency * m.adjacency;
    return c;
}

std::vector<CostBreakdown> band_normalize(std::vector<CostBreakdown> series, const Weights& w)
{
    if (series.empty())
        throw DomainError("band_normalize: empty series");
    const double count = static_cast<double>(series.size());
    auto normalize = [&](double Measures::*field) {
        double sum = 0.0;
        for (const CostBreakdown& row : series)
            sum += row.raw.*field;
        const double mean = sum / count;
        for (CostBreakdown& row : series)
            row.normalized.*field = mean > 0.0 ? row.raw.*field / mean : 0.0;
    };
    normalize(&Measures::overlap);
    normalize(&Measures::exterior);
    normalize(&Measures::adjacency);
    normalize(&Measures::asymmetry);
    for (CostBreakdown& row : series)
        row.total = total_cost(row, w);
    return series;
}

std::size_t select_optimal(std::span<const CostBreakdown> series, Objective objective)
{
    if (series.empty())
        throw DomainError("select_optimal: empty series");
    auto key = [objective](const CostBreakdown& r) { return objective == Objective::cost ? r.total : r.ball_area; };
    std::size_t best = 0;
    for (std::size_t i = 1; i < series.size(); ++i) {
        const double a = key(series[i]);
        const double b = key(series[best]);
        if (a < b || (a == b && series[i].n < series[best].n))
            best = i;
    }
    return best;
}

CostBreakdown evaluate_measures(std::span<const Circle> balls, const ElementShape& shape,
                                std::span<const Triangle> tris, const ScanOptions& options)
{
    CostBreakdown row;
    row.n = static_cast<int>(balls.size());
    row.raw.overlap = measure_overlap(balls);
    row.raw.exterior = measure_exterior(balls, tris);
    if (balls.size() >= 2) {
        const Adjacency adj = measure_adjacency(balls, options.adjacency_eps);
        row.raw.adjacency = adj.measure;
        row.adjacency_count = adj.count;
    }
    row.raw.asymmetry = measure_asymmetry(balls, shape, options.asymmetry_grid);
    row.ball_area = total_ball_area(balls);
    return row;
}

CountSelection optimize_sample_count(const ElementShape& shape, const CountRange& range, const Weights& w,
                                     const ScanOptions& options)
{
    check_weights(w);
    if (!(range.r_min > 0.0))
        throw ConfigError("r_min must be positive");

    const std::vector<PointSample> boundary = sample_boundary(shape, options.boundary_count);
    CountSelection out;
    out.samples.method = "auto";
    out.samples.parameters["r_min"] = range.r_min;

    // An explicit samples-min above 1 opts out of the single-circle fallback.
    if (range.n_min <= 1 && shape.area < std::numbers::pi * range.r_min * range.r_min) {
        const auto pts = positions(boundary);
        out.samples.balls = {smallest_enclosing_circle(pts, options.kmeans.seed)};
        out.samples.parameters["samples"] = 1.0;
        out.tight_fit = true;
        return out;
    }

    if (range.n_min < 1)
        throw ConfigError("samples-min must be at least 1");
    if (range.n_min > range.n_max)
        throw ConfigError("sample count range is empty: samples-min = " + std::to_string(range.n_min) +
                          " > samples-max = " + std::to_string(range.n_max));

    std::vector<Point2> points = positions(boundary);
    if (options.interior_in_clustering) {
        const auto interior = positions(sample_interior(shape, options.interior_count));
        points.insert(points.end(), interior.begin(), interior.end());
    }
    if (static_cast<std::size_t>(range.n_max) > points.size())
        throw ConfigError("samples-max = " + std::to_string(range.n_max) + " exceeds the " +
                          std::to_string(points.size()) + " clustering points");

    const auto tris = triangulate(shape);
    const int runs = range.n_max - range.n_min + 1;
    std::vector<ClusterState> states(static_cast<std::size_t>(runs));
    std::vector<CostBreakdown> rows(static_cast<std::size_t>(runs));
    std::exception_ptr failure;

    // Each count is an independent deterministic run; band normalization
    // below is the sequential barrier.
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < runs; ++k) {
        try {
            states[k] = kmeans_sec(points, range.n_min + k, options.kmeans);
            rows[k] = evaluate_measures(states[k].balls, shape, tris, options);
        } catch (...) {
#pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    out.breakdown = band_normalize(std::move(rows), w);
    const std::size_t best = select_optimal(out.breakdown, options.objective);
    out.breakdown[best].chosen = true;

    const ClusterState& chosen = states[best];
    out.samples.balls = chosen.balls;
    out.samples.iterations = chosen.iteration;
    out.samples.converged = chosen.converged;
    out.samples.parameters["samples"] = static_cast<double>(chosen.balls.size());
    out.samples.parameters["samples_min"] = range.n_min;
    out.samples.parameters["samples_max"] = range.n_max;
    return out;
}

} // namespace spheresample
