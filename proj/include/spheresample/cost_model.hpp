#pragma once

#include "spheresample/geometry.hpp"
#include "spheresample/samples.hpp"
#include "spheresample/sec_sampler.hpp"
#include "spheresample/shape.hpp"

#include <optional>
#include <span>
#include <vector>

namespace spheresample {

/// Relative importance of the four measures in C = w_o·M_o + w_e·M_e + w_a·M_a + w_y·M_y.
/// Adjacency is weighted highest because its values run lower than the others.
struct Weights {
    double overlap = 1.0;
    double exterior = 1.0;
    double adjacency = 2.0;
    double asymmetry = 1.0;

    friend bool operator==(const Weights&, const Weights&) = default;
};

struct Measures {
    double overlap = 0.0;
    double exterior = 0.0;
    double adjacency = 0.0;
    double asymmetry = 0.0;

    friend bool operator==(const Measures&, const Measures&) = default;
};

/// One row of the sample-count scan.
struct CostBreakdown {
    int n = 0;
    Measures raw;
    Measures normalized;
    double total = 0.0;
    int adjacency_count = 0; // A, counted from both sides
    double ball_area = 0.0;  // Σ πr², for the area objective
    bool chosen = false;

    friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

struct CountRange {
    int n_min = 1;
    int n_max = 1;
    double r_min = 0.0;
};

enum class Objective { cost, area };

struct ScanOptions {
    int boundary_count = 400;
    int interior_count = 400;
    bool interior_in_clustering = true;
    double adjacency_eps = 0.02;
    int asymmetry_grid = 64;
    KMeansOptions kmeans;
    Objective objective = Objective::cost;
};

struct CountSelection {
    SampleSet samples;
    std::vector<CostBreakdown> breakdown; // empty for the tight-fit case
    bool tight_fit = false;
};

/// Fills in defaults: r_min = 4% of the bbox diagonal, n_min = 1,
/// n_max = floor(D_A / (π r_min²)).
CountRange resolve_count_range(const ElementShape& shape, std::optional<int> n_min, std::optional<int> n_max,
                               std::optional<double> r_min);

/// Pairwise overlap (each lens counted once per ball) over total ball area,
/// clamped to 1. Zero total area gives 0.
double measure_overlap(std::span<const Circle> balls);

/// Fraction of total ball area lying outside the shape.
double measure_exterior(std::span<const Circle> balls, std::span<const Triangle> tris);
double measure_exterior(std::span<const Circle> balls, const ElementShape& shape);

struct Adjacency {
    double measure = 0.0;
    int count = 0;
};

/// A = 2·#{pairs with |c_i - c_j| <= (1+eps)(r_i + r_j)};
/// M_a = |A - 2(N-1)| / (3(N-1)) clamped to [0, 1]. Needs N >= 2.
Adjacency measure_adjacency(std::span<const Circle> balls, double eps);

/// Mean over balls of (0.5|p1 - p3| + 0.5|p2 - p4|) / Q on a grid×grid lattice.
double measure_asymmetry(std::span<const Circle> balls, const ElementShape& shape, int grid);

/// Divides every measure by its mean over the series (mean 0 leaves zeros)
/// and recomputes totals.
std::vector<CostBreakdown> band_normalize(std::vector<CostBreakdown> series, const Weights& w);

/// Weighted sum of the normalized measures; the adjacency term is dropped
/// when N = 2.
double total_cost(const CostBreakdown& row, const Weights& w);

/// Index of the best row under the objective; ties go to the smaller N.
std::size_t select_optimal(std::span<const CostBreakdown> series, Objective objective);

/// Linear scan over [n_min, n_max] with k-means SEC at each count, band
/// normalization across the scan, and argmin selection. When n_min <= 1,
/// shapes smaller than one r_min ball get a single tight-fitting circle instead.
CountSelection optimize_sample_count(const ElementShape& shape, const CountRange& range, const Weights& w,
                                     const ScanOptions& options);

/// Raw measures for one ball set (the N = 1 case reports zero adjacency).
CostBreakdown evaluate_measures(std::span<const Circle> balls, const ElementShape& shape,
                                std::span<const Triangle> tris, const ScanOptions& options);

} // namespace spheresample
