#pragma once

#include "spheresample/geometry.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace spheresample {

enum class GraphPolicy { none, complete, touching, touching_connected };

GraphPolicy parse_graph_policy(std::string_view name);
std::string_view to_string(GraphPolicy policy);

/// Undirected graph over sample indices. Edges are stored once as (i, j)
/// with i < j, sorted lexicographically.
struct ElementGraph {
    std::size_t node_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t component_count() const;

    friend bool operator==(const ElementGraph&, const ElementGraph&) = default;
};

/// complete: every pair. touching: |c_i - c_j| <= (1+eps)(r_i + r_j).
/// touching_connected: touching edges, then shortest center-distance edges
/// (Kruskal) between components until the graph is connected.
ElementGraph build_graph(std::span<const Circle> balls, GraphPolicy policy, double eps);

} // namespace spheresample
