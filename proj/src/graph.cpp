#include "spheresample/graph.hpp"

#include "spheresample/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace spheresample {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

GraphPolicy parse_graph_policy(std::string_view name)
{
    if (name == "none")
        return GraphPolicy::none;
    if (name == "complete")
        return GraphPolicy::complete;
    if (name == "touching")
        return GraphPolicy::touching;
    if (name == "touching-connected")
        return GraphPolicy::touching_connected;
    throw ConfigError("unknown graph policy '" + std::string(name) + "'");
}

std::string_view to_string(GraphPolicy policy)
{
    switch (policy) {
    case GraphPolicy::none:
        return "none";
    case GraphPolicy::complete:
        return "complete";
    case GraphPolicy::touching:
        return "touching";
    case GraphPolicy::touching_connected:
        return "touching-connected";
    }
    return "none";
}

std::size_t ElementGraph::component_count() const
{
    DisjointSets sets(node_count);
    std::size_t components = node_count;
    for (const auto& [i, j] : edges) {
        if (sets.unite(i, j))
            --components;
    }
    return components;
}

ElementGraph build_graph(std::span<const Circle> balls, GraphPolicy policy, double eps)
{
    ElementGraph g;
    g.node_count = balls.size();
    const std::size_t n = balls.size();
    if (policy == GraphPolicy::none)
        return g;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool touching =
                distance(balls[i].center, balls[j].center) <= (1.0 + eps) * (balls[i].radius + balls[j].radius);
            if (policy == GraphPolicy::complete || touching)
                g.edges.emplace_back(i, j);
        }
    }
    if (policy != GraphPolicy::touching_connected)
        return g;

    DisjointSets sets(n);
    for (const auto& [i, j] : g.edges)
        sets.unite(i, j);

    std::vector<std::tuple<double, std::size_t, std::size_t>> candidates;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (sets.find(i) != sets.find(j))
                candidates.emplace_back(distance(balls[i].center, balls[j].center), i, j);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [d, i, j] : candidates) {
        if (sets.unite(i, j))
            g.edges.emplace_back(i, j);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

} // namespace spheresample
