#pragma once

#include <vector>

#include "sfnet/graph.hpp"
#include "sfnet/rng.hpp"

namespace sfnet::testutil {

// G(n, p)
inline SimpleGraph random_graph(VertexId n, double p, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.next_open01() < p) edges.emplace_back(u, v);
    return SimpleGraph(n, std::move(edges));
}

inline SimpleGraph complete_graph(VertexId n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return SimpleGraph(n, std::move(edges));
}

inline SimpleGraph cycle_graph(VertexId n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return SimpleGraph(n, std::move(edges));
}

inline std::vector<std::uint64_t> degrees_of(const SimpleGraph& g) {
    std::vector<std::uint64_t> d(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) d[v] = g.degree(v);
    return d;
}

} // namespace sfnet::testutil
