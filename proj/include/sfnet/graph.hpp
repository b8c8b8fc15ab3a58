#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sfnet {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Undirected simple graph over vertices 0..n-1. Construction normalizes each
// edge to u < v, sorts the edge list, and rejects loops, parallel edges and
// out-of-range endpoints. Adjacency is compressed sparse with per-vertex
// neighbor arrays kept sorted, so membership is a binary search. Immutable
// after construction.
class SimpleGraph {
public:
    SimpleGraph(VertexId n, std::vector<Edge> edges);

    VertexId num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    std::uint64_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_edge(VertexId u, VertexId v) const;

    // normalized (u < v), sorted
    const std::vector<Edge>& edges() const { return edges_; }

    std::uint64_t max_degree() const;

private:
    VertexId n_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> adj_;
};

} // namespace sfnet
