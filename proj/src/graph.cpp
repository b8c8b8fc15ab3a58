#include "sfnet/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfnet {

SimpleGraph::SimpleGraph(VertexId n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("SimpleGraph: self-loop");
        if (u > v) std::swap(u, v);
        if (v >= n_) throw std::invalid_argument("SimpleGraph: vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("SimpleGraph: parallel edge");

    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 1; i <= n_; ++i) offsets_[i] += offsets_[i - 1];

    adj_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
    for (VertexId v = 0; v < n_; ++v)
        std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t SimpleGraph::max_degree() const {
    std::uint64_t best = 0;
    for (VertexId v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

} // namespace sfnet
