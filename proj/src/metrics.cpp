#include "sfnet/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sfnet {

using u128 = unsigned __int128;

std::uint64_t count_wedges(const SimpleGraph& g) {
    u128 total = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const u128 d = g.degree(v);
        total += d * (d - 1) / 2;
    }
    assert(total <= u128(~0ULL));
    return static_cast<std::uint64_t>(total);
}

std::uint64_t count_triangles(const SimpleGraph& g,
                              std::vector<std::uint64_t>* per_vertex) {
    const VertexId n = g.num_vertices();
    if (per_vertex) per_vertex->assign(n, 0);

    // rank by (degree, id); orient every edge toward the higher rank
    auto rank_less = [&](VertexId a, VertexId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    };
    std::vector<std::vector<VertexId>> out(n);
    for (const auto& [u, v] : g.edges()) {
        if (rank_less(u, v))
            out[u].push_back(v);
        else
            out[v].push_back(u);
    }
    for (auto& nb : out) std::sort(nb.begin(), nb.end());

    std::uint64_t total = 0;
    for (const auto& [eu, ev] : g.edges()) {
        const VertexId u = rank_less(eu, ev) ? eu : ev;
        const VertexId v = rank_less(eu, ev) ? ev : eu;
        auto a = out[u].begin(), ae = out[u].end();
        auto b = out[v].begin(), be = out[v].end();
        while (a != ae && b != be) {
            if (*a < *b) {
                ++a;
            } else if (*b < *a) {
                ++b;
            } else {
                ++total;
                if (per_vertex) {
                    ++(*per_vertex)[u];
                    ++(*per_vertex)[v];
                    ++(*per_vertex)[*a];
                }
                ++a;
                ++b;
            }
        }
    }
    return total;
}

std::uint64_t count_triangles(const SimpleGraph& g) {
    return count_triangles(g, nullptr);
}

std::uint64_t count_triangles_brute(const SimpleGraph& g) {
    const VertexId n = g.num_vertices();
    if (n > 500)
        throw std::invalid_argument("count_triangles_brute: n > 500");
    std::uint64_t total = 0;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            for (VertexId w = v + 1; w < n; ++w)
                if (g.has_edge(u, w) && g.has_edge(v, w)) ++total;
        }
    return total;
}

double global_clustering(const SimpleGraph& g) {
    const std::uint64_t wedges = count_wedges(g);
    if (wedges == 0) return 0.0;
    return 3.0 * static_cast<double>(count_triangles(g)) /
           static_cast<double>(wedges);
}

double average_local_clustering(const SimpleGraph& g) {
    const VertexId n = g.num_vertices();
    if (n == 0) return 0.0;
    std::vector<std::uint64_t> per_vertex;
    count_triangles(g, &per_vertex);
    double sum = 0.0;
    for (VertexId v = 0; v < n; ++v) {
        const std::uint64_t d = g.degree(v);
        if (d <= 1) continue; // no neighbor pairs, C(i) := 0
        sum += static_cast<double>(per_vertex[v]) /
               (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
    }
    return sum / static_cast<double>(n);
}

std::uint64_t degree_h_index(const DegreeSequence& seq) {
    DegreeSequence d(seq);
    std::sort(d.begin(), d.end(), std::greater<>());
    std::uint64_t h = 0;
    for (std::size_t k = 1; k <= d.size(); ++k)
        if (d[k - 1] >= k)
            h = k;
        else
            break;
    return h;
}

GraphMetrics compute_metrics(const SimpleGraph& g) {
    GraphMetrics m;
    m.edges = g.num_edges();
    m.wedges = count_wedges(g);
    m.max_degree = g.max_degree();

    std::vector<std::uint64_t> per_vertex;
    m.triangles = count_triangles(g, &per_vertex);
    m.c1 = m.wedges == 0
               ? 0.0
               : 3.0 * static_cast<double>(m.triangles) / static_cast<double>(m.wedges);

    double sum = 0.0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const std::uint64_t d = g.degree(v);
        if (d <= 1) continue;
        sum += static_cast<double>(per_vertex[v]) /
               (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
    }
    m.c2 = g.num_vertices() == 0 ? 0.0 : sum / static_cast<double>(g.num_vertices());
    return m;
}

} // namespace sfnet
