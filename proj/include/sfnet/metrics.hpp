#pragma once

#include "sfnet/degree_model.hpp"
#include "sfnet/graph.hpp"

namespace sfnet {

struct GraphMetrics {
    std::uint64_t edges = 0;
    std::uint64_t wedges = 0;    // P2 = sum_v d(v)(d(v)-1)/2
    std::uint64_t triangles = 0;
    double c1 = 0.0;             // 3T / P2, 0 when P2 = 0
    double c2 = 0.0;             // mean of per-vertex clustering, 0 for deg <= 1
    std::uint64_t max_degree = 0;
};

std::uint64_t count_wedges(const SimpleGraph& g);

// Exact triangle count by degree-ordered orientation: each edge points from
// lower to higher (degree, id) rank, triangles found by merging sorted
// out-neighbor lists. Suits hub-heavy graphs where wedges concentrate.
std::uint64_t count_triangles(const SimpleGraph& g);

// Same count plus triangles-per-vertex (sums to 3T); one pass used by
// compute_metrics for the local clustering average.
std::uint64_t count_triangles(const SimpleGraph& g,
                              std::vector<std::uint64_t>* per_vertex);

// O(n^3) triple-loop oracle; refuses n > 500
std::uint64_t count_triangles_brute(const SimpleGraph& g);

double global_clustering(const SimpleGraph& g);
double average_local_clustering(const SimpleGraph& g);

// largest k with d_k >= k on the non-increasingly sorted sequence
std::uint64_t degree_h_index(const DegreeSequence& seq);

GraphMetrics compute_metrics(const SimpleGraph& g);

} // namespace sfnet
