#pragma once

#include <cstdint>
#include <vector>

#include "sfnet/degree_model.hpp"

namespace sfnet {

struct ScalingConfig {
    double gamma = 1.5;
    std::uint64_t d_min = 1;
    std::vector<std::uint64_t> n_grid; // strictly increasing, >= 3 sizes
    std::uint32_t replicas = 20;
    std::uint64_t master_seed = 1;
    unsigned threads = 1;
};

struct SlopeFit {
    double slope = 0.0;
    double std_error = 0.0;
};

// Per-size aggregates. Means and standard deviations run over exactly the
// replicas whose degree sequence was graphic; replicas_used says how many.
struct SizeStats {
    std::uint64_t n = 0;
    std::uint32_t replicas_used = 0;
    double mean_edges = 0, sd_edges = 0;
    double mean_wedges = 0, sd_wedges = 0;
    double mean_triangles = 0, sd_triangles = 0;
    double mean_c1 = 0, sd_c1 = 0;
    double mean_max_degree = 0;
    double median_max_degree = 0;
    double mean_h_index = 0;
    double graphic_fraction = 0;
};

struct TheoryExponents {
    double wedges = 0;     // 2/gamma for gamma < 2, else 1
    double triangles = 0;  // 3/(gamma+1) for gamma < 2, else 1
    double max_degree = 0; // 1/gamma
    double c1_bound = 0;   // -(gamma-2)^2 / (2 gamma)
};

struct ScalingReport {
    double gamma = 0;
    std::uint64_t d_min = 0;
    std::uint64_t master_seed = 0;
    std::uint32_t replicas = 0;
    std::vector<SizeStats> per_n;
    SlopeFit wedges, triangles, max_degree, h_index, c1;
    TheoryExponents theory;
};

// Ordinary least squares on (log size, log value). Requires >= 2 points with
// positive values; std_error is 0 with two points (no residual df).
SlopeFit fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

// Full pipeline per (n, replica): sample sequence -> Erdos-Gallai -> if
// graphic, Havel-Hakimi -> metrics. Replica r at size n always uses
// replica_stream(master_seed, n, r), and aggregation order is fixed, so the
// report is identical for any thread count. Sizes with fewer than two graphic
// replicas are reported but excluded from the slope fits; max_degree is
// fitted on the per-size medians, everything else on means.
ScalingReport run_scaling(const ScalingConfig& config);

// Fraction of sampled sequences that pass the Erdos-Gallai test.
double graphic_fraction(const DegreeDistribution& dist, std::uint64_t n,
                        std::uint32_t replicas, std::uint64_t seed);

// Fraction of replicas whose edge count (half degree sum) falls inside
// [n*mean/4, 3*n*mean/4] with mean from mean_degree().
double edge_bound_fraction(const DegreeDistribution& dist, std::uint64_t n,
                           std::uint32_t replicas, std::uint64_t seed);

// Per size, fraction of configuration-model pairings that come out simple.
std::vector<double> simplicity_fraction(const DegreeDistribution& dist,
                                        const std::vector<std::uint64_t>& n_grid,
                                        std::uint32_t replicas, std::uint64_t seed);

} // namespace sfnet
