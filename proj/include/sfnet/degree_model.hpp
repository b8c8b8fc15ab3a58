#pragma once

#include <cstdint>
#include <vector>

#include "sfnet/rng.hpp"

namespace sfnet {

using DegreeSequence = std::vector<std::uint64_t>;

// Degree law with tail P(xi > x) = (d_min / x)^gamma for x >= d_min,
// discretized by taking the ceiling of a continuous Pareto draw.
struct DegreeDistribution {
    double gamma;
    std::uint64_t d_min;

    DegreeDistribution(double gamma, std::uint64_t d_min);
};

// Inverse-CDF transform for one draw given u in (0,1]. The ceiling keeps the
// tail exponent exact: P(xi > x) = (d_min/x)^gamma at every integer x >= d_min.
std::uint64_t sample_degree_from_uniform(const DegreeDistribution& dist, double u);

std::uint64_t sample_degree(const DegreeDistribution& dist, SplitMix64& rng);

// n i.i.d. draws; if the sum is odd the last entry is incremented by one, so
// the result always has even sum. Degrees are not capped at n-1; graphicality
// is decided downstream.
DegreeSequence sample_sequence(const DegreeDistribution& dist, std::size_t n,
                               SplitMix64& rng);

// E[ceil(X)] for X continuous Pareto(d_min, gamma), i.e.
// d_min + sum_{k >= d_min} (d_min/k)^gamma, summed directly with an
// Euler-Maclaurin tail so the absolute error is below 1e-9.
// Throws for gamma <= 1 (infinite mean).
double mean_degree(const DegreeDistribution& dist);

} // namespace sfnet
