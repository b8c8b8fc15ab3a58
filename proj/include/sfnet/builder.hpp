#pragma once

#include <optional>

#include "sfnet/degree_model.hpp"
#include "sfnet/graph.hpp"
#include "sfnet/rng.hpp"

namespace sfnet {

struct PairingOutcome {
    bool simple = false;
    std::uint64_t loops = 0;
    std::uint64_t multi_edges = 0;
};

// Havel-Hakimi realization. The sequence is sorted non-increasingly (stable,
// so equal degrees keep input order) and vertex i of the output carries the
// i-th entry of that sorted sequence; havel_hakimi_order gives the map from
// sorted position to input position. Each round connects the vertex of
// largest residual degree to the next-largest ones, ties broken by sorted
// position. Returns nullopt exactly when the sequence is not graphic.
std::optional<SimpleGraph> havel_hakimi(const DegreeSequence& seq);

std::vector<std::size_t> havel_hakimi_order(const DegreeSequence& seq);

// Configuration-model probe: pair the sum(d) stubs uniformly at random and
// count loops and repeated vertex pairs. No graph is built. Rejects odd sums.
PairingOutcome configuration_pairing(const DegreeSequence& seq, SplitMix64& rng);

} // namespace sfnet
