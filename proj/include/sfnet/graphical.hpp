#pragma once

#include <cstddef>
#include <optional>

#include "sfnet/degree_model.hpp"

namespace sfnet {

struct GraphicVerdict {
    bool graphic = false;
    // smallest 1-based k violating the Erdos-Gallai inequality, if any
    std::optional<std::size_t> failing_k;
    bool odd_sum = false;
};

// Erdos-Gallai test: the sequence is graphic iff its sum is even and
//   sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)   for all 1 <= k <= n
// on the non-increasingly sorted sequence. One sort, then prefix sums and a
// descending pointer for the min() part, O(n log n) total.
GraphicVerdict erdos_gallai_check(const DegreeSequence& seq);

} // namespace sfnet
