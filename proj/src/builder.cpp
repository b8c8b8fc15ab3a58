#include "sfnet/builder.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace sfnet {

namespace {

struct Residual {
    std::uint64_t degree;
    VertexId vertex;
};

// max-heap: largest residual first, then smallest vertex id
struct ResidualLess {
    bool operator()(const Residual& a, const Residual& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.vertex > b.vertex;
    }
};

} // namespace

std::vector<std::size_t> havel_hakimi_order(const DegreeSequence& seq) {
    std::vector<std::size_t> order(seq.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return seq[a] > seq[b]; });
    return order;
}

std::optional<SimpleGraph> havel_hakimi(const DegreeSequence& seq) {
    const auto order = havel_hakimi_order(seq);
    const auto n = static_cast<VertexId>(seq.size());

    std::priority_queue<Residual, std::vector<Residual>, ResidualLess> queue;
    for (VertexId v = 0; v < n; ++v) {
        const std::uint64_t d = seq[order[v]];
        if (d > 0) queue.push({d, v});
    }

    std::vector<Edge> edges;
    edges.reserve(queue.size());
    std::vector<Residual> targets;
    while (!queue.empty()) {
        const auto [d, v] = queue.top();
        queue.pop();
        if (d > queue.size()) return std::nullopt; // not enough partners left
        targets.clear();
        for (std::uint64_t i = 0; i < d; ++i) {
            targets.push_back(queue.top());
            queue.pop();
        }
        for (auto& t : targets) {
            edges.emplace_back(std::min(v, t.vertex), std::max(v, t.vertex));
            if (--t.degree > 0) queue.push(t);
        }
    }
    return SimpleGraph(n, std::move(edges));
}

PairingOutcome configuration_pairing(const DegreeSequence& seq, SplitMix64& rng) {
    std::uint64_t sum = 0;
    for (auto d : seq) sum += d;
    if (sum % 2 != 0)
        throw std::invalid_argument("configuration_pairing: odd degree sum");

    std::vector<VertexId> stubs;
    stubs.reserve(sum);
    for (VertexId v = 0; v < seq.size(); ++v)
        for (std::uint64_t i = 0; i < seq[v]; ++i) stubs.push_back(v);

    // Fisher-Yates with our own bounded draw; std::shuffle is not
    // reproducible across standard libraries
    for (std::size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);

    PairingOutcome out;
    std::vector<Edge> pairs;
    pairs.reserve(sum / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const VertexId u = stubs[i], v = stubs[i + 1];
        if (u == v) {
            ++out.loops;
        } else {
            pairs.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i] == pairs[i - 1]) ++out.multi_edges;
    out.simple = (out.loops == 0 && out.multi_edges == 0);
    return out;
}

} // namespace sfnet
