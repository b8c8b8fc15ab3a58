#include "sfnet/graphical.hpp"

#include <algorithm>
#include <vector>

namespace sfnet {

using u128 = unsigned __int128;

GraphicVerdict erdos_gallai_check(const DegreeSequence& seq) {
    const std::size_t n = seq.size();
    std::vector<std::uint64_t> d(seq);
    std::sort(d.begin(), d.end(), std::greater<>());

    u128 sum = 0;
    for (auto x : d) sum += x;

    GraphicVerdict verdict;
    verdict.odd_sum = (sum % 2 != 0);

    // suffix[i] = sum of d[i..n)
    std::vector<u128> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + d[i];

    // p = #{i : d[i] > k}; d is sorted so this is a prefix length,
    // non-increasing in k
    std::size_t p = n;
    u128 prefix = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        while (p > 0 && d[p - 1] <= k) --p;
        const std::size_t j = std::max(k, p);
        const u128 rhs = u128(k) * (k - 1) + u128(k) * (j - k) + suffix[j];
        if (prefix > rhs) {
            verdict.failing_k = k;
            break;
        }
    }

    verdict.graphic = !verdict.odd_sum && !verdict.failing_k.has_value();
    return verdict;
}

} // namespace sfnet
