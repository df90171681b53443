#ifndef MATLIN_ORDERS_HPP
#define MATLIN_ORDERS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "matlin/element_set.hpp"
#include "matlin/parallel.hpp"

namespace matlin {

std::uint64_t factorial(int n);

/// The k-th permutation of `items` (0-based, lexicographic in the order
/// the items are given).
std::vector<int> nth_permutation(std::vector<int> items, std::uint64_t k);

/// Visits every linear order of `ground` once. The orders are cut into a
/// fixed number of contiguous blocks that are independent of `jobs`; each
/// block owns a default-constructed accumulator, and the accumulators come
/// back in block order, so merged results never depend on the worker count.
template <typename Acc, typename Fn>
std::vector<Acc> sweep_orders(ElementSet ground, std::size_t jobs, Fn&& visit) {
    const std::vector<int> items = ground.elements();
    const std::uint64_t total = factorial(static_cast<int>(items.size()));
    const std::uint64_t blocks = std::min<std::uint64_t>(total, 256);
    return parallel_map<Acc>(static_cast<std::size_t>(blocks), jobs, [&](std::size_t b) {
        const std::uint64_t lo = total * b / blocks;
        const std::uint64_t hi = total * (b + 1) / blocks;
        Acc acc{};
        std::vector<int> perm = nth_permutation(items, lo);
        for (std::uint64_t k = lo; k < hi; ++k) {
            visit(acc, LinearOrder(perm));
            std::next_permutation(perm.begin(), perm.end());
        }
        return acc;
    });
}

}  // namespace matlin

#endif
