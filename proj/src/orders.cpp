#include "matlin/orders.hpp"

#include <stdexcept>

namespace matlin {

std::uint64_t factorial(int n) {
    if (n > 20) throw std::overflow_error("factorial exceeds 64 bits");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<int> nth_permutation(std::vector<int> items, std::uint64_t k) {
    std::vector<int> out;
    out.reserve(items.size());
    while (!items.empty()) {
        const std::uint64_t block = factorial(static_cast<int>(items.size()) - 1);
        const auto idx = static_cast<std::ptrdiff_t>(k / block);
        k %= block;
        out.push_back(items[static_cast<std::size_t>(idx)]);
        items.erase(items.begin() + idx);
    }
    return out;
}

}  // namespace matlin
