#include "matlin/parallel.hpp"

namespace matlin {

std::size_t default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace matlin
