#include "matlin/element_set.hpp"

#include <stdexcept>

namespace matlin {

namespace {

std::uint64_t bit(int e) {
    if (e < 0 || e >= ElementSet::capacity) throw std::out_of_range("element label out of range: " + std::to_string(e));
    return std::uint64_t{1} << e;
}

}  // namespace

ElementSet::ElementSet(std::initializer_list<int> elems) {
    for (int e : elems) bits_ |= bit(e);
}

ElementSet::ElementSet(std::span<const int> elems) {
    for (int e : elems) bits_ |= bit(e);
}

ElementSet ElementSet::range(int lo, int hi) {
    ElementSet s;
    for (int e = lo; e <= hi; ++e) s.bits_ |= bit(e);
    return s;
}

std::vector<int> ElementSet::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int e : *this) out.push_back(e);
    return out;
}

std::string ElementSet::to_string() const {
    const bool wide = !empty() && max() >= 10;
    std::string out;
    for (int e : *this) {
        if (wide && !out.empty()) out += ',';
        out += std::to_string(e);
    }
    return out;
}

bool operator<(ElementSet a, ElementSet b) {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    const int e = std::countr_zero(diff);
    const std::uint64_t above = e == 63 ? 0 : ~((std::uint64_t{2} << e) - 1);
    // The set holding e continues with e; the other one continues with its
    // next element above e, or ends (and is then a prefix).
    if (b.contains(e)) return (a.bits_ & above) == 0;
    return (b.bits_ & above) != 0;
}

LinearOrder::LinearOrder(std::vector<int> sequence) : seq_(std::move(sequence)) {
    pos_.fill(-1);
    for (std::size_t i = 0; i < seq_.size(); ++i) {
        const int e = seq_[i];
        if (e < 0 || e >= ElementSet::capacity) throw std::invalid_argument("order label out of range");
        if (pos_[static_cast<std::size_t>(e)] != -1)
            throw std::invalid_argument("order lists element " + std::to_string(e) + " twice");
        pos_[static_cast<std::size_t>(e)] = static_cast<int>(i);
        ground_ = ground_.with(e);
    }
}

LinearOrder LinearOrder::natural(ElementSet ground) { return LinearOrder(ground.elements()); }

int LinearOrder::min_of(ElementSet s) const {
    if (s.empty()) throw std::invalid_argument("min_of on empty set");
    if (!s.subset_of(ground_)) throw std::invalid_argument("min_of: set not contained in the ordered ground set");
    int best = -1;
    for (int e : s)
        if (best < 0 || pos_[static_cast<std::size_t>(e)] < pos_[static_cast<std::size_t>(best)]) best = e;
    return best;
}

LinearOrder LinearOrder::restricted(ElementSet s) const {
    std::vector<int> seq;
    for (int e : seq_)
        if (s.contains(e)) seq.push_back(e);
    return LinearOrder(std::move(seq));
}

LinearOrder LinearOrder::with_inserted(int label, int position) const {
    if (position < 0 || position > size()) throw std::out_of_range("insertion position out of range");
    std::vector<int> seq = seq_;
    seq.insert(seq.begin() + position, label);
    return LinearOrder(std::move(seq));
}

}  // namespace matlin
