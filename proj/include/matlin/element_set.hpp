#ifndef MATLIN_ELEMENT_SET_HPP
#define MATLIN_ELEMENT_SET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace matlin {

/// A finite set of small non-negative integer labels (0..63) stored as a
/// bitmask. Ordering is lexicographic on the increasing element sequence,
/// so ordered containers of sets iterate as 12 < 123 < 13 < 2.
class ElementSet {
public:
    static constexpr int capacity = 64;

    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
    ElementSet(std::initializer_list<int> elems);
    explicit ElementSet(std::span<const int> elems);

    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static ElementSet range(int lo, int hi);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
    constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

    ElementSet with(int e) const { return ElementSet(bits_ | (std::uint64_t{1} << e)); }
    ElementSet without(int e) const { return ElementSet(bits_ & ~(std::uint64_t{1} << e)); }

    /// Smallest / largest label; undefined on the empty set.
    int min() const { return std::countr_zero(bits_); }
    int max() const { return 63 - std::countl_zero(bits_); }

    std::vector<int> elements() const;

    /// Compact form used in reports, e.g. "1356"; labels >= 10 are
    /// comma-separated to stay unambiguous.
    std::string to_string() const;

    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
    friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(ElementSet a, ElementSet b) { return a.bits_ == b.bits_; }
    friend bool operator<(ElementSet a, ElementSet b);

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        iterator operator++(int) { auto t = *this; ++*this; return t; }
        friend constexpr bool operator==(iterator a, iterator b) { return a.rest_ == b.rest_; }
    private:
        std::uint64_t rest_ = 0;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// Calls fn(subset) for every subset of `universe`, including the empty
/// set and `universe` itself, in increasing bitmask order.
template <typename Fn>
void for_each_subset(ElementSet universe, Fn&& fn) {
    const std::uint64_t u = universe.bits();
    std::uint64_t s = 0;
    while (true) {
        fn(ElementSet(s));
        if (s == u) break;
        s = (s - u) & u;
    }
}

/// A total order on a finite ground set of labels. "Smallest" anywhere in
/// the library means smallest under a LinearOrder, never numerically.
class LinearOrder {
public:
    LinearOrder() = default;
    /// `sequence` lists the ground set from smallest to largest.
    explicit LinearOrder(std::vector<int> sequence);

    static LinearOrder natural(ElementSet ground);

    const std::vector<int>& sequence() const { return seq_; }
    ElementSet ground() const { return ground_; }
    int size() const { return static_cast<int>(seq_.size()); }
    int position(int e) const { return pos_[static_cast<std::size_t>(e)]; }
    bool less(int a, int b) const { return position(a) < position(b); }

    /// Order-smallest element of a nonempty subset of the ground set.
    int min_of(ElementSet s) const;

    /// This order restricted to a subset of its ground set.
    LinearOrder restricted(ElementSet s) const;

    /// Inserts a new label at the given 0-based position of the sequence.
    LinearOrder with_inserted(int label, int position) const;

    bool operator==(const LinearOrder& o) const { return seq_ == o.seq_; }

private:
    std::vector<int> seq_;
    std::array<int, ElementSet::capacity> pos_{};
    ElementSet ground_;
};

}  // namespace matlin

#endif
