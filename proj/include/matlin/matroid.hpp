#ifndef MATLIN_MATROID_HPP
#define MATLIN_MATROID_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "matlin/element_set.hpp"
#include "matlin/errors.hpp"
#include "matlin/linalg.hpp"

namespace matlin {

struct FlatLattice {
    std::vector<ElementSet> flats;          ///< by rank, then lexicographic
    std::vector<int> ranks;                 ///< parallel to flats
    std::vector<std::int64_t> mobius_top;   ///< mu(F, top), parallel to flats
    std::vector<std::pair<std::size_t, std::size_t>> covers;  ///< (lower, upper) index pairs

    std::size_t top() const { return flats.size() - 1; }
    std::size_t index_of(ElementSet flat) const;
};

/// A matroid on a ground set of labels. Linear matroids use 1..n; the
/// affine code adds the homogenizing element 0.
///
/// Immutable after construction. A rank table over all subsets of the
/// ground set is built eagerly, so ground sets are limited to labels
/// below 21 (explicit basis validation is meant for n <= 12). Circuits,
/// cocircuits and flats are cached on first use with call_once, so
/// copies share caches and concurrent queries are safe.
class Matroid {
public:
    static constexpr int max_label = 20;

    /// Column matroid of `m`; column j gets label labels[j] (default j+1).
    static Matroid from_matrix(const RatMatrix& m);
    static Matroid from_matrix(const RatMatrix& m, std::span<const int> labels);

    /// Validates equal cardinality and basis exchange; throws
    /// AxiomViolation with a witness otherwise.
    static Matroid from_bases(ElementSet ground, std::vector<ElementSet> bases);

    ElementSet ground() const;
    int size() const { return ground().size(); }
    int rank() const;

    /// All bases, lexicographically sorted.
    const std::vector<ElementSet>& bases() const;
    bool is_basis(ElementSet s) const;
    bool is_independent(ElementSet s) const;
    int rank_of(ElementSet s) const;
    ElementSet closure(ElementSet s) const;
    bool is_flat(ElementSet s) const { return closure(s) == s; }

    /// Inclusion-minimal dependent sets, lexicographically sorted.
    const std::vector<ElementSet>& circuits() const;
    /// Complements of hyperplanes, lexicographically sorted.
    const std::vector<ElementSet>& cocircuits() const;
    const FlatLattice& flat_lattice() const;

    Matroid dual() const;
    Matroid deletion(ElementSet a) const;
    Matroid contraction(ElementSet a) const;

    ElementSet loops() const;
    ElementSet coloops() const;

    /// Equivalence classes of "lie on a common circuit"; loops and coloops
    /// are singletons. Sorted by smallest label.
    std::vector<ElementSet> connected_components() const;

    /// The basis minimizing the sum of order positions, by the greedy
    /// algorithm; cross-checked against the blue rule.
    ElementSet min_basis(const LinearOrder& order) const;
    /// Blue rule: while some cocircuit has no blue element, colour its
    /// order-smallest element blue.
    ElementSet blue_rule_basis(const LinearOrder& order) const;

    bool operator==(const Matroid& o) const;

private:
    struct Data;
    explicit Matroid(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    static Matroid from_trusted_bases(ElementSet ground, std::vector<ElementSet> bases);

    std::shared_ptr<const Data> d_;
};

/// U_{r,n} on labels 1..n.
Matroid uniform_matroid(int r, int n);

/// Direct sum; ground sets must be disjoint.
Matroid direct_sum(const Matroid& a, const Matroid& b);

}  // namespace matlin

#endif
