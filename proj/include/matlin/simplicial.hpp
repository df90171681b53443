#ifndef MATLIN_SIMPLICIAL_HPP
#define MATLIN_SIMPLICIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matlin/activities.hpp"
#include "matlin/matroid.hpp"

namespace matlin {

// Vertices and variables share one 64-bit label space: x_e is label e and
// y_e is label 32 + e. Plain complexes (independence complexes, test
// fixtures) just use the x labels.
constexpr int y_offset = 32;
constexpr int xvar(int e) { return e; }
constexpr int yvar(int e) { return y_offset + e; }
constexpr bool is_yvar(int v) { return v >= y_offset; }
constexpr int element_of(int v) { return v >= y_offset ? v - y_offset : v; }

/// x_S as a variable set.
ElementSet xvars(ElementSet s);
/// y_S as a variable set.
ElementSet yvars(ElementSet s);
/// x_S y_S for every element of S.
ElementSet xyvars(ElementSet s);

/// "x1", "y12".
std::string variable_name(int v);
/// "x1*y2*y6"; "1" for the empty monomial.
std::string monomial_string(ElementSet m);

/// Inclusion-minimal sets among `sets`, sorted and deduplicated.
std::vector<ElementSet> minimal_sets(std::vector<ElementSet> sets);
/// Inclusion-maximal sets among `sets`, sorted and deduplicated.
std::vector<ElementSet> maximal_sets(std::vector<ElementSet> sets);
/// Inclusion-minimal sets meeting every member of `family`. An empty
/// family gives {∅}; a family containing ∅ gives no transversals.
std::vector<ElementSet> minimal_transversals(const std::vector<ElementSet>& family);

class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Keeps only the maximal facets; every facet must lie in `vertices`.
    SimplicialComplex(ElementSet vertices, std::vector<ElementSet> facets);

    ElementSet vertices() const { return vertices_; }
    /// Sorted, pairwise incomparable.
    const std::vector<ElementSet>& facets() const { return facets_; }
    bool is_face(ElementSet s) const;
    int dimension() const;

    /// Faces of this complex contained in `sigma`, as a complex on `sigma`.
    SimplicialComplex restricted(ElementSet sigma) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    ElementSet vertices_;
    std::vector<ElementSet> facets_;
};

class SquarefreeMonomialIdeal {
public:
    SquarefreeMonomialIdeal() = default;
    /// Generators are reduced to the minimal ones; all must lie in
    /// `variables`.
    SquarefreeMonomialIdeal(ElementSet variables, std::vector<ElementSet> generators);

    ElementSet variables() const { return variables_; }
    /// Minimal generators, sorted.
    const std::vector<ElementSet>& generators() const { return gens_; }
    bool contains(ElementSet monomial) const;
    bool is_zero() const { return gens_.empty(); }

    /// Canonical dedupe key: the sorted generator masks.
    std::vector<std::uint64_t> key() const;
    std::string to_string() const;

    bool operator==(const SquarefreeMonomialIdeal&) const = default;

private:
    ElementSet variables_;
    std::vector<ElementSet> gens_;
};

SquarefreeMonomialIdeal stanley_reisner(const SimplicialComplex& delta);
SimplicialComplex complex_of(const SquarefreeMonomialIdeal& ideal);

/// Minimal primes as variable sets, sorted; one per facet of complex_of(I).
/// Checks that their intersection gives back I.
std::vector<ElementSet> primary_decomposition(const SquarefreeMonomialIdeal& ideal);

/// IN(M): faces are the independent sets, on the x labels.
SimplicialComplex independence_complex(const Matroid& m);

/// B_<(M) on the doubled vertex set. Built from the facets
/// x_{B ∪ EP(B)} y_{B ∪ EA(B)}; the minimal non-faces are derived separately
/// from the circuits and must describe the same complex, otherwise
/// std::logic_error is thrown.
SimplicialComplex external_activity_complex(const Matroid& m, const LinearOrder& order);
/// The minimal non-faces x_{min C} y_{C - min C}, one per circuit C.
std::vector<ElementSet> external_activity_nonfaces(const Matroid& m, const LinearOrder& order);

/// Nonzero reduced homology ranks over Q, keyed by dimension (from -1).
std::map<int, std::int64_t> reduced_homology(const SimplicialComplex& delta);

/// Multigraded Betti numbers of S/I, keyed by (i, squarefree degree).
class BettiTable {
public:
    using Key = std::pair<int, ElementSet>;

    void set(int i, ElementSet degree, std::int64_t beta);
    std::int64_t get(int i, ElementSet degree) const;
    const std::map<Key, std::int64_t>& entries() const { return entries_; }

    /// beta_i summed over degrees, for i = 0..projdim.
    std::vector<std::int64_t> totals() const;
    int projective_dimension() const;
    /// rows[j][i] = beta_{i, i+j}, the standard graded table.
    std::vector<std::vector<std::int64_t>> graded() const;

    /// Maps x_e and y_e to element e. Empty if some degree uses both.
    std::optional<BettiTable> coarsened() const;

    bool operator==(const BettiTable&) const = default;

private:
    std::map<Key, std::int64_t> entries_;
};

enum class HochsterStrategy {
    Auto,        ///< exhaustive up to 14 variables, LCM lattice beyond
    Exhaustive,  ///< every squarefree degree
    LcmLattice,  ///< only unions of generator supports
};

/// Hochster's formula: beta_{i,sigma}(S/I) = dim H~_{|sigma|-i-1}(Delta|sigma).
/// Degrees that are not unions of generators are skipped without homology,
/// since some vertex of sigma is then a cone point of Delta|sigma.
/// Degrees are processed on up to `jobs` workers (0 = hardware).
BettiTable hochster_betti(const SquarefreeMonomialIdeal& ideal,
                          HochsterStrategy strategy = HochsterStrategy::Auto, std::size_t jobs = 1);

/// beta_{r - r(F), [n] - F} = |mu(F, top)| for every flat F.
BettiTable betti_from_mobius(const Matroid& m);

struct CohenMacaulayReport {
    bool cohen_macaulay;
    int codim;
    int projdim;
};
CohenMacaulayReport is_cohen_macaulay(const SquarefreeMonomialIdeal& ideal,
                                      HochsterStrategy strategy = HochsterStrategy::Auto, std::size_t jobs = 1);
/// Same, reusing an already computed Betti table of the ideal.
CohenMacaulayReport is_cohen_macaulay(const SquarefreeMonomialIdeal& ideal, const BettiTable& betti);

/// y_e -> x_e, then minimal generators. Variables become x labels.
SquarefreeMonomialIdeal identify_y_with_x(const SquarefreeMonomialIdeal& ideal);
/// x_e -> 1, then minimal generators. Variables become the y labels.
SquarefreeMonomialIdeal set_x_to_one(const SquarefreeMonomialIdeal& ideal);

}  // namespace matlin

#endif
