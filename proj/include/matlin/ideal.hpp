#ifndef MATLIN_IDEAL_HPP
#define MATLIN_IDEAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "matlin/activities.hpp"
#include "matlin/affine.hpp"
#include "matlin/polynomial.hpp"
#include "matlin/simplicial.hpp"

namespace matlin {

constexpr int default_linear_cutoff = 8;
constexpr int default_affine_cutoff = 7;

/// <x_{min D} y_{D - min D} : D cocircuit of M> on the variables x_E, y_E.
SquarefreeMonomialIdeal initial_ideal(const Matroid& m, const LinearOrder& order);

/// Affine rule for an order on 0..n: for each cocircuit D of M take
/// D' = D + 0 when that is a cocircuit of M_hom, else D; with m the
/// order-smallest element of D', emit y_D if m = 0 and x_m y_{D-m} otherwise.
SquarefreeMonomialIdeal initial_ideal(const MatroidTriple& t, const LinearOrder& order_with_zero);

/// Monomial ideal of the leading terms, which must be squarefree.
SquarefreeMonomialIdeal leading_term_ideal(std::span<const HomogPolynomial> gens, const TermOrder& ord,
                                           ElementSet variables);

/// <x_e : e in IA(B), y_e : e in IP(B)> for each basis B, sorted.
std::vector<ElementSet> primary_decomposition_via_activities(const Matroid& m, const LinearOrder& order);
/// Same over the bases of M, with activities taken in M_hom under the
/// order on 0..n.
std::vector<ElementSet> primary_decomposition_via_activities(const MatroidTriple& t,
                                                             const LinearOrder& order_with_zero);

struct InitialIdealCensus {
    /// Distinct initial ideals, sorted by their dedupe key.
    std::vector<SquarefreeMonomialIdeal> ideals;
    /// For each ideal, the first order (in permutation rank) producing it.
    std::vector<LinearOrder> witnesses;
    std::uint64_t orders_swept = 0;
    /// r! * b, with b counted in M_hom for the affine census.
    std::uint64_t bound = 0;

    std::size_t count() const { return ideals.size(); }
};

/// Sweeps all n! orders. Throws CutoffExceeded when n > cutoff.
InitialIdealCensus enumerate_initial_ideals(const Matroid& m, std::size_t jobs = 1,
                                            int cutoff = default_linear_cutoff);
/// Sweeps all (n+1)! orders on 0..n. Throws CutoffExceeded when n > cutoff.
InitialIdealCensus enumerate_initial_ideals(const MatroidTriple& t, std::size_t jobs = 1,
                                            int cutoff = default_affine_cutoff);

/// Initial ideals of an affine space grouped by where 0 sits in the order.
struct AffineFamily {
    std::uint64_t orders = 0;
    std::size_t distinct_ideals = 0;
    std::vector<BivarPoly> bidegrees;  ///< distinct, sorted
};
struct AffineFamilyCensus {
    AffineFamily zero_first, zero_last, intermediate;
};
/// Sweeps all (n+1)! orders. Throws CutoffExceeded when n > cutoff.
AffineFamilyCensus affine_family_bidegrees(const MatroidTriple& t, std::size_t jobs = 1,
                                           int cutoff = default_affine_cutoff);

/// Formal sum of squarefree monomials t_S.
using Multidegree = std::map<ElementSet, std::int64_t>;

/// One t_S per primary component <z_e : e in S>. Throws NotEquidimensional
/// when component sizes differ.
Multidegree multidegree(const SquarefreeMonomialIdeal& ideal);
/// s^#x t^#y per component, keyed (#x, #y).
BivarPoly bidegree(const SquarefreeMonomialIdeal& ideal);

/// sum over bases B of t_B.
Multidegree bases_multidegree(const Matroid& m);

}  // namespace matlin

#endif
