#ifndef MATLIN_POLYTOPE_HPP
#define MATLIN_POLYTOPE_HPP

#include <map>
#include <vector>

#include "matlin/matroid.hpp"
#include "matlin/rational.hpp"

namespace matlin {

using Point = std::vector<Rat>;

/// P_n(z) = {t : sum t_i = z(E), sum_{i in S} t_i <= z(S)}. Coordinates
/// follow the ground set labels in increasing order.
struct GenPermutahedron {
    ElementSet ground;
    std::map<ElementSet, Rat> z;   ///< every subset of ground, z(∅) = 0
    std::vector<Point> vertices;   ///< sorted, deduplicated

    const Rat& z_of(ElementSet s) const { return z.at(s); }
};

/// The vertex of P_n(z) minimizing a linear functional whose coefficients
/// increase along `order`: prefix increments z(π_1..π_k) - z(π_1..π_{k-1}).
Point vertex_of(const GenPermutahedron& p, const LinearOrder& order);

/// d^π_i = number of cocircuits whose order-smallest element is i. Checks
/// that the support is min_basis(order).
Point vertex_for_order(const Matroid& m, const LinearOrder& order);

/// z(S) = number of cocircuits meeting S; vertices from all n! orders.
GenPermutahedron cocircuit_polytope(const Matroid& m, std::size_t jobs = 1);
/// z(S) = rank(S); vertices are the e_B. Checks that the order sweep
/// produces exactly these points.
GenPermutahedron matroid_polytope(const Matroid& m, std::size_t jobs = 1);

/// Affine hull dimension of the vertices; throws EmptyPolytope.
int dimension(const GenPermutahedron& p);

/// Every point lies on sum = z(E) and under every z(S).
bool satisfies_hrep(const GenPermutahedron& p, const Point& x);

struct SubmodularityWitness {
    bool holds = true;
    ElementSet s;
    int a = -1, b = -1;
};

/// Local submodularity: f(S+a) + f(S+b) >= f(S+a+b) + f(S) for all S and
/// distinct a, b outside S.
SubmodularityWitness check_submodular(ElementSet ground, const std::map<ElementSet, Rat>& f);

/// q(S) = D(S) - rank(S) is submodular, so P_M is a Minkowski summand of O_M.
SubmodularityWitness summand_check(const Matroid& m);

}  // namespace matlin

#endif
