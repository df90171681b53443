#ifndef MATLIN_AFFINE_HPP
#define MATLIN_AFFINE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <utility>

#include "matlin/activities.hpp"
#include "matlin/linalg.hpp"
#include "matlin/matroid.hpp"

namespace matlin {

/// (M_hom, M, M') for an affine space A x = b. M_hom is the column matroid
/// of (-b | A) on 0..n, M = M_hom \ 0 and M' = M_hom / 0.
struct MatroidTriple {
    Matroid hom;
    Matroid m;
    Matroid m_prime;

    /// Throws InconsistentSystem when rank(A | -b) > rank(A). Checks that
    /// M_hom \ 0 is the column matroid of A.
    static MatroidTriple from_system(const RatMatrix& a, std::span<const Rat> b);
    /// From a matroid whose ground set contains 0.
    static MatroidTriple from_hom(Matroid hom);

    /// Every flat of M' is a flat of M.
    bool is_morphism() const;
    /// (r - r') - (r(S) - r'(S)).
    int rcd(ElementSet s) const;
};

/// Sparse integer polynomial in x, y, z keyed by exponents (i, j, k).
class TrivarPoly {
public:
    using Key = std::array<int, 3>;

    void add(int i, int j, int k, std::int64_t c);
    std::int64_t coeff(int i, int j, int k) const;
    const std::map<Key, std::int64_t>& terms() const { return terms_; }

    /// T(x, 1, 0) as coefficients by x-degree.
    UniPoly at_y1_z0() const;
    /// z = 0 part as a bivariate polynomial in x, y.
    BivarPoly at_z0() const;

    bool operator==(const TrivarPoly&) const = default;

private:
    std::map<Key, std::int64_t> terms_;
};

/// Corank-nullity-rcd sum over all subsets. Throws NotAMorphism.
TrivarPoly lasvergnas_tutte(const MatroidTriple& t);

/// Internally active elements of S, a spanning set of M': i in S such that
/// (E - S) + i contains a cocircuit of M' whose order-smallest element is i.
ElementSet internal_activity_prime(const MatroidTriple& t, ElementSet s, const LinearOrder& order);
/// Externally active elements for S, an independent set of M: e outside S
/// such that S + e contains a circuit of M whose order-smallest element is e.
ElementSet external_activity(const MatroidTriple& t, ElementSet s, const LinearOrder& order);

/// Sum over S spanning in M' and independent in M of
/// x^|IA'(S)| y^|EA(S)| z^rcd(S). Throws NotAMorphism.
TrivarPoly lasvergnas_via_activities(const MatroidTriple& t, const LinearOrder& order);

/// bideg for orders with 0 last (top) and 0 first (bottom), as polynomials
/// in (s, t): t^r h_M(s/t) and t^r T_{M->M'}(s/t, 1, 0).
struct AffineBidegrees {
    BivarPoly top;
    BivarPoly bottom;
};
AffineBidegrees affine_bidegrees(const MatroidTriple& t);

/// t^r p(s/t) for a polynomial p of degree at most r.
BivarPoly homogenize_st(const UniPoly& p, int r);

}  // namespace matlin

#endif
