#ifndef MATLIN_ACTIVITIES_HPP
#define MATLIN_ACTIVITIES_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "matlin/matroid.hpp"

namespace matlin {

/// Sparse bivariate integer polynomial: (i, j) -> coefficient of x^i y^j.
/// Zero coefficients are never stored.
class BivarPoly {
public:
    using Key = std::pair<int, int>;

    BivarPoly() = default;
    BivarPoly(std::initializer_list<std::pair<const Key, std::int64_t>> terms);

    void add(int i, int j, std::int64_t c);
    std::int64_t coeff(int i, int j) const;
    const std::map<Key, std::int64_t>& terms() const { return terms_; }

    /// Sum of coefficients of y^j over all j, i.e. the polynomial at y = 1,
    /// returned as coefficients by x-degree.
    std::vector<std::int64_t> at_y_equals_one() const;
    std::int64_t at_one_one() const;
    /// (i, j) -> (j, i)
    BivarPoly swapped() const;

    bool operator==(const BivarPoly&) const = default;
    auto operator<=>(const BivarPoly&) const = default;

private:
    std::map<Key, std::int64_t> terms_;
};

/// Univariate integer polynomial, coefficient vector indexed by degree.
using UniPoly = std::vector<std::int64_t>;

struct ActivitySplit {
    ElementSet basis;
    ElementSet internally_active, internally_passive;
    ElementSet externally_active, externally_passive;
};

/// C(B, x) = {y : (B + x) - y is a basis}; requires x outside B.
ElementSet fundamental_circuit(const Matroid& m, ElementSet basis, int x);
/// D(B, y) = {x : (B - y) + x is a basis}; requires y in B.
ElementSet fundamental_cocircuit(const Matroid& m, ElementSet basis, int y);

ActivitySplit activity_split(const Matroid& m, ElementSet basis, const LinearOrder& order);

struct CrapoDecomposition {
    ElementSet basis;
    ElementSet added;    ///< subset of EA(basis)
    ElementSet removed;  ///< subset of IA(basis)
};

/// Writes `a` as (B + added) - removed, the unique Crapo interval
/// [B - IA(B), B + EA(B)] containing it.
CrapoDecomposition crapo_decompose(const Matroid& m, const LinearOrder& order, ElementSet a);

/// Corank-nullity sum over all subsets of the ground set.
BivarPoly tutte(const Matroid& m);
/// Sum over bases of x^|IA(B)| y^|EA(B)|.
BivarPoly tutte_via_activities(const Matroid& m, const LinearOrder& order);

/// f_i = number of independent sets of size i, for i = 0..r.
std::vector<std::int64_t> f_vector(const Matroid& m);
/// h(x) = sum_i f_i (x - 1)^(r - i); equals T(x, 1).
UniPoly h_polynomial(const Matroid& m);

/// Coefficients of (x + c)^k.
UniPoly binomial_power(std::int64_t c, int k);

}  // namespace matlin

#endif
