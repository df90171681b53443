#ifndef MATLIN_POLYNOMIAL_HPP
#define MATLIN_POLYNOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matlin/linalg.hpp"
#include "matlin/matroid.hpp"
#include "matlin/simplicial.hpp"

namespace matlin {

/// Exponent vector over the shared variable labels (x_e = e, y_e = 32 + e).
struct Monomial {
    std::array<std::uint8_t, 64> exp{};

    static Monomial of(ElementSet squarefree);
    bool divides(const Monomial& o) const;
    int degree() const;
    /// The support, if every exponent is at most one.
    std::optional<ElementSet> as_set() const;
    std::string to_string() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// a / b; requires b to divide a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    auto operator<=>(const Monomial&) const = default;
};

class HomogPolynomial {
public:
    HomogPolynomial() = default;

    void add_term(const Monomial& m, const Rat& c);
    bool is_zero() const { return terms_.empty(); }
    /// Keyed by exponent vector; no zero coefficients.
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    Rat coefficient(const Monomial& m) const;

    /// this += c * m * f
    void add_multiple(const Rat& c, const Monomial& m, const HomogPolynomial& f);

    std::string to_string() const;
    bool operator==(const HomogPolynomial&) const = default;

private:
    std::map<Monomial, Rat> terms_;
};

/// Weight order with w(y_e) = 0, ties broken lexicographically on
/// x1..x20, y1..y20, x0, y0 (larger exponent earlier in that sequence wins).
class TermOrder {
public:
    explicit TermOrder(std::array<Rat, 64> weights);

    /// w(x_i) = n + 1 - position(i), so earlier elements weigh more.
    static TermOrder realizing(const LinearOrder& order);
    /// For an order on 0..n: w(x_i) = position(0) - position(i), putting 0
    /// at weight 0 and every element after 0 below it.
    static TermOrder realizing_affine(const LinearOrder& order_with_zero);
    /// Weights on x_e for e in `ground`, in label order.
    static TermOrder from_x_weights(ElementSet ground, std::span<const Rat> weights);

    const Rat& weight(int var) const { return w_[static_cast<std::size_t>(var)]; }
    Rat weight_of(const Monomial& m) const;
    /// Strict "a is smaller than b".
    bool less(const Monomial& a, const Monomial& b) const;
    /// Elements of `ground` by decreasing x-weight; ties by label.
    LinearOrder induced_order(ElementSet ground) const;

private:
    std::array<Rat, 64> w_;
};

/// Coefficients by label; label 0 carries the constant term.
struct LinearForm {
    ElementSet support;  ///< labels >= 1 with nonzero coefficient
    std::vector<Rat> coeffs;

    const Rat& constant() const { return coeffs[0]; }
    std::string to_string() const;
};

/// One form per cocircuit of M(A), supported exactly on it, from the row
/// space of A; scaled so the order-smallest support label has coefficient
/// one. With `b` the forms come from A x - b, so the constant term is set.
/// Throws RankDeficient when A has dependent rows, InconsistentSystem when
/// A x = b has no solution.
std::vector<LinearForm> cocircuit_forms(const RatMatrix& a, std::span<const Rat> b = {},
                                        const LinearOrder* order = nullptr);

/// sum_d c_d x_d y_{D-d} + c_0 y_D.
HomogPolynomial homogenize(const LinearForm& f);

/// Throws ZeroPolynomial.
Monomial leading_term(const HomogPolynomial& f, const TermOrder& ord);
Rat leading_coefficient(const HomogPolynomial& f, const TermOrder& ord);

/// Remainder of f under the division algorithm, always reducing the
/// largest reducible term.
HomogPolynomial reduce(HomogPolynomial f, std::span<const HomogPolynomial> gens, const TermOrder& ord);

struct BuchbergerReport {
    bool groebner = true;  ///< every S-polynomial reduces to zero
    bool reduced = true;   ///< no term of one generator divides a term of another
    bool ok() const { return groebner && reduced; }
};
BuchbergerReport buchberger_verify(std::span<const HomogPolynomial> gens, const TermOrder& ord);

/// Leading terms are pairwise non-dividing and each one is outside the
/// ideal of the others.
bool minimally_generates(std::span<const HomogPolynomial> gens, const TermOrder& ord);

}  // namespace matlin

#endif
