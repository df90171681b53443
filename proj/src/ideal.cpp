#include "matlin/ideal.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "matlin/orders.hpp"

namespace matlin {

namespace {

ElementSet x_part(ElementSet s) { return ElementSet(s.bits() & ((std::uint64_t{1} << y_offset) - 1)); }
ElementSet y_part(ElementSet s) { return ElementSet(s.bits() >> y_offset); }

ElementSet component_of(const ActivitySplit& s) {
    return xvars(s.internally_active) | yvars(s.internally_passive);
}

struct CensusBlock {
    std::map<std::vector<std::uint64_t>, std::pair<SquarefreeMonomialIdeal, LinearOrder>> found;
    std::uint64_t swept = 0;
};

InitialIdealCensus merge(std::vector<CensusBlock> blocks) {
    std::map<std::vector<std::uint64_t>, std::pair<SquarefreeMonomialIdeal, LinearOrder>> all;
    InitialIdealCensus c;
    for (auto& b : blocks) {
        c.orders_swept += b.swept;
        for (auto& [k, v] : b.found) all.try_emplace(k, std::move(v));
    }
    for (auto& [k, v] : all) {
        c.ideals.push_back(std::move(v.first));
        c.witnesses.push_back(std::move(v.second));
    }
    return c;
}

template <typename Fn>
InitialIdealCensus census(ElementSet ground, std::size_t jobs, Fn&& ideal_for) {
    return merge(sweep_orders<CensusBlock>(ground, jobs, [&](CensusBlock& acc, const LinearOrder& o) {
        ++acc.swept;
        SquarefreeMonomialIdeal ideal = ideal_for(o);
        auto key = ideal.key();
        acc.found.try_emplace(std::move(key), std::move(ideal), o);
    }));
}

}  // namespace

SquarefreeMonomialIdeal initial_ideal(const Matroid& m, const LinearOrder& order) {
    std::vector<ElementSet> gens;
    for (ElementSet d : m.cocircuits()) {
        const int lo = order.min_of(d);
        gens.push_back(ElementSet{xvar(lo)} | yvars(d.without(lo)));
    }
    return SquarefreeMonomialIdeal(xyvars(m.ground()), std::move(gens));
}

SquarefreeMonomialIdeal initial_ideal(const MatroidTriple& t, const LinearOrder& order_with_zero) {
    if (order_with_zero.ground() != t.hom.ground())
        throw std::invalid_argument("affine order must cover 0..n");
    const auto& hom_cocircuits = t.hom.cocircuits();
    std::vector<ElementSet> gens;
    for (ElementSet d : t.m.cocircuits()) {
        const ElementSet with0 = d.with(0);
        const ElementSet dp = std::binary_search(hom_cocircuits.begin(), hom_cocircuits.end(), with0) ? with0 : d;
        const int lo = order_with_zero.min_of(dp);
        gens.push_back(lo == 0 ? yvars(d) : (ElementSet{xvar(lo)} | yvars(d.without(lo))));
    }
    return SquarefreeMonomialIdeal(xyvars(t.m.ground()), std::move(gens));
}

SquarefreeMonomialIdeal leading_term_ideal(std::span<const HomogPolynomial> gens, const TermOrder& ord,
                                           ElementSet variables) {
    std::vector<ElementSet> lts;
    for (const auto& g : gens) {
        const auto s = leading_term(g, ord).as_set();
        if (!s) throw std::invalid_argument("leading term is not squarefree");
        lts.push_back(*s);
    }
    return SquarefreeMonomialIdeal(variables, std::move(lts));
}

std::vector<ElementSet> primary_decomposition_via_activities(const Matroid& m, const LinearOrder& order) {
    std::vector<ElementSet> out;
    for (ElementSet b : m.bases()) out.push_back(component_of(activity_split(m, b, order)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ElementSet> primary_decomposition_via_activities(const MatroidTriple& t,
                                                             const LinearOrder& order_with_zero) {
    std::vector<ElementSet> out;
    for (ElementSet b : t.m.bases()) {
        if (!t.hom.is_basis(b)) throw std::logic_error("basis " + b.to_string() + " of M is not a basis of M_hom");
        out.push_back(component_of(activity_split(t.hom, b, order_with_zero)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

InitialIdealCensus enumerate_initial_ideals(const Matroid& m, std::size_t jobs, int cutoff) {
    if (m.size() > cutoff)
        throw CutoffExceeded(std::to_string(m.size()) + " elements exceed the order-sweep cutoff of " +
                             std::to_string(cutoff));
    InitialIdealCensus c = census(m.ground(), jobs, [&](const LinearOrder& o) { return initial_ideal(m, o); });
    c.bound = factorial(m.rank()) * m.bases().size();
    return c;
}

InitialIdealCensus enumerate_initial_ideals(const MatroidTriple& t, std::size_t jobs, int cutoff) {
    if (t.m.size() > cutoff)
        throw CutoffExceeded(std::to_string(t.m.size()) + " elements exceed the affine order-sweep cutoff of " +
                             std::to_string(cutoff));
    InitialIdealCensus c = census(t.hom.ground(), jobs, [&](const LinearOrder& o) { return initial_ideal(t, o); });
    c.bound = factorial(t.hom.rank()) * t.hom.bases().size();
    return c;
}

AffineFamilyCensus affine_family_bidegrees(const MatroidTriple& t, std::size_t jobs, int cutoff) {
    if (t.m.size() > cutoff)
        throw CutoffExceeded(std::to_string(t.m.size()) + " elements exceed the affine order-sweep cutoff of " +
                             std::to_string(cutoff));
    using Seen = std::map<std::vector<std::uint64_t>, SquarefreeMonomialIdeal>;
    struct Block {
        std::array<Seen, 3> seen;
        std::array<std::uint64_t, 3> orders{};
    };
    const int last = t.hom.size() - 1;
    auto blocks = sweep_orders<Block>(t.hom.ground(), jobs, [&](Block& acc, const LinearOrder& o) {
        const int p0 = o.position(0);
        const std::size_t family = p0 == 0 ? 0 : (p0 == last ? 1 : 2);
        ++acc.orders[family];
        SquarefreeMonomialIdeal ideal = initial_ideal(t, o);
        acc.seen[family].try_emplace(ideal.key(), std::move(ideal));
    });
    std::array<Seen, 3> seen;
    AffineFamilyCensus c;
    std::array<AffineFamily*, 3> fams{&c.zero_first, &c.zero_last, &c.intermediate};
    for (auto& b : blocks)
        for (std::size_t f = 0; f < 3; ++f) {
            fams[f]->orders += b.orders[f];
            seen[f].merge(b.seen[f]);
        }
    for (std::size_t f = 0; f < 3; ++f) {
        fams[f]->distinct_ideals = seen[f].size();
        std::set<BivarPoly> degs;
        for (const auto& [k, ideal] : seen[f]) degs.insert(bidegree(ideal));
        fams[f]->bidegrees.assign(degs.begin(), degs.end());
    }
    return c;
}

Multidegree multidegree(const SquarefreeMonomialIdeal& ideal) {
    Multidegree md;
    int size = -1;
    for (ElementSet p : primary_decomposition(ideal)) {
        const ElementSet x = x_part(p), y = y_part(p);
        if (x.intersects(y)) throw std::invalid_argument("component " + monomial_string(p) + " uses both x_e and y_e");
        if (size >= 0 && p.size() != size) throw NotEquidimensional("primary components have different sizes");
        size = p.size();
        ++md[x | y];
    }
    return md;
}

BivarPoly bidegree(const SquarefreeMonomialIdeal& ideal) {
    multidegree(ideal);
    BivarPoly b;
    for (ElementSet p : primary_decomposition(ideal)) b.add(x_part(p).size(), y_part(p).size(), 1);
    return b;
}

Multidegree bases_multidegree(const Matroid& m) {
    Multidegree md;
    for (ElementSet b : m.bases()) ++md[b];
    return md;
}

}  // namespace matlin
