#include "matlin/affine.hpp"

#include <stdexcept>

namespace matlin {

MatroidTriple MatroidTriple::from_system(const RatMatrix& a, std::span<const Rat> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length must match the row count");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        aug(i, 0) = -b[i];
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j + 1) = a(i, j);
    }
    if (rank(aug) > rank(a)) throw InconsistentSystem("A x = b has no solution");
    std::vector<int> labels(a.cols() + 1);
    for (std::size_t j = 0; j < labels.size(); ++j) labels[j] = static_cast<int>(j);
    MatroidTriple t = from_hom(Matroid::from_matrix(aug, labels));
    if (!(t.m == Matroid::from_matrix(a))) throw std::logic_error("deleting 0 does not recover the matroid of A");
    return t;
}

MatroidTriple MatroidTriple::from_hom(Matroid hom) {
    if (!hom.ground().contains(0)) throw ElementMembership("the homogenized matroid needs element 0");
    const ElementSet zero{0};
    Matroid m = hom.deletion(zero);
    Matroid mp = hom.contraction(zero);
    return {std::move(hom), std::move(m), std::move(mp)};
}

bool MatroidTriple::is_morphism() const {
    for (ElementSet f : m_prime.flat_lattice().flats)
        if (!m.is_flat(f)) return false;
    return true;
}

int MatroidTriple::rcd(ElementSet s) const {
    return (m.rank() - m_prime.rank()) - (m.rank_of(s) - m_prime.rank_of(s));
}

void TrivarPoly::add(int i, int j, int k, std::int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({i, j, k}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t TrivarPoly::coeff(int i, int j, int k) const {
    auto it = terms_.find({i, j, k});
    return it == terms_.end() ? 0 : it->second;
}

UniPoly TrivarPoly::at_y1_z0() const {
    return at_z0().at_y_equals_one();
}

BivarPoly TrivarPoly::at_z0() const {
    BivarPoly p;
    for (const auto& [k, c] : terms_)
        if (k[2] == 0) p.add(k[0], k[1], c);
    return p;
}

namespace {

void require_morphism(const MatroidTriple& t) {
    if (!t.is_morphism()) throw NotAMorphism("some flat of M' is not a flat of M");
}

}  // namespace

TrivarPoly lasvergnas_tutte(const MatroidTriple& t) {
    require_morphism(t);
    const int rp = t.m_prime.rank();
    TrivarPoly out;
    for_each_subset(t.m.ground(), [&](ElementSet s) {
        const int rs = t.m.rank_of(s);
        const UniPoly px = binomial_power(-1, rp - t.m_prime.rank_of(s));
        const UniPoly py = binomial_power(-1, s.size() - rs);
        const int k = t.rcd(s);
        for (std::size_t i = 0; i < px.size(); ++i)
            for (std::size_t j = 0; j < py.size(); ++j)
                out.add(static_cast<int>(i), static_cast<int>(j), k, px[i] * py[j]);
    });
    return out;
}

ElementSet internal_activity_prime(const MatroidTriple& t, ElementSet s, const LinearOrder& order) {
    const Matroid& mp = t.m_prime;
    if (mp.rank_of(s) != mp.rank()) throw std::invalid_argument("set is not spanning in M'");
    ElementSet active;
    for (int i : s) {
        if (mp.rank_of(s.without(i)) == mp.rank()) continue;
        // The unique cocircuit inside (E - S) + i is the complement of the
        // hyperplane spanned by S - i.
        const ElementSet d = mp.ground() - mp.closure(s.without(i));
        if (order.min_of(d) == i) active = active.with(i);
    }
    return active;
}

ElementSet external_activity(const MatroidTriple& t, ElementSet s, const LinearOrder& order) {
    const Matroid& m = t.m;
    if (!m.is_independent(s)) throw std::invalid_argument("set is not independent in M");
    ElementSet active;
    for (int e : m.ground() - s) {
        const ElementSet ext = s.with(e);
        if (m.is_independent(ext)) continue;
        ElementSet c = ElementSet{e};
        for (int x : s)
            if (m.is_independent(ext.without(x))) c = c.with(x);
        if (order.min_of(c) == e) active = active.with(e);
    }
    return active;
}

TrivarPoly lasvergnas_via_activities(const MatroidTriple& t, const LinearOrder& order) {
    require_morphism(t);
    TrivarPoly out;
    for_each_subset(t.m.ground(), [&](ElementSet s) {
        if (!t.m.is_independent(s) || t.m_prime.rank_of(s) != t.m_prime.rank()) return;
        out.add(internal_activity_prime(t, s, order).size(), external_activity(t, s, order).size(), t.rcd(s), 1);
    });
    return out;
}

BivarPoly homogenize_st(const UniPoly& p, int r) {
    BivarPoly out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        if (static_cast<int>(k) > r) throw std::invalid_argument("degree exceeds the homogenizing degree");
        out.add(static_cast<int>(k), r - static_cast<int>(k), p[k]);
    }
    return out;
}

AffineBidegrees affine_bidegrees(const MatroidTriple& t) {
    const int r = t.m.rank();
    return {homogenize_st(h_polynomial(t.m), r), homogenize_st(lasvergnas_tutte(t).at_y1_z0(), r)};
}

}  // namespace matlin
