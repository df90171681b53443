#include "matlin/activities.hpp"

#include <stdexcept>

namespace matlin {

BivarPoly::BivarPoly(std::initializer_list<std::pair<const Key, std::int64_t>> terms) {
    for (const auto& [k, c] : terms) add(k.first, k.second, c);
}

void BivarPoly::add(int i, int j, std::int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t BivarPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? 0 : it->second;
}

std::vector<std::int64_t> BivarPoly::at_y_equals_one() const {
    std::vector<std::int64_t> out;
    for (const auto& [k, c] : terms_) {
        if (static_cast<std::size_t>(k.first) >= out.size()) out.resize(static_cast<std::size_t>(k.first) + 1, 0);
        out[static_cast<std::size_t>(k.first)] += c;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::int64_t BivarPoly::at_one_one() const {
    std::int64_t s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

BivarPoly BivarPoly::swapped() const {
    BivarPoly out;
    for (const auto& [k, c] : terms_) out.add(k.second, k.first, c);
    return out;
}

namespace {

void require_basis(const Matroid& m, ElementSet basis) {
    if (!m.is_basis(basis)) throw NotABasis(basis.to_string() + " is not a basis");
}

}  // namespace

ElementSet fundamental_circuit(const Matroid& m, ElementSet basis, int x) {
    require_basis(m, basis);
    if (!m.ground().contains(x) || basis.contains(x))
        throw ElementMembership("fundamental circuit needs an element outside the basis");
    const ElementSet ext = basis.with(x);
    ElementSet c;
    for (int y : ext)
        if (m.is_basis(ext.without(y))) c = c.with(y);
    return c;
}

ElementSet fundamental_cocircuit(const Matroid& m, ElementSet basis, int y) {
    require_basis(m, basis);
    if (!basis.contains(y)) throw ElementMembership("fundamental cocircuit needs an element of the basis");
    const ElementSet rest = basis.without(y);
    ElementSet d;
    for (int x : m.ground() - rest)
        if (m.is_basis(rest.with(x))) d = d.with(x);
    return d;
}

ActivitySplit activity_split(const Matroid& m, ElementSet basis, const LinearOrder& order) {
    require_basis(m, basis);
    ActivitySplit s{basis, {}, {}, {}, {}};
    for (int i : basis) {
        if (order.min_of(fundamental_cocircuit(m, basis, i)) == i)
            s.internally_active = s.internally_active.with(i);
        else
            s.internally_passive = s.internally_passive.with(i);
    }
    for (int e : m.ground() - basis) {
        if (order.min_of(fundamental_circuit(m, basis, e)) == e)
            s.externally_active = s.externally_active.with(e);
        else
            s.externally_passive = s.externally_passive.with(e);
    }
    return s;
}

CrapoDecomposition crapo_decompose(const Matroid& m, const LinearOrder& order, ElementSet a) {
    if (!a.subset_of(m.ground())) throw ElementMembership("set is not inside the ground set");
    for (ElementSet b : m.bases()) {
        const ActivitySplit s = activity_split(m, b, order);
        const ElementSet lo = b - s.internally_active;
        const ElementSet hi = b | s.externally_active;
        if (lo.subset_of(a) && a.subset_of(hi)) return {b, a - b, b - a};
    }
    throw std::logic_error("no Crapo interval contains " + a.to_string());
}

UniPoly binomial_power(std::int64_t c, int k) {
    UniPoly p{1};
    for (int step = 0; step < k; ++step) {
        UniPoly next(p.size() + 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] += p[i];
            next[i] += c * p[i];
        }
        p = std::move(next);
    }
    return p;
}

BivarPoly tutte(const Matroid& m) {
    const int r = m.rank();
    BivarPoly t;
    for_each_subset(m.ground(), [&](ElementSet a) {
        const int ra = m.rank_of(a);
        const UniPoly px = binomial_power(-1, r - ra);
        const UniPoly py = binomial_power(-1, a.size() - ra);
        for (std::size_t i = 0; i < px.size(); ++i)
            for (std::size_t j = 0; j < py.size(); ++j)
                t.add(static_cast<int>(i), static_cast<int>(j), px[i] * py[j]);
    });
    return t;
}

BivarPoly tutte_via_activities(const Matroid& m, const LinearOrder& order) {
    BivarPoly t;
    for (ElementSet b : m.bases()) {
        const ActivitySplit s = activity_split(m, b, order);
        t.add(s.internally_active.size(), s.externally_active.size(), 1);
    }
    return t;
}

std::vector<std::int64_t> f_vector(const Matroid& m) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(m.rank()) + 1, 0);
    for_each_subset(m.ground(), [&](ElementSet s) {
        if (m.is_independent(s)) ++f[static_cast<std::size_t>(s.size())];
    });
    return f;
}

UniPoly h_polynomial(const Matroid& m) {
    const auto f = f_vector(m);
    const int r = m.rank();
    UniPoly h(static_cast<std::size_t>(r) + 1, 0);
    for (int i = 0; i <= r; ++i) {
        const UniPoly p = binomial_power(-1, r - i);
        for (std::size_t k = 0; k < p.size(); ++k) h[k] += f[static_cast<std::size_t>(i)] * p[k];
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    return h;
}

}  // namespace matlin
