#include "matlin/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace matlin {

struct Matroid::Data {
    ElementSet ground;
    int rank = 0;
    std::vector<ElementSet> bases;
    std::vector<std::uint8_t> rank_table;  // indexed by raw subset bits

    mutable std::once_flag circuits_once, cocircuits_once, flats_once;
    mutable std::vector<ElementSet> circuits;
    mutable std::vector<ElementSet> cocircuits;
    mutable FlatLattice flats;
};

namespace {

void check_ground(ElementSet ground) {
    if (ground.empty()) throw EmptyGroundSet("matroid needs a nonempty ground set");
    if (ground.max() > Matroid::max_label)
        throw std::invalid_argument("ground-set labels above " + std::to_string(Matroid::max_label) + " are not supported");
}

std::vector<std::uint8_t> build_rank_table(ElementSet ground, const std::vector<ElementSet>& bases) {
    const std::size_t size = ground.empty() ? 1 : std::size_t{1} << (ground.max() + 1);
    std::vector<std::uint8_t> indep(size, 0);
    for (ElementSet b : bases)
        for_each_subset(b, [&](ElementSet s) { indep[s.bits()] = 1; });

    std::vector<std::uint8_t> rank(size, 0);
    for_each_subset(ground, [&](ElementSet s) {
        if (indep[s.bits()]) {
            rank[s.bits()] = static_cast<std::uint8_t>(s.size());
            return;
        }
        std::uint8_t best = 0;
        for (int e : s) best = std::max(best, rank[s.without(e).bits()]);
        rank[s.bits()] = best;
    });
    return rank;
}

void for_each_k_subset(ElementSet ground, int k, auto&& fn) {
    for_each_subset(ground, [&](ElementSet s) {
        if (s.size() == k) fn(s);
    });
}

}  // namespace

std::size_t FlatLattice::index_of(ElementSet flat) const {
    for (std::size_t i = 0; i < flats.size(); ++i)
        if (flats[i] == flat) return i;
    throw std::invalid_argument("not a flat: " + flat.to_string());
}

Matroid Matroid::from_trusted_bases(ElementSet ground, std::vector<ElementSet> bases) {
    // Minors may legitimately end up with an empty ground set.
    if (!ground.empty()) check_ground(ground);
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    auto d = std::make_shared<Data>();
    d->ground = ground;
    d->rank = bases.front().size();
    d->bases = std::move(bases);
    d->rank_table = build_rank_table(ground, d->bases);
    return Matroid(std::move(d));
}

Matroid Matroid::from_matrix(const RatMatrix& m) {
    std::vector<int> labels(m.cols());
    std::iota(labels.begin(), labels.end(), 1);
    return from_matrix(m, labels);
}

Matroid Matroid::from_matrix(const RatMatrix& m, std::span<const int> labels) {
    if (labels.size() != m.cols()) throw std::invalid_argument("one label per column required");
    if (m.cols() == 0) throw EmptyGroundSet("matrix has no columns");
    const ElementSet ground(labels);
    if (ground.size() != static_cast<int>(labels.size())) throw std::invalid_argument("duplicate column labels");
    check_ground(ground);

    std::array<std::size_t, ElementSet::capacity> column_of{};
    for (std::size_t j = 0; j < labels.size(); ++j) column_of[static_cast<std::size_t>(labels[j])] = j;

    const int r = static_cast<int>(matlin::rank(m));
    std::vector<ElementSet> bases;
    for_each_k_subset(ground, r, [&](ElementSet s) {
        std::vector<std::size_t> cols;
        for (int e : s) cols.push_back(column_of[static_cast<std::size_t>(e)]);
        if (static_cast<int>(column_rank(m, cols)) == r) bases.push_back(s);
    });
    return from_trusted_bases(ground, std::move(bases));
}

Matroid Matroid::from_bases(ElementSet ground, std::vector<ElementSet> bases) {
    check_ground(ground);
    if (bases.empty()) throw AxiomViolation("a matroid needs at least one basis", {}, {}, -1);
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    for (ElementSet b : bases) {
        if (!b.subset_of(ground))
            throw AxiomViolation("basis " + b.to_string() + " leaves the ground set", b, b, -1);
        if (b.size() != bases.front().size())
            throw AxiomViolation("bases " + bases.front().to_string() + " and " + b.to_string() + " differ in size",
                                 bases.front(), b, -1);
    }
    const std::set<ElementSet> lookup(bases.begin(), bases.end());
    for (ElementSet b1 : bases)
        for (ElementSet b2 : bases)
            for (int x : b1 - b2) {
                bool repaired = false;
                for (int y : b2 - b1)
                    if (lookup.count(b1.without(x).with(y))) { repaired = true; break; }
                if (!repaired)
                    throw AxiomViolation("basis exchange fails for " + b1.to_string() + ", " + b2.to_string() +
                                             ", x=" + std::to_string(x),
                                         b1, b2, x);
            }
    return from_trusted_bases(ground, std::move(bases));
}

ElementSet Matroid::ground() const { return d_->ground; }
int Matroid::rank() const { return d_->rank; }
const std::vector<ElementSet>& Matroid::bases() const { return d_->bases; }

int Matroid::rank_of(ElementSet s) const {
    if (!s.subset_of(d_->ground)) throw ElementMembership("set " + s.to_string() + " is not inside the ground set");
    return d_->rank_table[s.bits()];
}

bool Matroid::is_independent(ElementSet s) const { return rank_of(s) == s.size(); }
bool Matroid::is_basis(ElementSet s) const { return s.size() == d_->rank && is_independent(s); }

ElementSet Matroid::closure(ElementSet s) const {
    const int r = rank_of(s);
    ElementSet out = s;
    for (int e : d_->ground - s)
        if (rank_of(s.with(e)) == r) out = out.with(e);
    return out;
}

const std::vector<ElementSet>& Matroid::circuits() const {
    std::call_once(d_->circuits_once, [this] {
        std::vector<ElementSet> out;
        for_each_subset(d_->ground, [&](ElementSet s) {
            if (s.empty() || is_independent(s)) return;
            for (int e : s)
                if (!is_independent(s.without(e))) return;
            out.push_back(s);
        });
        std::sort(out.begin(), out.end());
        d_->circuits = std::move(out);
    });
    return d_->circuits;
}

const std::vector<ElementSet>& Matroid::cocircuits() const {
    std::call_once(d_->cocircuits_once, [this] {
        std::vector<ElementSet> out;
        for (ElementSet f : flat_lattice().flats)
            if (rank_of(f) == d_->rank - 1) out.push_back(d_->ground - f);
        std::sort(out.begin(), out.end());
        d_->cocircuits = std::move(out);
    });
    return d_->cocircuits;
}

const FlatLattice& Matroid::flat_lattice() const {
    std::call_once(d_->flats_once, [this] {
        FlatLattice lat;
        std::vector<std::pair<int, ElementSet>> found;
        for_each_subset(d_->ground, [&](ElementSet s) {
            if (is_flat(s)) found.emplace_back(rank_of(s), s);
        });
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
        for (const auto& [r, f] : found) {
            lat.flats.push_back(f);
            lat.ranks.push_back(r);
        }
        const std::size_t k = lat.flats.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (lat.ranks[j] == lat.ranks[i] + 1 && lat.flats[i].subset_of(lat.flats[j])) lat.covers.emplace_back(i, j);

        // Top-down: mu(top, top) = 1, mu(F, top) = -sum over G > F of mu(G, top).
        lat.mobius_top.assign(k, 0);
        for (std::size_t i = k; i-- > 0;) {
            if (i == k - 1) {
                lat.mobius_top[i] = 1;
                continue;
            }
            std::int64_t sum = 0;
            for (std::size_t j = i + 1; j < k; ++j)
                if (lat.flats[i] != lat.flats[j] && lat.flats[i].subset_of(lat.flats[j])) sum += lat.mobius_top[j];
            lat.mobius_top[i] = -sum;
        }
        d_->flats = std::move(lat);
    });
    return d_->flats;
}

Matroid Matroid::dual() const {
    std::vector<ElementSet> bases;
    bases.reserve(d_->bases.size());
    for (ElementSet b : d_->bases) bases.push_back(d_->ground - b);
    return from_trusted_bases(d_->ground, std::move(bases));
}

Matroid Matroid::deletion(ElementSet a) const {
    if (!a.subset_of(d_->ground)) throw ElementMembership("deleted set is not inside the ground set");
    const ElementSet rest = d_->ground - a;
    const int r = rank_of(rest);
    std::vector<ElementSet> bases;
    for (ElementSet b : d_->bases)
        if ((b - a).size() == r) bases.push_back(b - a);
    return from_trusted_bases(rest, std::move(bases));
}

Matroid Matroid::contraction(ElementSet a) const {
    if (!a.subset_of(d_->ground)) throw ElementMembership("contracted set is not inside the ground set");
    const int ra = rank_of(a);
    std::vector<ElementSet> bases;
    for (ElementSet b : d_->bases)
        if ((b & a).size() == ra) bases.push_back(b - a);
    return from_trusted_bases(d_->ground - a, std::move(bases));
}

ElementSet Matroid::loops() const {
    ElementSet out;
    for (int e : d_->ground)
        if (rank_of(ElementSet{e}) == 0) out = out.with(e);
    return out;
}

ElementSet Matroid::coloops() const {
    ElementSet out;
    for (int e : d_->ground)
        if (rank_of(d_->ground.without(e)) < d_->rank) out = out.with(e);
    return out;
}

std::vector<ElementSet> Matroid::connected_components() const {
    std::array<int, ElementSet::capacity> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (ElementSet c : circuits()) {
        const int root = find(c.min());
        for (int e : c) parent[static_cast<std::size_t>(find(e))] = root;
    }
    std::vector<ElementSet> comps;
    std::array<int, ElementSet::capacity> slot;
    slot.fill(-1);
    for (int e : d_->ground) {
        const int root = find(e);
        if (slot[static_cast<std::size_t>(root)] < 0) {
            slot[static_cast<std::size_t>(root)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        auto& c = comps[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])];
        c = c.with(e);
    }
    return comps;  // ground iterates in increasing label order, so sorted by min
}

ElementSet Matroid::blue_rule_basis(const LinearOrder& order) const {
    ElementSet blue;
    bool changed = true;
    while (changed) {
        changed = false;
        for (ElementSet d : cocircuits()) {
            if (d.intersects(blue)) continue;
            blue = blue.with(order.min_of(d));
            changed = true;
        }
    }
    return blue;
}

ElementSet Matroid::min_basis(const LinearOrder& order) const {
    if (order.ground() != d_->ground) throw std::invalid_argument("order must be on the matroid's ground set");
    ElementSet basis;
    for (int e : order.sequence())
        if (is_independent(basis.with(e))) basis = basis.with(e);
    if (basis != blue_rule_basis(order))
        throw std::logic_error("greedy and blue-rule minimum bases disagree");
    return basis;
}

bool Matroid::operator==(const Matroid& o) const {
    return d_->ground == o.d_->ground && d_->bases == o.d_->bases;
}

Matroid uniform_matroid(int r, int n) {
    const ElementSet ground = ElementSet::range(1, n);
    std::vector<ElementSet> bases;
    for_each_k_subset(ground, r, [&](ElementSet s) { bases.push_back(s); });
    return Matroid::from_bases(ground, std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
    if (a.ground().intersects(b.ground())) throw std::invalid_argument("direct sum needs disjoint ground sets");
    std::vector<ElementSet> bases;
    for (ElementSet x : a.bases())
        for (ElementSet y : b.bases()) bases.push_back(x | y);
    return Matroid::from_bases(a.ground() | b.ground(), std::move(bases));
}

}  // namespace matlin
