#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "matlin/parallel.hpp"
#include "matlin/rational.hpp"
#include "matlin/simplicial.hpp"

namespace matlin {

namespace {

struct Overflow {};

template <typename Int>
using SparseColumn = std::vector<std::pair<std::uint32_t, Int>>;

// a*x - b*y with overflow detection for the 64-bit path.
inline std::int64_t cross(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
    const __int128 v = static_cast<__int128>(a) * x - static_cast<__int128>(b) * y;
    if (v > INT64_MAX || v < -INT64_MAX) throw Overflow{};
    return static_cast<std::int64_t>(v);
}
inline BigInt cross(const BigInt& a, const BigInt& x, const BigInt& b, const BigInt& y) { return a * x - b * y; }

inline std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd_abs(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

// Rank over Q by column reduction on the lowest (largest-index) nonzero
// row. Columns are scaled by their content after each step, which keeps
// boundary-matrix entries small in practice.
template <typename Int>
std::size_t sparse_rank(std::vector<SparseColumn<Int>> cols, std::size_t n_rows) {
    std::vector<std::int64_t> owner(n_rows, -1);
    std::vector<SparseColumn<Int>> reduced;
    SparseColumn<Int> tmp;
    for (auto& v : cols) {
        while (!v.empty()) {
            const std::uint32_t p = v.back().first;
            if (owner[p] < 0) {
                owner[p] = static_cast<std::int64_t>(reduced.size());
                reduced.push_back(std::move(v));
                break;
            }
            const auto& u = reduced[static_cast<std::size_t>(owner[p])];
            const Int a = u.back().second;
            const Int b = v.back().second;
            tmp.clear();
            std::size_t i = 0, j = 0;
            while (i < v.size() || j < u.size()) {
                if (j == u.size() || (i < v.size() && v[i].first < u[j].first)) {
                    tmp.emplace_back(v[i].first, cross(a, v[i].second, Int(0), Int(0)));
                    ++i;
                } else if (i == v.size() || u[j].first < v[i].first) {
                    tmp.emplace_back(u[j].first, cross(Int(0), Int(0), b, u[j].second));
                    ++j;
                } else {
                    Int c = cross(a, v[i].second, b, u[j].second);
                    if (c != 0) tmp.emplace_back(v[i].first, std::move(c));
                    ++i;
                    ++j;
                }
            }
            Int g = 0;
            for (const auto& e : tmp) g = gcd_abs(g, e.second);
            if (g != 0 && g != 1 && g != -1)
                for (auto& e : tmp) e.second /= g;
            v.swap(tmp);
        }
    }
    return reduced.size();
}

std::size_t rank_exact(const std::vector<SparseColumn<std::int64_t>>& cols, std::size_t n_rows) {
    try {
        return sparse_rank<std::int64_t>(cols, n_rows);
    } catch (const Overflow&) {
        std::vector<SparseColumn<BigInt>> big;
        big.reserve(cols.size());
        for (const auto& c : cols) {
            SparseColumn<BigInt> b;
            for (const auto& [r, x] : c) b.emplace_back(r, BigInt(x));
            big.push_back(std::move(b));
        }
        return sparse_rank<BigInt>(std::move(big), n_rows);
    }
}

// Reduced homology of the complex generated by `facets`, all subsets of
// `vertices`. Vertices are relabelled 0..k-1 so faces fit in 32 bits.
std::map<int, std::int64_t> homology_of_facets(ElementSet vertices, const std::vector<ElementSet>& facets) {
    std::map<int, std::int64_t> out;
    if (facets.empty()) return out;  // void complex
    std::array<int, ElementSet::capacity> relabel{};
    int k = 0;
    for (int v : vertices) relabel[static_cast<std::size_t>(v)] = k++;
    if (k > 31) throw std::length_error("homology supports at most 31 vertices");

    std::vector<std::uint32_t> all;
    for (ElementSet f : facets) {
        std::uint32_t m = 0;
        for (int v : f) m |= std::uint32_t{1} << relabel[static_cast<std::size_t>(v)];
        for_each_subset(ElementSet(m), [&](ElementSet s) { all.push_back(static_cast<std::uint32_t>(s.bits())); });
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    int top = 0;
    for (std::uint32_t f : all) top = std::max(top, std::popcount(f));
    // by_size[s] holds the faces with s vertices, i.e. dimension s - 1.
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(top) + 1);
    for (std::uint32_t f : all) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

    // rank_d[s] = rank of the boundary from size-s faces to size-(s-1) faces.
    std::vector<std::size_t> rank_d(static_cast<std::size_t>(top) + 2, 0);
    for (int s = 1; s <= top; ++s) {
        const auto& rows = by_size[static_cast<std::size_t>(s) - 1];
        std::vector<SparseColumn<std::int64_t>> cols;
        cols.reserve(by_size[static_cast<std::size_t>(s)].size());
        for (std::uint32_t f : by_size[static_cast<std::size_t>(s)]) {
            SparseColumn<std::int64_t> col;
            int j = 0;
            for (std::uint32_t rest = f; rest; rest &= rest - 1, ++j) {
                const std::uint32_t face = f & ~(rest & (~rest + 1));
                const auto it = std::lower_bound(rows.begin(), rows.end(), face);
                col.emplace_back(static_cast<std::uint32_t>(it - rows.begin()), (j % 2) ? -1 : 1);
            }
            std::sort(col.begin(), col.end());
            cols.push_back(std::move(col));
        }
        rank_d[static_cast<std::size_t>(s)] = rank_exact(cols, rows.size());
    }
    for (int s = 0; s <= top; ++s) {
        const auto f = static_cast<std::int64_t>(by_size[static_cast<std::size_t>(s)].size());
        const auto h = f - static_cast<std::int64_t>(rank_d[static_cast<std::size_t>(s)]) -
                       static_cast<std::int64_t>(rank_d[static_cast<std::size_t>(s) + 1]);
        if (h != 0) out[s - 1] = h;
    }
    return out;
}

std::vector<ElementSet> lcm_lattice(const std::vector<ElementSet>& gens) {
    std::unordered_set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> items{0};
    for (ElementSet g : gens) {
        const std::size_t n = items.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t u = items[i] | g.bits();
            if (seen.insert(u).second) items.push_back(u);
        }
    }
    std::vector<ElementSet> out;
    out.reserve(items.size());
    for (std::uint64_t u : items) out.emplace_back(u);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::map<int, std::int64_t> reduced_homology(const SimplicialComplex& delta) {
    return homology_of_facets(delta.vertices(), delta.facets());
}

void BettiTable::set(int i, ElementSet degree, std::int64_t beta) {
    if (beta == 0)
        entries_.erase({i, degree});
    else
        entries_[{i, degree}] = beta;
}

std::int64_t BettiTable::get(int i, ElementSet degree) const {
    auto it = entries_.find({i, degree});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::projective_dimension() const {
    int p = -1;
    for (const auto& [k, b] : entries_) p = std::max(p, k.first);
    return p;
}

std::vector<std::int64_t> BettiTable::totals() const {
    std::vector<std::int64_t> t(static_cast<std::size_t>(projective_dimension() + 1), 0);
    for (const auto& [k, b] : entries_) t[static_cast<std::size_t>(k.first)] += b;
    return t;
}

std::vector<std::vector<std::int64_t>> BettiTable::graded() const {
    const int width = projective_dimension() + 1;
    int height = 0;
    for (const auto& [k, b] : entries_) height = std::max(height, k.second.size() - k.first + 1);
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(height),
                                                std::vector<std::int64_t>(static_cast<std::size_t>(width), 0));
    for (const auto& [k, b] : entries_)
        rows[static_cast<std::size_t>(k.second.size() - k.first)][static_cast<std::size_t>(k.first)] += b;
    return rows;
}

std::optional<BettiTable> BettiTable::coarsened() const {
    BettiTable out;
    for (const auto& [k, b] : entries_) {
        const ElementSet x(k.second.bits() & ((std::uint64_t{1} << y_offset) - 1));
        const ElementSet y(k.second.bits() >> y_offset);
        if (x.intersects(y)) return std::nullopt;
        out.set(k.first, x | y, out.get(k.first, x | y) + b);
    }
    return out;
}

BettiTable hochster_betti(const SquarefreeMonomialIdeal& ideal, HochsterStrategy strategy, std::size_t jobs) {
    const SimplicialComplex delta = complex_of(ideal);
    const auto& gens = ideal.generators();
    if (strategy == HochsterStrategy::Auto)
        strategy = ideal.variables().size() <= 14 ? HochsterStrategy::Exhaustive : HochsterStrategy::LcmLattice;

    std::vector<ElementSet> degrees;
    if (strategy == HochsterStrategy::Exhaustive) {
        for_each_subset(ideal.variables(), [&](ElementSet sigma) {
            ElementSet covered;
            for (ElementSet g : gens)
                if (g.subset_of(sigma)) covered = covered | g;
            if (covered == sigma) degrees.push_back(sigma);
        });
        std::sort(degrees.begin(), degrees.end());
    } else {
        degrees = lcm_lattice(gens);
    }

    auto per_degree = parallel_map<std::map<int, std::int64_t>>(degrees.size(), jobs, [&](std::size_t i) {
        std::vector<ElementSet> fs;
        fs.reserve(delta.facets().size());
        for (ElementSet f : delta.facets()) fs.push_back(f & degrees[i]);
        return homology_of_facets(degrees[i], maximal_sets(std::move(fs)));
    });

    BettiTable table;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        for (const auto& [dim, h] : per_degree[i]) table.set(degrees[i].size() - dim - 1, degrees[i], h);
    return table;
}

BettiTable betti_from_mobius(const Matroid& m) {
    const FlatLattice& lat = m.flat_lattice();
    BettiTable table;
    for (std::size_t i = 0; i < lat.flats.size(); ++i) {
        const std::int64_t mu = lat.mobius_top[i];
        table.set(m.rank() - lat.ranks[i], m.ground() - lat.flats[i], mu < 0 ? -mu : mu);
    }
    return table;
}

CohenMacaulayReport is_cohen_macaulay(const SquarefreeMonomialIdeal& ideal, const BettiTable& betti) {
    int max_facet = 0;
    const SimplicialComplex delta = complex_of(ideal);
    for (ElementSet f : delta.facets()) max_facet = std::max(max_facet, f.size());
    const int codim = ideal.variables().size() - max_facet;
    const int projdim = betti.projective_dimension();
    return {codim == projdim, codim, projdim};
}

CohenMacaulayReport is_cohen_macaulay(const SquarefreeMonomialIdeal& ideal, HochsterStrategy strategy,
                                      std::size_t jobs) {
    return is_cohen_macaulay(ideal, hochster_betti(ideal, strategy, jobs));
}

}  // namespace matlin
