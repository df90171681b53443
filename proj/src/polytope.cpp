#include "matlin/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "matlin/orders.hpp"

namespace matlin {

namespace {

std::size_t coord(ElementSet ground, int e) { return static_cast<std::size_t>((ground & ElementSet::range(0, e - 1)).size()); }

std::map<ElementSet, Rat> cocircuit_counts(const Matroid& m) {
    std::map<ElementSet, Rat> z;
    for_each_subset(m.ground(), [&](ElementSet s) {
        long count = 0;
        for (ElementSet d : m.cocircuits())
            if (d.intersects(s)) ++count;
        z.emplace(s, Rat(count));
    });
    return z;
}

std::vector<Point> sweep_vertices(ElementSet ground, std::size_t jobs, const auto& vertex) {
    auto blocks = sweep_orders<std::set<Point>>(ground, jobs, [&](std::set<Point>& acc, const LinearOrder& o) {
        acc.insert(vertex(o));
    });
    std::set<Point> all;
    for (auto& b : blocks) all.merge(b);
    return {all.begin(), all.end()};
}

}  // namespace

Point vertex_of(const GenPermutahedron& p, const LinearOrder& order) {
    Point x(static_cast<std::size_t>(p.ground.size()));
    ElementSet prefix;
    for (int e : order.sequence()) {
        const ElementSet next = prefix.with(e);
        x[coord(p.ground, e)] = p.z_of(next) - p.z_of(prefix);
        prefix = next;
    }
    return x;
}

Point vertex_for_order(const Matroid& m, const LinearOrder& order) {
    Point d(static_cast<std::size_t>(m.size()), Rat(0));
    for (ElementSet c : m.cocircuits()) d[coord(m.ground(), order.min_of(c))] += 1;
    ElementSet support;
    for (int e : m.ground())
        if (d[coord(m.ground(), e)] != 0) support = support.with(e);
    if (support != m.min_basis(order))
        throw std::logic_error("vertex support " + support.to_string() + " is not the minimal basis");
    return d;
}

GenPermutahedron cocircuit_polytope(const Matroid& m, std::size_t jobs) {
    GenPermutahedron p{m.ground(), cocircuit_counts(m), {}};
    p.vertices = sweep_vertices(m.ground(), jobs, [&](const LinearOrder& o) { return vertex_for_order(m, o); });
    return p;
}

GenPermutahedron matroid_polytope(const Matroid& m, std::size_t jobs) {
    GenPermutahedron p{m.ground(), {}, {}};
    for_each_subset(m.ground(), [&](ElementSet s) { p.z.emplace(s, Rat(m.rank_of(s))); });
    std::set<Point> indicators;
    for (ElementSet b : m.bases()) {
        Point x(static_cast<std::size_t>(m.size()), Rat(0));
        for (int e : b) x[coord(m.ground(), e)] = 1;
        indicators.insert(std::move(x));
    }
    p.vertices.assign(indicators.begin(), indicators.end());
    if (sweep_vertices(m.ground(), jobs, [&](const LinearOrder& o) { return vertex_of(p, o); }) != p.vertices)
        throw std::logic_error("order sweep of the matroid polytope does not give the basis indicators");
    return p;
}

int dimension(const GenPermutahedron& p) {
    if (p.vertices.empty()) throw EmptyPolytope("polytope has no vertices");
    const Point& base = p.vertices.front();
    RatMatrix diffs(p.vertices.size() - 1, base.size());
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
        for (std::size_t j = 0; j < base.size(); ++j) diffs(i - 1, j) = p.vertices[i][j] - base[j];
    return static_cast<int>(rank(diffs));
}

bool satisfies_hrep(const GenPermutahedron& p, const Point& x) {
    bool ok = true;
    for_each_subset(p.ground, [&](ElementSet s) {
        Rat sum = 0;
        for (int e : s) sum += x[coord(p.ground, e)];
        if (s == p.ground ? sum != p.z_of(s) : sum > p.z_of(s)) ok = false;
    });
    return ok;
}

SubmodularityWitness check_submodular(ElementSet ground, const std::map<ElementSet, Rat>& f) {
    SubmodularityWitness w;
    for_each_subset(ground, [&](ElementSet s) {
        if (!w.holds) return;
        const ElementSet rest = ground - s;
        for (int a : rest)
            for (int b : rest) {
                if (b <= a || !w.holds) continue;
                if (f.at(s.with(a)) + f.at(s.with(b)) < f.at(s.with(a).with(b)) + f.at(s)) w = {false, s, a, b};
            }
    });
    return w;
}

SubmodularityWitness summand_check(const Matroid& m) {
    std::map<ElementSet, Rat> q = cocircuit_counts(m);
    for (auto& [s, v] : q) v -= m.rank_of(s);
    return check_submodular(m.ground(), q);
}

}  // namespace matlin
