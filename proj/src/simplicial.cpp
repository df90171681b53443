#include "matlin/simplicial.hpp"

#include <algorithm>
#include <stdexcept>

namespace matlin {

namespace {

constexpr std::uint64_t low_mask = (std::uint64_t{1} << y_offset) - 1;

}  // namespace

ElementSet xvars(ElementSet s) { return s; }

ElementSet yvars(ElementSet s) { return ElementSet(s.bits() << y_offset); }

ElementSet xyvars(ElementSet s) { return xvars(s) | yvars(s); }

std::string variable_name(int v) {
    return (is_yvar(v) ? "y" : "x") + std::to_string(element_of(v));
}

std::string monomial_string(ElementSet m) {
    if (m.empty()) return "1";
    std::string out;
    for (int v : m) {
        if (!out.empty()) out += '*';
        out += variable_name(v);
    }
    return out;
}

std::vector<ElementSet> minimal_sets(std::vector<ElementSet> sets) {
    std::sort(sets.begin(), sets.end(), [](ElementSet a, ElementSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<ElementSet> kept;
    for (ElementSet s : sets) {
        bool minimal = true;
        for (ElementSet k : kept)
            if (k.subset_of(s)) { minimal = false; break; }
        if (minimal) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<ElementSet> maximal_sets(std::vector<ElementSet> sets) {
    std::sort(sets.begin(), sets.end(), [](ElementSet a, ElementSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a.bits() < b.bits();
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<ElementSet> kept;
    for (ElementSet s : sets) {
        bool maximal = true;
        for (ElementSet k : kept)
            if (s.subset_of(k)) { maximal = false; break; }
        if (maximal) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<ElementSet> minimal_transversals(const std::vector<ElementSet>& family) {
    std::vector<ElementSet> current{ElementSet{}};
    for (ElementSet edge : minimal_sets(family)) {
        if (edge.empty()) return {};
        std::vector<ElementSet> next;
        for (ElementSet t : current) {
            if (t.intersects(edge)) {
                next.push_back(t);
            } else {
                for (int v : edge) next.push_back(t.with(v));
            }
        }
        current = minimal_sets(std::move(next));
    }
    return current;
}

SimplicialComplex::SimplicialComplex(ElementSet vertices, std::vector<ElementSet> facets)
    : vertices_(vertices), facets_(maximal_sets(std::move(facets))) {
    for (ElementSet f : facets_)
        if (!f.subset_of(vertices_)) throw std::invalid_argument("facet " + f.to_string() + " uses unknown vertices");
}

bool SimplicialComplex::is_face(ElementSet s) const {
    return std::any_of(facets_.begin(), facets_.end(), [s](ElementSet f) { return s.subset_of(f); });
}

int SimplicialComplex::dimension() const {
    int d = -2;
    for (ElementSet f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

SimplicialComplex SimplicialComplex::restricted(ElementSet sigma) const {
    std::vector<ElementSet> fs;
    fs.reserve(facets_.size());
    for (ElementSet f : facets_) fs.push_back(f & sigma);
    return SimplicialComplex(vertices_ & sigma, std::move(fs));
}

SquarefreeMonomialIdeal::SquarefreeMonomialIdeal(ElementSet variables, std::vector<ElementSet> generators)
    : variables_(variables), gens_(minimal_sets(std::move(generators))) {
    for (ElementSet g : gens_)
        if (!g.subset_of(variables_))
            throw std::invalid_argument("generator " + monomial_string(g) + " uses unknown variables");
}

bool SquarefreeMonomialIdeal::contains(ElementSet monomial) const {
    return std::any_of(gens_.begin(), gens_.end(), [monomial](ElementSet g) { return g.subset_of(monomial); });
}

std::vector<std::uint64_t> SquarefreeMonomialIdeal::key() const {
    std::vector<std::uint64_t> k;
    k.reserve(gens_.size());
    for (ElementSet g : gens_) k.push_back(g.bits());
    std::sort(k.begin(), k.end());
    return k;
}

std::string SquarefreeMonomialIdeal::to_string() const {
    if (gens_.empty()) return "<0>";
    std::string out = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += monomial_string(gens_[i]);
    }
    return out + ">";
}

SquarefreeMonomialIdeal stanley_reisner(const SimplicialComplex& delta) {
    std::vector<ElementSet> complements;
    complements.reserve(delta.facets().size());
    for (ElementSet f : delta.facets()) complements.push_back(delta.vertices() - f);
    if (complements.empty()) return SquarefreeMonomialIdeal(delta.vertices(), {ElementSet{}});
    return SquarefreeMonomialIdeal(delta.vertices(), minimal_transversals(complements));
}

SimplicialComplex complex_of(const SquarefreeMonomialIdeal& ideal) {
    std::vector<ElementSet> facets;
    for (ElementSet p : minimal_transversals(ideal.generators())) facets.push_back(ideal.variables() - p);
    return SimplicialComplex(ideal.variables(), std::move(facets));
}

std::vector<ElementSet> primary_decomposition(const SquarefreeMonomialIdeal& ideal) {
    std::vector<ElementSet> primes = minimal_transversals(ideal.generators());
    if (minimal_transversals(primes) != ideal.generators())
        throw std::logic_error("primary components do not intersect to " + ideal.to_string());
    return primes;
}

SimplicialComplex independence_complex(const Matroid& m) {
    return SimplicialComplex(xvars(m.ground()), m.bases());
}

std::vector<ElementSet> external_activity_nonfaces(const Matroid& m, const LinearOrder& order) {
    std::vector<ElementSet> out;
    for (ElementSet c : m.circuits()) {
        const int lo = order.min_of(c);
        out.push_back(ElementSet{xvar(lo)} | yvars(c.without(lo)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex external_activity_complex(const Matroid& m, const LinearOrder& order) {
    std::vector<ElementSet> facets;
    for (ElementSet b : m.bases()) {
        const ActivitySplit s = activity_split(m, b, order);
        facets.push_back(xvars(b | s.externally_passive) | yvars(b | s.externally_active));
    }
    SimplicialComplex delta(xyvars(m.ground()), std::move(facets));
    if (stanley_reisner(delta).generators() != minimal_sets(external_activity_nonfaces(m, order)))
        throw std::logic_error("facet and non-face descriptions of the external activity complex disagree");
    return delta;
}

SquarefreeMonomialIdeal identify_y_with_x(const SquarefreeMonomialIdeal& ideal) {
    auto fold = [](ElementSet s) { return ElementSet((s.bits() & low_mask) | (s.bits() >> y_offset)); };
    std::vector<ElementSet> gens;
    for (ElementSet g : ideal.generators()) gens.push_back(fold(g));
    return SquarefreeMonomialIdeal(fold(ideal.variables()), std::move(gens));
}

SquarefreeMonomialIdeal set_x_to_one(const SquarefreeMonomialIdeal& ideal) {
    auto drop = [](ElementSet s) { return ElementSet(s.bits() & ~low_mask); };
    std::vector<ElementSet> gens;
    for (ElementSet g : ideal.generators()) gens.push_back(drop(g));
    return SquarefreeMonomialIdeal(drop(ideal.variables()), std::move(gens));
}

}  // namespace matlin
