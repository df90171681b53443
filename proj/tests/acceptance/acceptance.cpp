// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "matlin/ideal.hpp"
#include "matlin/orders.hpp"
#include "matlin/polytope.hpp"
#include "oracles.hpp"

using namespace matlin;
using oracle::set;
using oracle::sets;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
}

Matroid example() { return Matroid::from_matrix(oracle::example_matrix()); }

const BivarPoly example_bidegree{{{3, 0}, 1}, {{2, 1}, 3}, {{1, 2}, 5}, {{0, 3}, 4}};

std::vector<HomogPolynomial> example_generators() {
    std::vector<HomogPolynomial> gens;
    for (const auto& f : cocircuit_forms(oracle::example_matrix())) gens.push_back(homogenize(f));
    return gens;
}

bool matroid_golden(std::string&) {
    const Matroid m = example();
    return m.bases() == sets({"123", "124", "134", "135", "145", "234", "235", "236", "245", "246", "346", "356",
                              "456"}) &&
           m.circuits() == sets({"16", "125", "256", "345", "1234", "2346"}) &&
           m.cocircuits() == sets({"34", "126", "235", "245", "1356", "1456"}) &&
           oracle::sorted(m.flat_lattice().flats) ==
               sets({"", "16", "2", "3", "4", "5", "1256", "136", "146", "23", "24", "345", "123456"}) &&
           f_vector(m) == std::vector<std::int64_t>{1, 6, 14, 13} && h_polynomial(m) == UniPoly{4, 5, 3, 1};
}

bool enumeration(std::string& detail) {
    const Matroid m = example();
    const InitialIdealCensus c = enumerate_initial_ideals(m);
    detail = std::to_string(c.count()) + " ideals, bound " + std::to_string(c.bound);
    const SquarefreeMonomialIdeal nat = initial_ideal(m, LinearOrder::natural(m.ground()));
    auto word = [](const char* xs, const char* ys) { return xvars(set(xs)) | yvars(set(ys)); };
    const std::vector<ElementSet> gens{word("1", "26"), word("1", "356"), word("1", "456"),
                                       word("2", "35"),  word("2", "45"),  word("3", "4")};
    const std::vector<ElementSet> comps{word("123", ""), word("12", "4"),  word("1", "34"),  word("13", "5"),
                                        word("1", "45"), word("", "234"), word("3", "25"),  word("23", "6"),
                                        word("", "245"), word("2", "46"), word("", "346"), word("3", "56"),
                                        word("", "456")};
    return c.count() == 72 && c.bound == 78 && oracle::sorted(nat.generators()) == oracle::sorted(gens) &&
           oracle::sorted(primary_decomposition(nat)) == oracle::sorted(comps);
}

bool degrees(std::string&) {
    const Matroid m = example();
    const Multidegree bases = bases_multidegree(m);
    if (bases.size() != 13) return false;
    for (const auto& ideal : enumerate_initial_ideals(m).ideals)
        if (multidegree(ideal) != bases || bidegree(ideal) != example_bidegree) return false;
    return true;
}

bool betti(std::string&) {
    const Matroid m = example();
    const BettiTable predicted = betti_from_mobius(m);
    for (const auto& ideal : enumerate_initial_ideals(m).ideals) {
        const BettiTable b = hochster_betti(ideal);
        const auto coarse = b.coarsened();
        if (!coarse || *coarse != predicted) return false;
        if (b.totals() != std::vector<std::int64_t>{1, 6, 9, 4}) return false;
        if (b.graded() != std::vector<std::vector<std::int64_t>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 3, 2, 0}, {0, 2, 7, 4}})
            return false;
        const CohenMacaulayReport cm = is_cohen_macaulay(ideal, b);
        if (!cm.cohen_macaulay || cm.projdim != 3 || cm.codim != 3) return false;
    }
    return true;
}

bool groebner(std::string& detail) {
    const Matroid m = example();
    const auto gens = example_generators();
    std::mt19937_64 rng(oracle::seed + 5);
    std::uniform_int_distribution<int> num(-1000, 1000), den(1, 13);
    std::set<std::vector<int>> orders;
    int realizations = 0;
    while (realizations < 60 || orders.size() < 20) {
        std::vector<Rat> w;
        std::set<Rat> seen;
        while (w.size() < 6) {
            const Rat x(num(rng), den(rng));
            if (seen.insert(x).second) w.push_back(x);
        }
        const TermOrder ord = TermOrder::from_x_weights(m.ground(), w);
        const LinearOrder induced = ord.induced_order(m.ground());
        const BuchbergerReport bb = buchberger_verify(gens, ord);
        if (!bb.groebner || !bb.reduced) return false;
        if (leading_term_ideal(gens, ord, xyvars(m.ground())) != initial_ideal(m, induced)) return false;
        orders.insert(induced.sequence());
        ++realizations;
    }
    detail = std::to_string(realizations) + " weights, " + std::to_string(orders.size()) + " orders";

    const TermOrder natural = TermOrder::realizing(LinearOrder::natural(m.ground()));
    const SquarefreeMonomialIdeal full = leading_term_ideal(gens, natural, xyvars(m.ground()));
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<HomogPolynomial> fewer = gens;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
        if (leading_term_ideal(fewer, natural, xyvars(m.ground())) == full) return false;
    }
    return minimally_generates(gens, natural);
}

bool polytope(std::string& detail) {
    const Matroid m = example();
    const GenPermutahedron p = cocircuit_polytope(m);
    detail = std::to_string(p.vertices.size()) + " vertices, dimension " + std::to_string(dimension(p));
    for (const Point& v : p.vertices) {
        Rat sum = 0;
        ElementSet support;
        std::size_t i = 0;
        for (int e : m.ground()) {
            sum += v[i];
            if (v[i++] != 0) support = support.with(e);
        }
        if (sum != 6 || !satisfies_hrep(p, v) || !m.is_basis(support)) return false;
    }
    return p.vertices.size() == 72 && dimension(p) == 5 && summand_check(m).holds;
}

bool affine_table(std::string& detail) {
    struct Row {
        std::vector<Rat> b;
        std::size_t affine, hom;
    };
    const std::vector<Row> table = {{{1, 0, 1}, 124, 144},
                                    {{2, 2, 3}, 114, 156},
                                    {{1, -1, 1}, 111, 150},
                                    {{1, 2, 3}, 107, 162},
                                    {{0, 0, 0}, 72, 72}};
    bool ok = true;
    for (const Row& row : table) {
        const MatroidTriple t = MatroidTriple::from_system(oracle::example_matrix(), row.b);
        const std::size_t affine = enumerate_initial_ideals(t).count();
        const std::size_t hom = enumerate_initial_ideals(t.hom).count();
        detail += (detail.empty() ? "" : " ") + std::to_string(affine) + "/" + std::to_string(hom);
        ok = ok && affine == row.affine && hom == row.hom;
    }
    return ok;
}

bool affine_bidegrees_check(std::string&) {
    const MatroidTriple t = MatroidTriple::from_system(oracle::example_matrix(), std::vector<Rat>{1, 0, 1});
    const BivarPoly bottom{{{1, 2}, 3}, {{0, 3}, 10}};
    const AffineBidegrees closed = affine_bidegrees(t);
    if (closed.top != example_bidegree || closed.bottom != bottom) return false;
    bool ok = true;
    sweep_orders<int>(t.m.ground(), 1, [&](int&, const LinearOrder& rest) {
        std::vector<int> first{0}, last = rest.sequence();
        first.insert(first.end(), last.begin(), last.end());
        last.push_back(0);
        ok = ok && bidegree(initial_ideal(t, LinearOrder(last))) == closed.top &&
             bidegree(initial_ideal(t, LinearOrder(first))) == closed.bottom;
    });
    return ok;
}

/// Each subset of the ground set lies in exactly one interval
/// [B - IA(B), B + EA(B)].
bool crapo_partition(const Matroid& m, const LinearOrder& o) {
    const ElementSet g = m.ground();
    std::vector<int> hits(std::size_t{1} << m.size(), 0);
    const std::vector<int> labels = g.elements();
    auto index = [&](ElementSet s) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (s.contains(labels[i])) k |= std::size_t{1} << i;
        return k;
    };
    for (ElementSet b : m.bases()) {
        const ActivitySplit s = activity_split(m, b, o);
        const ElementSet free = s.internally_active | s.externally_active;
        for_each_subset(free, [&](ElementSet f) { ++hits[index((b - (f & s.internally_active)) | (f & s.externally_active))]; });
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool property_suite(std::string& detail) {
    std::mt19937_64 rng(oracle::seed + 9);
    int matrices = 0;
    std::size_t orders = 0;
    for (; matrices < 200; ++matrices) {
        const int n = 1 + matrices % 7;
        const int rows = 1 + static_cast<int>(rng() % 4);
        const RatMatrix a = oracle::random_matrix(rng, rows, n);
        const Matroid m = Matroid::from_matrix(a);

        for (ElementSet c : m.circuits())
            for (ElementSet d : m.cocircuits())
                if ((c & d).size() == 1) return false;

        // Bjorner: homology of IN(M*) sits in dimension n - r - 1.
        const auto h = reduced_homology(independence_complex(m.dual()));
        const std::int64_t mu = m.flat_lattice().mobius_top.front();
        const std::int64_t rank = m.loops().empty() ? (mu < 0 ? -mu : mu) : 0;
        for (const auto& [d, r] : h)
            if (d != m.size() - m.rank() - 1 || r != rank) return false;
        if (rank != 0 && h.empty()) return false;

        const BivarPoly t = tutte(m);
        if (t != oracle::tutte(m.ground(), oracle::rank_of_matrix(a))) return false;
        bool ok = true;
        sweep_orders<int>(m.ground(), 1, [&](int&, const LinearOrder& o) {
            if (!ok) return;
            ++orders;
            ok = tutte_via_activities(m, o) == t && crapo_partition(m, o);
            if (!ok) return;
            // Built from facets and checked against the circuit non-faces.
            const SquarefreeMonomialIdeal sr = stanley_reisner(external_activity_complex(m, o));
            ok = oracle::sorted(sr.generators()) == oracle::sorted(external_activity_nonfaces(m, o));
        });
        if (!ok) return false;

        for (const auto& ideal : enumerate_initial_ideals(m).ideals)
            if (!is_cohen_macaulay(ideal).cohen_macaulay) return false;

        // Affine Betti tables do not depend on b.
        const BettiTable predicted = betti_from_mobius(m);
        for (int k = 0; k < 3; ++k) {
            const std::vector<Rat> b = k == 0 ? std::vector<Rat>(a.rows(), Rat(0)) : oracle::random_consistent_rhs(rng, a);
            const MatroidTriple tr = MatroidTriple::from_system(a, b);
            std::vector<int> seq = tr.hom.ground().elements();
            std::shuffle(seq.begin(), seq.end(), rng);
            const SquarefreeMonomialIdeal in = initial_ideal(tr, LinearOrder(seq));
            const BettiTable fine = hochster_betti(in);
            const auto coarse = fine.coarsened();
            if (!coarse || *coarse != predicted || !is_cohen_macaulay(in, fine).cohen_macaulay) return false;
        }
    }
    detail = std::to_string(matrices) + " matrices, " + std::to_string(orders) + " orders";
    return true;
}

bool determinism(std::string&) {
    std::string first;
    for (const char* jobs : {"1", "2", "8"}) {
        std::ostringstream out, err;
        if (cli::run({"selftest", "--format", "json"}, out, err, jobs) != cli::exit_ok) return false;
        if (first.empty())
            first = out.str();
        else if (out.str() != first)
            return false;
    }
    return !first.empty();
}

}  // namespace

int main() {
    criterion(1, "matroid golden set", matroid_golden);
    criterion(2, "initial ideal enumeration", enumeration);
    criterion(3, "degree invariance", degrees);
    criterion(4, "Betti numbers and Cohen-Macaulay", betti);
    criterion(5, "Groebner bases under random weights", groebner);
    criterion(6, "cocircuit polytope", polytope);
    criterion(7, "affine initial ideal counts", affine_table);
    criterion(8, "affine bidegrees", affine_bidegrees_check);
    criterion(9, "random property suite", property_suite);
    criterion(10, "selftest determinism", determinism);
    return failures == 0 ? 0 : 1;
}
