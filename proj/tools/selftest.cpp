#include <algorithm>
#include <set>

#include "cli.hpp"
#include "matlin/parallel.hpp"

namespace matlin::cli {

namespace {

RatMatrix example_matrix() {
    const int rows[3][6] = {{1, 1, 0, 0, 0, 1}, {0, 1, -1, 0, 1, 0}, {0, 0, 1, 1, 0, 0}};
    RatMatrix a(3, 6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j) a(i, j) = Rat(rows[i][j]);
    return a;
}

/// "126" -> {1, 2, 6}; labels are single digits here.
std::vector<ElementSet> sets(std::initializer_list<const char*> words) {
    std::vector<ElementSet> out;
    for (const char* w : words) {
        ElementSet s;
        for (const char* c = w; *c; ++c) s = s.with(*c - '0');
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ElementSet> sorted(std::vector<ElementSet> v) {
    std::sort(v.begin(), v.end());
    return v;
}

class Checks {
public:
    void add(const std::string& name, bool pass) {
        list_.push_back({{"name", name}, {"pass", pass}});
        passed_ += pass ? 1 : 0;
    }
    Json report() const {
        return {{"command", "selftest"},
                {"checks", list_},
                {"passed", passed_},
                {"total", list_.size()}};
    }
    bool all() const { return passed_ == static_cast<int>(list_.size()); }

private:
    Json list_ = Json::array();
    int passed_ = 0;
};

}  // namespace

SelftestResult selftest(std::size_t jobs) {
    Checks ck;
    const RatMatrix a = example_matrix();
    const Matroid m = Matroid::from_matrix(a);
    const LinearOrder natural = LinearOrder::natural(m.ground());

    ck.add("bases", m.bases() == sets({"123", "124", "134", "135", "145", "234", "235", "236", "245", "246", "346",
                                       "356", "456"}));
    ck.add("circuits", m.circuits() == sets({"16", "125", "256", "345", "1234", "2346"}));
    ck.add("cocircuits", m.cocircuits() == sets({"34", "126", "235", "245", "1356", "1456"}));
    ck.add("flats", sorted(m.flat_lattice().flats) ==
                        sets({"", "16", "2", "3", "4", "5", "1256", "136", "146", "23", "24", "345", "123456"}));
    ck.add("f-vector", f_vector(m) == std::vector<std::int64_t>{1, 6, 14, 13});
    ck.add("h-polynomial", h_polynomial(m) == UniPoly{4, 5, 3, 1});
    ck.add("Tutte polynomial equals its activity form", tutte(m) == tutte_via_activities(m, natural));

    const SquarefreeMonomialIdeal nat = initial_ideal(m, natural);
    ck.add("natural-order initial ideal",
           nat.to_string() == "<x1*y2*y6, x1*y3*y5*y6, x1*y4*y5*y6, x2*y3*y5, x2*y4*y5, x3*y4>");
    std::vector<std::string> comps;
    for (ElementSet c : primary_decomposition(nat)) comps.push_back(monomial_string(c));
    std::sort(comps.begin(), comps.end());
    std::vector<std::string> golden = {"x1*x2*x3", "x1*x2*y4", "x1*y3*y4", "x1*x3*y5", "x1*y4*y5",
                                       "y2*y3*y4", "x3*y2*y5", "x2*x3*y6", "y2*y4*y5", "x2*y4*y6",
                                       "y3*y4*y6", "x3*y5*y6", "y4*y5*y6"};
    std::sort(golden.begin(), golden.end());
    ck.add("natural-order primary decomposition", comps == golden);
    ck.add("components from internal activities", primary_decomposition(nat) ==
                                                      primary_decomposition_via_activities(m, natural));

    const InitialIdealCensus census = enumerate_initial_ideals(m, jobs);
    ck.add("72 initial ideals, bound 78", census.count() == 72 && census.bound == 78);

    const Multidegree bases_md = bases_multidegree(m);
    const BivarPoly bideg{{{3, 0}, 1}, {{2, 1}, 3}, {{1, 2}, 5}, {{0, 3}, 4}};
    bool degrees = true;
    for (const auto& ideal : census.ideals) degrees = degrees && multidegree(ideal) == bases_md && bidegree(ideal) == bideg;
    ck.add("every initial ideal has the bases multidegree and bidegree s^3+3s^2t+5st^2+4t^3", degrees);

    const BettiTable predicted = betti_from_mobius(m);
    struct Verdict {
        bool matches = false, cm = false;
    };
    const auto verdicts = parallel_map<Verdict>(census.count(), jobs, [&](std::size_t i) {
        const BettiTable b = hochster_betti(census.ideals[i]);
        const auto coarse = b.coarsened();
        const CohenMacaulayReport cm = is_cohen_macaulay(census.ideals[i], b);
        return Verdict{coarse && *coarse == predicted, cm.cohen_macaulay && cm.projdim == 3 && cm.codim == 3};
    });
    ck.add("Mobius prediction equals Hochster Betti numbers for every initial ideal",
           std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.matches; }));
    ck.add("every initial ideal is Cohen-Macaulay with projdim = codim = 3",
           std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.cm; }));
    const BettiTable nat_betti = hochster_betti(nat);
    ck.add("Betti totals (1, 6, 9, 4)", nat_betti.totals() == std::vector<std::int64_t>{1, 6, 9, 4});
    ck.add("graded Betti table", nat_betti.graded() == std::vector<std::vector<std::int64_t>>{
                                                           {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 3, 2, 0}, {0, 2, 7, 4}});

    const std::vector<LinearForm> forms = cocircuit_forms(a);
    std::vector<HomogPolynomial> gens;
    for (const auto& f : forms) gens.push_back(homogenize(f));
    bool groebner = true;
    for (std::size_t i = 0; i < census.count(); ++i) {
        const TermOrder ord = TermOrder::realizing(census.witnesses[i]);
        groebner = groebner && buchberger_verify(gens, ord).ok() &&
                   leading_term_ideal(gens, ord, xyvars(m.ground())) == census.ideals[i];
    }
    ck.add("homogenized cocircuits form a reduced Groebner basis for every witness order", groebner);
    ck.add("homogenized cocircuits generate minimally", minimally_generates(gens, TermOrder::realizing(natural)));

    const GenPermutahedron p = cocircuit_polytope(m, jobs);
    bool on_polytope = true;
    for (const Point& v : p.vertices) on_polytope = on_polytope && satisfies_hrep(p, v);
    ck.add("cocircuit polytope has 72 vertices and dimension 5", p.vertices.size() == 72 && dimension(p) == 5);
    ck.add("vertices satisfy the H-representation", on_polytope && p.z_of(p.ground) == Rat(6));
    ck.add("matroid polytope is a Minkowski summand", summand_check(m).holds);

    struct Row {
        std::vector<Rat> b;
        std::size_t affine, hom;
    };
    const std::vector<Row> table = {{{0, 0, 0}, 72, 72},
                                    {{1, 0, 1}, 124, 144},
                                    {{2, 2, 3}, 114, 156},
                                    {{1, -1, 1}, 111, 150},
                                    {{1, 2, 3}, 107, 162}};
    for (const Row& row : table) {
        const MatroidTriple t = MatroidTriple::from_system(a, row.b);
        const auto ca = enumerate_initial_ideals(t, jobs);
        const auto ch = enumerate_initial_ideals(t.hom, jobs);
        std::string label = "affine initial ideal counts for b = (";
        for (std::size_t i = 0; i < row.b.size(); ++i) label += (i ? "," : "") + to_string(row.b[i]);
        label += "): " + std::to_string(row.affine) + " / " + std::to_string(row.hom);
        ck.add(label, ca.count() == row.affine && ch.count() == row.hom);
    }

    const MatroidTriple t = MatroidTriple::from_system(a, std::vector<Rat>{1, 0, 1});
    const AffineBidegrees closed = affine_bidegrees(t);
    const AffineFamilyCensus fam = affine_family_bidegrees(t, jobs);
    const BivarPoly bottom{{{1, 2}, 3}, {{0, 3}, 10}};
    ck.add("orders with 0 last give bidegree s^3+3s^2t+5st^2+4t^3",
           closed.top == bideg && fam.zero_last.bidegrees == std::vector<BivarPoly>{bideg});
    ck.add("orders with 0 first give bidegree 3st^2+10t^3",
           closed.bottom == bottom && fam.zero_first.bidegrees == std::vector<BivarPoly>{bottom});
    ck.add("Las Vergnas polynomial equals its activity form",
           lasvergnas_tutte(t) == lasvergnas_via_activities(t, natural));

    return {ck.report(), ck.all()};
}

}  // namespace matlin::cli
