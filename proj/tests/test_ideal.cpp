#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "matlin/ideal.hpp"
#include "matlin/orders.hpp"
#include "oracles.hpp"

using namespace matlin;
using oracle::set;
using oracle::sets;

namespace {

Matroid example() { return Matroid::from_matrix(oracle::example_matrix()); }

LinearForm form(std::vector<int> coeffs) {
    LinearForm f;
    for (int c : coeffs) f.coeffs.push_back(Rat(c));
    for (std::size_t i = 1; i < f.coeffs.size(); ++i)
        if (f.coeffs[i] != 0) f.support = f.support.with(static_cast<int>(i));
    return f;
}

std::vector<HomogPolynomial> homogenized(const std::vector<LinearForm>& forms) {
    std::vector<HomogPolynomial> out;
    for (const auto& f : forms) out.push_back(homogenize(f));
    return out;
}

LinearOrder shuffled(ElementSet ground, std::mt19937_64& rng) {
    std::vector<int> seq = ground.elements();
    std::shuffle(seq.begin(), seq.end(), rng);
    return LinearOrder(seq);
}

ElementSet m_of(const char* word) { return ElementSet{} | xvars(set(word)); }

}  // namespace

TEST_CASE("cocircuit forms") {
    const std::vector<LinearForm> forms = cocircuit_forms(oracle::example_matrix());
    std::vector<std::string> text;
    std::vector<ElementSet> supports;
    for (const auto& f : forms) {
        text.push_back(f.to_string());
        supports.push_back(f.support);
    }
    CHECK(oracle::sorted(supports) == example().cocircuits());
    for (const char* s : {"x1 + x2 + x6", "x1 + x3 - x5 + x6", "x1 - x4 - x5 + x6", "x2 - x3 + x5", "x2 + x4 + x5",
                          "x3 + x4"})
        CHECK(std::count(text.begin(), text.end(), s) == 1);

    const auto single = cocircuit_forms(RatMatrix{{1, 1}});
    REQUIRE(single.size() == 1);
    CHECK(single[0].to_string() == "x1 + x2");
    const auto id = cocircuit_forms(RatMatrix{{1, 0}, {0, 1}});
    REQUIRE(id.size() == 2);
    CHECK(id[0].to_string() == "x1");
    CHECK(id[1].to_string() == "x2");

    CHECK_THROWS_AS(cocircuit_forms(RatMatrix{{1, 1}, {2, 2}}), RankDeficient);
    CHECK_THROWS_AS(cocircuit_forms(RatMatrix{{1, 1}, {2, 2}}, std::vector<Rat>{1, 3}), InconsistentSystem);
}

TEST_CASE("cocircuit forms vanish on the kernel") {
    std::mt19937_64 rng(oracle::seed + 79);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6), r = 1 + static_cast<int>(rng() % std::min(n, 4));
        const RatMatrix a = oracle::random_full_rank_matrix(rng, r, n);
        const Matroid m = Matroid::from_matrix(a);
        const RatMatrix k = kernel_basis(a);
        std::vector<ElementSet> supports;
        for (const auto& f : cocircuit_forms(a)) {
            supports.push_back(f.support);
            for (std::size_t i = 0; i < k.rows(); ++i) {
                Rat dot = 0;
                for (int e : f.support) dot += f.coeffs[static_cast<std::size_t>(e)] * k(i, static_cast<std::size_t>(e - 1));
                REQUIRE(dot == 0);
            }
        }
        REQUIRE(oracle::sorted(supports) == m.cocircuits());
    }
}

TEST_CASE("homogenization and leading terms") {
    const HomogPolynomial f = homogenize(form({0, 0, 0, 1, 1}));
    CHECK(f.to_string() == "x3*y4 + x4*y3");
    const HomogPolynomial g = homogenize(form({1, 0, 0, 1, 1}));
    CHECK(g.terms().size() == 3);
    CHECK(g.coefficient(Monomial::of(yvars(set("34")))) == 1);
    CHECK(homogenize(form({0, 1})).to_string() == "x1");

    const TermOrder natural = TermOrder::realizing(LinearOrder({1, 2, 3, 4}));
    CHECK(leading_term(f, natural) == Monomial::of(xvars(set("3")) | yvars(set("4"))));
    const TermOrder zero_first = TermOrder::realizing_affine(LinearOrder({0, 1, 2, 3, 4}));
    CHECK(leading_term(g, zero_first) == Monomial::of(yvars(set("34"))));
    const HomogPolynomial h = homogenize(form({0, 1, 1}));
    CHECK(leading_term(h, TermOrder::realizing(LinearOrder({2, 1}))) == Monomial::of(xvars(set("2")) | yvars(set("1"))));
    CHECK_THROWS_AS(leading_term(HomogPolynomial{}, natural), ZeroPolynomial);

    const std::vector<HomogPolynomial> principal{h};
    CHECK(buchberger_verify(principal, natural).ok());
}

TEST_CASE("example initial ideals") {
    const Matroid m = example();
    const LinearOrder natural = LinearOrder::natural(m.ground());
    const SquarefreeMonomialIdeal i = initial_ideal(m, natural);
    CHECK(i.to_string() == "<x1*y2*y6, x1*y3*y5*y6, x1*y4*y5*y6, x2*y3*y5, x2*y4*y5, x3*y4>");
    CHECK(primary_decomposition(i) == primary_decomposition_via_activities(m, natural));
    CHECK(primary_decomposition(i) == oracle::minimal_primes(i.generators(), i.variables()));
    const auto comps = primary_decomposition_via_activities(m, natural);
    CHECK(std::count(comps.begin(), comps.end(), xvars(set("3")) | yvars(set("25"))) == 1);

    Multidegree bases;
    for (ElementSet b : m.bases()) bases[b] = 1;
    CHECK(multidegree(i) == bases);
    CHECK(bidegree(i) == BivarPoly{{{3, 0}, 1}, {{2, 1}, 3}, {{1, 2}, 5}, {{0, 3}, 4}});

    const Matroid u11 = uniform_matroid(1, 1);
    CHECK(initial_ideal(u11, LinearOrder({1})).to_string() == "<x1>");
    const Matroid u33 = uniform_matroid(3, 3);
    CHECK(primary_decomposition_via_activities(u33, LinearOrder({2, 1, 3})) == std::vector<ElementSet>{m_of("123")});
}

TEST_CASE("multidegree edge cases") {
    const SquarefreeMonomialIdeal two(xvars(set("1")) | yvars(set("2")), {xvars(set("1")), yvars(set("2"))});
    CHECK(multidegree(two) == Multidegree{{set("12"), 1}});
    CHECK(bidegree(two) == BivarPoly{{{1, 1}, 1}});
    const SquarefreeMonomialIdeal mixed(xvars(set("123")), {xvars(set("12")), xvars(set("13"))});
    CHECK_THROWS_AS(multidegree(mixed), NotEquidimensional);
}

TEST_CASE("all orders of the example") {
    const Matroid m = example();
    const auto gens = homogenized(cocircuit_forms(oracle::example_matrix()));
    const Multidegree bases = bases_multidegree(m);
    const BivarPoly bideg{{{3, 0}, 1}, {{2, 1}, 3}, {{1, 2}, 5}, {{0, 3}, 4}};
    std::set<std::vector<std::uint64_t>> keys;
    sweep_orders<int>(m.ground(), 1, [&](int&, const LinearOrder& o) {
        const SquarefreeMonomialIdeal i = initial_ideal(m, o);
        REQUIRE(i == stanley_reisner(external_activity_complex(m.dual(), o)));
        REQUIRE(i == leading_term_ideal(gens, TermOrder::realizing(o), xyvars(m.ground())));
        REQUIRE(multidegree(i) == bases);
        REQUIRE(bidegree(i) == bideg);
        keys.insert(i.key());
    });
    CHECK(keys.size() == 72);

    const InitialIdealCensus c = enumerate_initial_ideals(m, 3);
    CHECK(c.count() == 72);
    CHECK(c.bound == 78);
    CHECK(c.orders_swept == 720);
    for (std::size_t k = 0; k < c.count(); ++k) CHECK(initial_ideal(m, c.witnesses[k]) == c.ideals[k]);
    CHECK_THROWS_AS(enumerate_initial_ideals(m, 1, 5), CutoffExceeded);
}

TEST_CASE("census does not depend on the worker count") {
    const Matroid m = example();
    const InitialIdealCensus one = enumerate_initial_ideals(m, 1);
    for (std::size_t jobs : {2u, 5u, 8u}) {
        const InitialIdealCensus many = enumerate_initial_ideals(m, jobs);
        CHECK(many.ideals == one.ideals);
        CHECK(many.witnesses == one.witnesses);
    }
}

TEST_CASE("Groebner bases under random weights") {
    const Matroid m = example();
    const auto gens = homogenized(cocircuit_forms(oracle::example_matrix()));
    std::mt19937_64 rng(oracle::seed + 83);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 7);
    std::set<std::vector<int>> orders;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rat> w;
        std::set<Rat> distinct;
        while (w.size() < 6) {
            const Rat x(num(rng), den(rng));
            if (distinct.insert(x).second) w.push_back(x);
        }
        const TermOrder ord = TermOrder::from_x_weights(m.ground(), w);
        const LinearOrder induced = ord.induced_order(m.ground());
        orders.insert(induced.sequence());
        const BuchbergerReport bb = buchberger_verify(gens, ord);
        REQUIRE(bb.groebner);
        REQUIRE(bb.reduced);
        REQUIRE(leading_term_ideal(gens, ord, xyvars(m.ground())) == initial_ideal(m, induced));
    }
    CHECK(orders.size() >= 20);
}

TEST_CASE("homogenized cocircuits generate minimally") {
    const Matroid m = example();
    const auto gens = homogenized(cocircuit_forms(oracle::example_matrix()));
    const TermOrder natural = TermOrder::realizing(LinearOrder::natural(m.ground()));
    CHECK(minimally_generates(gens, natural));
    const SquarefreeMonomialIdeal full = leading_term_ideal(gens, natural, xyvars(m.ground()));
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<HomogPolynomial> fewer = gens;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
        CHECK(leading_term_ideal(fewer, natural, xyvars(m.ground())) != full);
    }
}

TEST_CASE("random linear and affine spaces: Groebner bases and the combinatorial rule") {
    std::mt19937_64 rng(oracle::seed + 89);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5), r = 1 + static_cast<int>(rng() % std::min(n, 3));
        const RatMatrix a = oracle::random_full_rank_matrix(rng, r, n);
        const Matroid m = Matroid::from_matrix(a);
        const auto gens = homogenized(cocircuit_forms(a));
        for (int k = 0; k < 4; ++k) {
            const LinearOrder o = shuffled(m.ground(), rng);
            const TermOrder ord = TermOrder::realizing(o);
            REQUIRE(buchberger_verify(gens, ord).ok());
            REQUIRE(minimally_generates(gens, ord));
            REQUIRE(leading_term_ideal(gens, ord, xyvars(m.ground())) == initial_ideal(m, o));
        }

        const std::vector<Rat> b = oracle::random_consistent_rhs(rng, a);
        const MatroidTriple t = MatroidTriple::from_system(a, b);
        const auto agens = homogenized(cocircuit_forms(a, b));
        for (int k = 0; k < 4; ++k) {
            const LinearOrder o = shuffled(t.hom.ground(), rng);
            const TermOrder ord = TermOrder::realizing_affine(o);
            REQUIRE(buchberger_verify(agens, ord).ok());
            REQUIRE(minimally_generates(agens, ord));
            const SquarefreeMonomialIdeal in = initial_ideal(t, o);
            REQUIRE(leading_term_ideal(agens, ord, xyvars(m.ground())) == in);

            std::vector<ElementSet> away_from_zero;
            for (ElementSet p : primary_decomposition(initial_ideal(t.hom, o)))
                if (!p.contains(xvar(0)) && !p.contains(yvar(0))) away_from_zero.push_back(p);
            REQUIRE(primary_decomposition(in) == oracle::sorted(away_from_zero));
            REQUIRE(primary_decomposition(in) == primary_decomposition_via_activities(t, o));
        }
    }
}
