#include <catch_amalgamated.hpp>

#include <algorithm>

#include "matlin/ideal.hpp"
#include "matlin/orders.hpp"
#include "oracles.hpp"

using namespace matlin;
using oracle::set;
using oracle::sets;

namespace {

LinearOrder shuffled(ElementSet ground, std::mt19937_64& rng) {
    std::vector<int> seq = ground.elements();
    std::shuffle(seq.begin(), seq.end(), rng);
    return LinearOrder(seq);
}

std::int64_t binomial(int n, int k) {
    std::int64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

/// Corank-nullity-rcd expansion with (x-1)^a (y-1)^b multiplied out.
TrivarPoly lasvergnas_oracle(const MatroidTriple& t) {
    TrivarPoly out;
    for_each_subset(t.m.ground(), [&](ElementSet s) {
        const int a = t.m_prime.rank() - t.m_prime.rank_of(s);
        const int b = s.size() - t.m.rank_of(s);
        const int z = (t.m.rank() - t.m_prime.rank()) - (t.m.rank_of(s) - t.m_prime.rank_of(s));
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j) {
                const std::int64_t sign = ((a - i) + (b - j)) % 2 ? -1 : 1;
                out.add(i, j, z, sign * binomial(a, i) * binomial(b, j));
            }
    });
    TrivarPoly cleaned;
    for (const auto& [k, c] : out.terms())
        if (c != 0) cleaned.add(k[0], k[1], k[2], c);
    return cleaned;
}

struct System {
    RatMatrix a;
    std::vector<Rat> b;
};

std::vector<System> random_systems(int count, int max_n, std::uint64_t salt) {
    std::mt19937_64 rng(oracle::seed + salt);
    std::vector<System> out;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
        const int r = 1 + static_cast<int>(rng() % std::min(n, 3));
        RatMatrix a = oracle::random_full_rank_matrix(rng, r, n);
        std::vector<Rat> b = oracle::random_consistent_rhs(rng, a);
        out.push_back({std::move(a), std::move(b)});
    }
    return out;
}

}  // namespace

TEST_CASE("matroid triples of small systems") {
    const RatMatrix a = oracle::example_matrix();
    const MatroidTriple zero = MatroidTriple::from_system(a, std::vector<Rat>{0, 0, 0});
    CHECK(zero.hom.loops() == ElementSet{0});
    CHECK(zero.m_prime == zero.m);
    CHECK(zero.is_morphism());

    const MatroidTriple one = MatroidTriple::from_system(RatMatrix{{1}}, std::vector<Rat>{1});
    CHECK(one.hom == Matroid::from_bases(set("01"), sets({"0", "1"})));
    CHECK(one.m == uniform_matroid(1, 1));
    CHECK(one.m_prime.rank() == 0);

    CHECK_THROWS_AS(MatroidTriple::from_system(RatMatrix{{1, 1}, {2, 2}}, std::vector<Rat>{1, 3}), InconsistentSystem);
    CHECK_THROWS_AS(MatroidTriple::from_hom(uniform_matroid(1, 2)), ElementMembership);
}

TEST_CASE("contraction rank formula") {
    for (const auto& [a, b] : random_systems(60, 6, 97)) {
        const MatroidTriple t = MatroidTriple::from_system(a, b);
        REQUIRE(t.is_morphism());
        for_each_subset(t.m.ground(), [&](ElementSet s) {
            REQUIRE(t.m_prime.rank_of(s) == t.hom.rank_of(s.with(0)) - t.hom.rank_of(ElementSet{0}));
            REQUIRE(t.m.rank_of(s) == t.hom.rank_of(s));
        });
    }
}

TEST_CASE("Las Vergnas polynomial of small triples") {
    const MatroidTriple one = MatroidTriple::from_system(RatMatrix{{1}}, std::vector<Rat>{1});
    TrivarPoly one_plus_z;
    one_plus_z.add(0, 0, 0, 1);
    one_plus_z.add(0, 0, 1, 1);
    CHECK(lasvergnas_via_activities(one, LinearOrder({0, 1})) == one_plus_z);
    CHECK(lasvergnas_tutte(one) == lasvergnas_oracle(one));

    const MatroidTriple trivial = MatroidTriple::from_system(RatMatrix{{1}}, std::vector<Rat>{0});
    TrivarPoly x;
    x.add(1, 0, 0, 1);
    CHECK(lasvergnas_tutte(trivial) == x);
    CHECK(lasvergnas_via_activities(trivial, LinearOrder({1, 0})) == x);

    const AffineBidegrees bd = affine_bidegrees(one);
    CHECK(bd.top == BivarPoly{{{1, 0}, 1}});
    CHECK(bd.bottom == BivarPoly{{{0, 1}, 1}});

    CHECK(homogenize_st(UniPoly{4, 5, 3, 1}, 3) == BivarPoly{{{3, 0}, 1}, {{2, 1}, 3}, {{1, 2}, 5}, {{0, 3}, 4}});
    CHECK_THROWS_AS(homogenize_st(UniPoly{0, 0, 1}, 1), std::invalid_argument);
}

TEST_CASE("Las Vergnas polynomial agrees with its activity form") {
    std::mt19937_64 rng(oracle::seed + 101);
    for (const auto& [a, b] : random_systems(60, 6, 101)) {
        const MatroidTriple t = MatroidTriple::from_system(a, b);
        const TrivarPoly lv = lasvergnas_tutte(t);
        REQUIRE(lv == lasvergnas_oracle(t));
        for (int k = 0; k < 4; ++k) REQUIRE(lasvergnas_via_activities(t, shuffled(t.hom.ground(), rng)) == lv);
    }
}

TEST_CASE("affine initial ideal counts of the example") {
    const RatMatrix a = oracle::example_matrix();
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
        const InitialIdealCensus affine = enumerate_initial_ideals(t);
        CHECK(affine.count() == row.affine);
        CHECK(affine.orders_swept == 5040);
        CHECK(affine.bound == factorial(3) * t.hom.bases().size());
        CHECK(affine.count() <= affine.bound);
        CHECK(enumerate_initial_ideals(t.hom).count() == row.hom);
    }
}

TEST_CASE("affine bidegree families of the example") {
    const MatroidTriple t = MatroidTriple::from_system(oracle::example_matrix(), std::vector<Rat>{1, 0, 1});
    const BivarPoly top{{{3, 0}, 1}, {{2, 1}, 3}, {{1, 2}, 5}, {{0, 3}, 4}};
    const BivarPoly bottom{{{1, 2}, 3}, {{0, 3}, 10}};
    const AffineBidegrees closed = affine_bidegrees(t);
    CHECK(closed.top == top);
    CHECK(closed.bottom == bottom);
    const AffineFamilyCensus fam = affine_family_bidegrees(t);
    CHECK(fam.zero_last.bidegrees == std::vector<BivarPoly>{top});
    CHECK(fam.zero_first.bidegrees == std::vector<BivarPoly>{bottom});
    CHECK(fam.zero_first.orders == 720);
    CHECK(fam.zero_last.orders == 720);
    CHECK(fam.intermediate.orders == 5040 - 1440);
}

TEST_CASE("orders with 0 at either end") {
    std::mt19937_64 rng(oracle::seed + 103);
    for (const auto& [a, b] : random_systems(60, 6, 103)) {
        const MatroidTriple t = MatroidTriple::from_system(a, b);
        const AffineBidegrees closed = affine_bidegrees(t);
        for (int k = 0; k < 4; ++k) {
            const LinearOrder rest = shuffled(t.m.ground(), rng);
            std::vector<int> first{0}, last = rest.sequence();
            first.insert(first.end(), last.begin(), last.end());
            last.push_back(0);

            const SquarefreeMonomialIdeal at_end = initial_ideal(t, LinearOrder(last));
            REQUIRE(at_end == initial_ideal(t.m, rest));
            REQUIRE(bidegree(at_end) == closed.top);
            REQUIRE(bidegree(initial_ideal(t, LinearOrder(first))) == closed.bottom);
        }
    }
}

TEST_CASE("affine initial ideals: multidegree and Betti numbers") {
    std::mt19937_64 rng(oracle::seed + 107);
    for (const auto& [a, b] : random_systems(50, 6, 107)) {
        const MatroidTriple t = MatroidTriple::from_system(a, b);
        const Multidegree bases = bases_multidegree(t.m);
        const BettiTable predicted = betti_from_mobius(t.m);
        for (int k = 0; k < 3; ++k) {
            const LinearOrder o = shuffled(t.hom.ground(), rng);
            const SquarefreeMonomialIdeal in = initial_ideal(t, o);
            REQUIRE(multidegree(in) == bases);
            const BettiTable fine = hochster_betti(in);
            const auto coarse = fine.coarsened();
            REQUIRE(coarse.has_value());
            REQUIRE(*coarse == predicted);
            REQUIRE(is_cohen_macaulay(in, fine).cohen_macaulay);
        }
    }
}
