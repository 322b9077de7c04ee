#include "effalg/symbolic.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace effalg::symbolic;

TEST_CASE("construction tokens")
{
    for (auto id : {Construction::OmpUnotSod, Construction::OmpNotM, Construction::ChainFiniteLattice,
                    Construction::FiniteCofinite, Construction::Balanced})
        CHECK(parse_construction(token(id)) == id);
    CHECK_FALSE(parse_construction("nope").has_value());
    CHECK_THROWS_AS(build("nope"), std::invalid_argument);
}

TEST_CASE("omp-not-m membership and operations")
{
    auto alg = build("omp-not-m");
    auto x1x2 = alg.make("X1uX2");
    CHECK(alg.contains(x1x2));
    auto f = alg.parse("empty^{X1:0,X3:4,X2:7}");
    CHECK(alg.contains(f));
    CHECK(alg.complement(alg.parse("X1uX2^{X1:3}")) == alg.parse("X3uX4^{X1:3}"));
    CHECK(alg.complement(alg.complement(f)) == f);

    auto x = alg.parse("empty^{X1:0}");
    auto y = alg.parse("empty^{X1:1}");
    CHECK(leq_sym(alg, x, x1x2));
    CHECK(leq_sym(alg, x, x));
    CHECK(oplus_sym(alg, x, y) == alg.parse("empty^{X1:0,X1:1}"));
    CHECK_FALSE(oplus_sym(alg, x, x).has_value());
    CHECK(alg.format(alg.parse("empty")) == "empty");
    CHECK(alg.parse(alg.format(f)) == f);
    CHECK_THROWS_AS(alg.parse("X1uX3"), std::invalid_argument);
    CHECK_THROWS_AS(alg.parse("empty^{Q:1}"), std::invalid_argument);
    CHECK_THROWS_AS(alg.parse("empty^{X1:z}"), std::invalid_argument);
}

TEST_CASE("no_maximal_refuter")
{
    auto alg = build("omp-not-m");
    auto r = no_maximal_refuter(alg, alg.zero());
    CHECK(r.verified);
    CHECK(r.witnesses.front() == alg.parse("empty^{X1:0}"));
    auto r2 = no_maximal_refuter(alg, r.witnesses.front());
    CHECK(r2.witnesses.front() == alg.parse("empty^{X1:0,X1:1}"));
    CHECK_THROWS_AS(no_maximal_refuter(alg, alg.make("X1uX2")), std::invalid_argument);
    CHECK_THROWS_AS(no_maximal_refuter(build("balanced"), alg.zero()), std::invalid_argument);

    auto c = alg.zero();
    for (int k = 0; k < 100; ++k) {
        auto next = no_maximal_refuter(alg, c).witnesses.front();
        CHECK(leq_sym(alg, c, next));
        CHECK_FALSE(leq_sym(alg, next, c));
        c = next;
    }
    CHECK(c.correction.size() == 100);
}

TEST_CASE("omp-unot-sod")
{
    auto alg = build("omp-unot-sod");
    auto r = not_sod_witness(alg, 20);
    CHECK(r.verified);
    REQUIRE(r.witnesses.size() == 2);
    CHECK_FALSE(leq_sym(alg, r.witnesses[0], r.witnesses[1]));
    auto x1 = alg.region("X1");
    auto x3 = alg.region("X3");
    CHECK(alg.point_state({x1, 4}, r.witnesses[0]));
    CHECK(alg.point_state({x1, 4}, r.witnesses[1]));
    CHECK_FALSE(alg.point_state({x3, 4}, r.witnesses[0]));
    CHECK(alg.point_state({x3, 2}, alg.parse("empty^{X3:2}")));
    // corrections live in X1 u X3 only
    CHECK_THROWS_AS(alg.parse("empty^{X2:0}"), std::invalid_argument);
}

TEST_CASE("point states on omp-unot-sod are Jauch-Piron on samples")
{
    auto alg = build("omp-unot-sod");
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> pick_base(0, alg.bases().size() - 1);
    std::uniform_int_distribution<std::uint64_t> idx(0, 6);
    auto x1 = alg.region("X1");
    auto x3 = alg.region("X3");
    std::vector<SymbolicElement> sample;
    for (int k = 0; k < 60; ++k) {
        std::set<Point> pts;
        for (int j = 0; j < 3; ++j)
            pts.insert({j % 2 ? x1 : x3, idx(rng)});
        sample.push_back(alg.make(alg.bases()[pick_base(rng)].label, pts));
    }
    for (std::size_t region : {x1, x3})
        for (std::uint64_t i = 0; i < 7; ++i) {
            Point x{region, i};
            auto atom = alg.make("empty", {x});
            for (const auto& a : sample)
                for (const auto& b : sample)
                    if (alg.point_state(x, a) && alg.point_state(x, b)) {
                        CHECK(leq_sym(alg, atom, a));
                        CHECK(leq_sym(alg, atom, b));
                    }
        }
}

TEST_CASE("balanced chain refuter examples")
{
    auto alg = build("balanced");
    auto c5 = balanced_chain(alg, 5);
    CHECK(chain_no_upper_bound_refuter(alg, c5).chain_index == 6u);
    CHECK(chain_no_upper_bound_refuter(alg, alg.zero()).chain_index == 2u);
    auto u = alg.parse("cofinite^{X:1,X:3,Y:1,Y:0}");
    auto r = chain_no_upper_bound_refuter(alg, u);
    CHECK(r.chain_index == 3u);
    CHECK(r.verified);
    CHECK_THROWS_AS(chain_no_upper_bound_refuter(alg, alg.one()), std::invalid_argument);
    CHECK_THROWS_AS(alg.parse("finite^{X:2}"), std::invalid_argument);
    auto [a, b] = balanced_interval(alg);
    for (std::uint64_t n = 2; n < 10; ++n) {
        CHECK(leq_sym(alg, balanced_chain(alg, n), a));
        CHECK(leq_sym(alg, balanced_chain(alg, n), b));
        CHECK(leq_sym(alg, balanced_chain(alg, n), balanced_chain(alg, n + 1)));
    }
}

TEST_CASE("finite-cofinite supremum refuter examples")
{
    auto alg = build("finite-cofinite");
    auto even = parse_point_set("even");
    auto r = no_supremum_refuter(alg, even, alg.one());
    CHECK(r.verified);
    CHECK(r.witnesses.front() == alg.parse("cofinite^{X:1}"));
    auto r2 = no_supremum_refuter(alg, even, alg.parse("cofinite^{X:1}"));
    CHECK(r2.witnesses.front() == alg.parse("cofinite^{X:1,X:3}"));
    CHECK_THROWS_AS(no_supremum_refuter(alg, even, alg.parse("cofinite^{X:2}")), std::invalid_argument);
    CHECK_THROWS_AS(no_supremum_refuter(alg, even, alg.parse("finite^{X:2}")), std::invalid_argument);
    CHECK(parse_point_set("mod:3:1").contains(4));
    CHECK_THROWS_AS(parse_point_set("mod:1:0"), std::invalid_argument);
}

TEST_CASE("chain-finite lattice has height two")
{
    auto alg = build("chain-finite-lattice");
    auto r = chain_bound(alg, 10);
    CHECK(r.verified);
    CHECK(r.bound == 3u);
}
