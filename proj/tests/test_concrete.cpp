#include "support.hpp"

#include "effalg/classify.hpp"

#include <doctest.h>

#include <bit>

using namespace effalg;
using namespace testing_support;

namespace {

Block set_of(std::initializer_list<unsigned> points)
{
    Block b = 0;
    for (auto p : points)
        b |= Block{1} << p;
    return b;
}

bool has_kind(const SystemValidation& v, SystemViolation::Kind k)
{
    return std::any_of(v.violations.begin(), v.violations.end(), [&](const auto& x) { return x.kind == k; });
}

}  // namespace

TEST_CASE("validate_system accepts the closed families")
{
    CHECK(validate_system(4, even_subsets(4).blocks()).ok());
    CHECK(validate_system(2, {0, 3}).ok());
    CHECK(validate_system(3, powerset(3).blocks()).ok());
}

TEST_CASE("validate_system reports each missing set")
{
    auto v = validate_system(2, {0, set_of({0}), 3});
    CHECK_FALSE(v.ok());
    REQUIRE(has_kind(v, SystemViolation::Kind::MissingComplement));
    auto it = std::find_if(v.violations.begin(), v.violations.end(),
                           [](const auto& x) { return x.kind == SystemViolation::Kind::MissingComplement; });
    CHECK(it->blocks.back() == set_of({1}));

    auto u = validate_system(4, {0, set_of({0}), set_of({1, 2, 3}), set_of({1}), set_of({0, 2, 3}), 15});
    CHECK(has_kind(u, SystemViolation::Kind::MissingUnion));
    CHECK(has_kind(validate_system(2, {set_of({0}), 7}), SystemViolation::Kind::Range));
    CHECK(has_kind(validate_system(2, {}), SystemViolation::Kind::Empty));
}

TEST_CASE("closure")
{
    auto s = closure(4, {set_of({0, 1})});
    CHECK(s.blocks() == std::vector<Block>{0, set_of({0, 1}), set_of({2, 3}), 15});
    CHECK(closure(4, {}).blocks() == std::vector<Block>{0, 15});
    std::vector<Block> pairs;
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = i + 1; j < 4; ++j)
            pairs.push_back(set_of({i, j}));
    auto all = closure(4, pairs);
    CHECK(all.blocks().size() == 8);
    for (Block b : all.blocks())
        CHECK(std::popcount(b) % 2 == 0);

    // idempotent and monotone
    CHECK(closure(4, all.blocks()).blocks() == all.blocks());
    auto bigger = closure(4, {set_of({0, 1}), set_of({0, 2})});
    for (Block b : s.blocks())
        CHECK(bigger.contains(b));
}

TEST_CASE("named families")
{
    CHECK(even_subsets(4).blocks().size() == 8);
    CHECK(even_subsets(6).blocks().size() == 32);
    CHECK(powerset(3).blocks().size() == 8);
    CHECK_THROWS_AS(even_subsets(5), std::invalid_argument);
}

TEST_CASE("to_algebra builds an OMP with inclusion order")
{
    for (const auto& s : {even_subsets(4), even_subsets(6), powerset(3), closure(2, {}), closure(6, {set_of({0, 1, 2})})}) {
        auto e = to_algebra(s);
        CHECK(e.size() == s.blocks().size());
        CHECK(is_omp(e).holds);
        for (ElementId a = 0; a < e.size(); ++a)
            for (ElementId b = 0; b < e.size(); ++b) {
                Block x = s.blocks()[a];
                Block y = s.blocks()[b];
                CHECK(e.leq(a, b) == ((x & ~y) == 0));
                CHECK(e.orthogonal(a, b) == ((x & y) == 0));
            }
        for (ElementId a = 0; a < e.size(); ++a)
            CHECK(s.blocks()[e.supplement(a)] == (s.full() & ~s.blocks()[a]));
        auto points = point_states(s);
        CHECK(points.size() == s.ground_size());
        for (const auto& p : points)
            CHECK(is_state(e, p).holds);
        CHECK(sod_set_check(e, points).holds);
    }
    CHECK(to_algebra(closure(3, {})).size() == 2);
}

TEST_CASE("point state s_a on even-4")
{
    auto s = even_subsets(4);
    auto e = to_algebra(s);
    auto sa = point_state(s, 0);
    CHECK(sa.name == "s_a");
    for (ElementId x = 0; x < e.size(); ++x) {
        const auto& label = e.name(x);
        bool in = label.find('a') != std::string::npos;
        CHECK(sa(x) == (in ? 1 : 0));
    }
    CHECK(sa(id_of(e, "{a,b}")) == 1);
    CHECK(sa(id_of(e, "{c,d}")) == 0);
    CHECK(sa(e.zero()) == 0);
}

TEST_CASE("labels")
{
    CHECK(block_label(4, set_of({0, 3})) == "{a,d}");
    CHECK(block_label(4, 0) == "{}");
    CHECK(point_name(30, 3) == "3");
}
