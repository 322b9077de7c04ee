#include "effalg/lp.hpp"
#include "effalg/rational.hpp"

#include <doctest.h>

#include <optional>
#include <random>

using namespace effalg;
using lp::Problem;
using lp::Status;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix dense(const Problem& p)
{
    Matrix a(p.rows.size(), std::vector<Rational>(p.columns + 1));
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
        for (const auto& t : p.rows[r].terms)
            a[r][t.column] += t.coefficient;
        a[r][p.columns] = p.rows[r].rhs;
    }
    return a;
}

// Solves B x_B = b for the chosen columns by Gauss-Jordan; nothing if singular.
std::optional<std::vector<Rational>> basic_solution(const Matrix& a, const std::vector<std::size_t>& cols, std::size_t n)
{
    const std::size_t m = a.size();
    Matrix b(m, std::vector<Rational>(cols.size() + 1));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t k = 0; k < cols.size(); ++k)
            b[r][k] = a[r][cols[k]];
        b[r][cols.size()] = a[r][n];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::size_t p = row;
        while (p < m && b[p][k] == 0)
            ++p;
        if (p == m)
            return std::nullopt;
        std::swap(b[p], b[row]);
        Rational inv = 1 / b[row][k];
        for (auto& v : b[row])
            v *= inv;
        for (std::size_t r = 0; r < m; ++r)
            if (r != row && b[r][k] != 0) {
                Rational f = b[r][k];
                for (std::size_t c = 0; c <= cols.size(); ++c)
                    b[r][c] -= f * b[row][c];
            }
        pivot_row[k] = row++;
    }
    for (std::size_t r = row; r < m; ++r)
        if (b[r][cols.size()] != 0)
            return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t k = 0; k < cols.size(); ++k)
        x[cols[k]] = b[pivot_row[k]][cols.size()];
    return x;
}

// Oracle: minimum over every basic feasible solution, for bounded problems.
std::optional<Rational> brute_force_minimum(const Problem& p)
{
    auto a = dense(p);
    const std::size_t n = p.columns;
    std::optional<Rational> best;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c)
            if (mask >> c & 1U)
                cols.push_back(c);
        if (cols.size() > a.size())
            continue;
        auto x = basic_solution(a, cols, n);
        if (!x)
            continue;
        bool feasible = std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0; });
        if (!feasible)
            continue;
        Rational value = 0;
        for (std::size_t c = 0; c < n; ++c)
            value += p.objective[c] * (*x)[c];
        if (!best || value < *best)
            best = value;
    }
    return best;
}

bool satisfies(const Problem& p, const std::vector<Rational>& x)
{
    for (const auto& v : x)
        if (v < 0)
            return false;
    for (const auto& row : p.rows) {
        Rational lhs = 0;
        for (const auto& t : row.terms)
            lhs += t.coefficient * x[t.column];
        if (lhs != row.rhs)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("rationals parse and print exactly")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-2") == -2);
    CHECK(to_string(Rational(4, 8)) == "1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("simple optimum")
{
    // min -x - y  s.t.  x + y + s = 1
    Problem p{3, {{{{0, 1}, {1, 1}, {2, 1}}, 1}}, {-1, -1, 0}};
    auto sol = lp::solve(p);
    REQUIRE(sol.status == Status::Optimal);
    CHECK(sol.value == -1);
    CHECK(satisfies(p, sol.x));
}

TEST_CASE("infeasible and unbounded")
{
    Problem infeasible{2, {{{{0, 1}, {1, 1}}, -1}}, {}};
    CHECK(lp::solve(infeasible).status == Status::Infeasible);
    Problem unbounded{2, {{{{0, 1}, {1, -1}}, 0}}, {-1, 0}};
    CHECK(lp::solve(unbounded).status == Status::Unbounded);
}

TEST_CASE("redundant and degenerate rows")
{
    // x + y = 1 twice, x - y = 0: optimum x = y = 1/2
    Problem p{2, {{{{0, 1}, {1, 1}}, 1}, {{{0, 2}, {1, 2}}, 2}, {{{0, 1}, {1, -1}}, 0}}, {1, 0}};
    auto sol = lp::solve(p);
    REQUIRE(sol.status == Status::Optimal);
    CHECK(sol.value == Rational(1, 2));
    CHECK(sol.x[1] == Rational(1, 2));
}

TEST_CASE("randomized bounded problems agree with basis enumeration")
{
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> dim(2, 6);
    int solved = 0;
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = static_cast<std::size_t>(dim(rng));
        const std::size_t m = std::min<std::size_t>(n - 1, static_cast<std::size_t>(1 + round % 3));
        Problem p;
        p.columns = n;
        // sum x = 1 keeps the feasible region bounded
        lp::EqualityRow total;
        for (std::size_t c = 0; c < n; ++c)
            total.terms.push_back({c, 1});
        total.rhs = 1;
        p.rows.push_back(total);
        for (std::size_t r = 1; r < m; ++r) {
            lp::EqualityRow row;
            for (std::size_t c = 0; c < n; ++c)
                if (int v = coef(rng))
                    row.terms.push_back({c, v});
            row.rhs = coef(rng);
            p.rows.push_back(row);
        }
        for (std::size_t c = 0; c < n; ++c) {
            Rational v(coef(rng), 1 + round % 4);
            v.canonicalize();
            p.objective.push_back(v);
        }
        auto sol = lp::solve(p);
        auto expect = brute_force_minimum(p);
        if (!expect) {
            CHECK(sol.status == Status::Infeasible);
            continue;
        }
        REQUIRE(sol.status == Status::Optimal);
        CHECK(sol.value == *expect);
        CHECK(satisfies(p, sol.x));
        ++solved;
    }
    CHECK(solved > 50);
}

TEST_CASE("solver is deterministic")
{
    Problem p{4, {{{{0, 1}, {1, 1}, {2, 1}, {3, 1}}, 1}}, {0, 0, 0, 0}};
    auto a = lp::solve(p);
    auto b = lp::solve(p);
    CHECK(a.x == b.x);
}
