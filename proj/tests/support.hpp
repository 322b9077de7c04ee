#pragma once

#include "effalg/concrete.hpp"
#include "effalg/core.hpp"
#include "effalg/io.hpp"
#include "effalg/states.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testing_support {

using namespace effalg;

inline std::string data_path(const std::string& name)
{
    return std::string(EFFALG_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("missing test file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline EffectAlgebra must(const SumTable& table)
{
    auto v = validate(table);
    if (!v.ok())
        throw std::runtime_error("fixture is not an effect algebra: " + to_string(v.violations.front()));
    return std::move(*v.algebra);
}

inline EffectAlgebra c3()
{
    SumTable t(3, 0, 2);
    t.define(1, 1, 2);
    t.set_name(1, "a");
    return must(t);
}

inline EffectAlgebra two_element()
{
    return must(SumTable(2, 0, 1));
}

inline EffectAlgebra load_ea(const std::string& name)
{
    std::istringstream in(slurp(data_path(name)));
    return must(io::parse_ea(in));
}

inline SetSystem load_omp(const std::string& name)
{
    std::istringstream in(slurp(data_path(name)));
    auto file = io::parse_omp(in);
    auto v = validate_system(file.ground_size, file.blocks, file.labels);
    if (!v.ok())
        throw std::runtime_error(name + " is not a closed set system");
    return std::move(*v.system);
}

inline std::vector<State> load_states(const std::string& name, const EffectAlgebra& e)
{
    std::istringstream in(slurp(data_path(name)));
    return io::parse_states(in, e);
}

inline ElementId id_of(const EffectAlgebra& e, const std::string& name)
{
    auto id = e.find(name);
    if (!id)
        throw std::runtime_error("no element named " + name);
    return *id;
}

// Oracle: a table given as a dense n*n matrix (-1 undefined), zero at 0.
// Checks the axioms directly from the definition without any shared code.
struct DenseTable {
    std::size_t n = 0;
    std::size_t one = 0;
    std::vector<int> cell;
    int at(std::size_t a, std::size_t b) const { return cell[a * n + b]; }
};

inline bool oracle_is_effect_algebra(const DenseTable& t)
{
    const auto n = t.n;
    for (std::size_t a = 0; a < n; ++a) {
        if (t.at(a, 0) != static_cast<int>(a) || t.at(0, a) != static_cast<int>(a))
            return false;
        for (std::size_t b = 0; b < n; ++b)
            if (t.at(a, b) != t.at(b, a))
                return false;
    }
    for (std::size_t a = 0; a < n; ++a) {
        int count = 0;
        for (std::size_t b = 0; b < n; ++b)
            count += t.at(a, b) == static_cast<int>(t.one);
        if (count != 1)
            return false;
        if (a != 0 && t.at(a, t.one) != -1)
            return false;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            int ab = t.at(a, b);
            if (ab < 0)
                continue;
            for (std::size_t c = 0; c < n; ++c) {
                int ab_c = t.at(static_cast<std::size_t>(ab), c);
                if (ab_c < 0)
                    continue;
                int bc = t.at(b, c);
                if (bc < 0 || t.at(a, static_cast<std::size_t>(bc)) != ab_c)
                    return false;
            }
        }
    return true;
}

// Least relabeled table over all permutations fixing 0; the encoding lists
// the image of one first so that different choices of one never collide.
inline std::vector<int> oracle_canonical(const DenseTable& t)
{
    std::vector<std::size_t> perm(t.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> image(t.n * t.n + 1);
        image[0] = static_cast<int>(perm[t.one]);
        for (std::size_t a = 0; a < t.n; ++a)
            for (std::size_t b = 0; b < t.n; ++b) {
                int v = t.at(a, b);
                image[1 + perm[a] * t.n + perm[b]] = v < 0 ? -1 : static_cast<int>(perm[static_cast<std::size_t>(v)]);
            }
        if (best.empty() || image < best)
            best = std::move(image);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
}

inline DenseTable dense_of(const EffectAlgebra& e)
{
    // Move zero to index 0 so both sides use the same convention.
    std::vector<std::size_t> map(e.size());
    std::size_t next = 1;
    for (ElementId a = 0; a < e.size(); ++a)
        map[a] = a == e.zero() ? 0 : next++;
    DenseTable t{e.size(), map[e.one()], std::vector<int>(e.size() * e.size(), -1)};
    for (ElementId a = 0; a < e.size(); ++a)
        for (ElementId b = 0; b < e.size(); ++b)
            if (auto s = e.sum(a, b))
                t.cell[map[a] * e.size() + map[b]] = static_cast<int>(map[*s]);
    return t;
}

// Every effect algebra on n elements up to isomorphism. Sums with one are
// left undefined: the zero-one law is checked on such tables anyway, so any
// table defining them is rejected. Every other cell ranges over all values.
inline std::set<std::vector<int>> oracle_algebras(std::size_t n)
{
    std::set<std::vector<int>> classes;
    const std::size_t one = n - 1;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t a = 1; a < one; ++a)
        for (std::size_t b = a; b < one; ++b)
            free.emplace_back(a, b);
    DenseTable t{n, one, std::vector<int>(n * n, -1)};
    for (std::size_t a = 0; a < n; ++a) {
        t.cell[a] = static_cast<int>(a);
        t.cell[a * n] = static_cast<int>(a);
    }
    std::vector<int> choice(free.size(), -1);
    while (true) {
        for (std::size_t k = 0; k < free.size(); ++k) {
            auto [a, b] = free[k];
            t.cell[a * n + b] = choice[k];
            t.cell[b * n + a] = choice[k];
        }
        if (oracle_is_effect_algebra(t))
            classes.insert(oracle_canonical(t));
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == static_cast<int>(n)) {
            choice[k] = -1;
            ++k;
        }
        if (k == choice.size())
            break;
    }
    return classes;
}

// Oracle order: a <= b iff b = a + c for some c, read off the raw sums.
inline bool oracle_leq(const EffectAlgebra& e, ElementId a, ElementId b)
{
    for (ElementId c = 0; c < e.size(); ++c)
        if (auto s = e.sum(a, c); s && *s == b)
            return true;
    return false;
}

// Oracle two-valued states: every 0/1 vector tried, additivity checked on all pairs.
inline std::set<std::vector<int>> oracle_two_valued(const EffectAlgebra& e)
{
    std::set<std::vector<int>> out;
    const std::size_t n = e.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = static_cast<int>(mask >> i & 1U);
        if (v[e.one()] != 1)
            continue;
        bool ok = true;
        for (ElementId a = 0; a < n && ok; ++a)
            for (ElementId b = 0; b < n && ok; ++b)
                if (auto s = e.sum(a, b))
                    ok = v[a] + v[b] == v[*s];
        if (ok)
            out.insert(v);
    }
    return out;
}

// Oracle JP test for one state, straight from the definition.
inline bool oracle_state_is_jp(const EffectAlgebra& e, const State& s)
{
    for (ElementId a = 0; a < e.size(); ++a)
        for (ElementId b = 0; b < e.size(); ++b) {
            if (s(a) != 1 || s(b) != 1)
                continue;
            bool found = false;
            for (ElementId c = 0; c < e.size() && !found; ++c)
                found = s(c) == 1 && oracle_leq(e, c, a) && oracle_leq(e, c, b);
            if (!found)
                return false;
        }
    return true;
}

// Vertex pool of the state polytope: two-valued states plus LP optima for
// random objectives, with and without a random element pinned to 1.
inline std::vector<State> vertex_pool(const EffectAlgebra& e, std::mt19937_64& rng, std::size_t objectives)
{
    std::vector<State> pool = two_valued_states(e);
    std::uniform_int_distribution<int> weight(-5, 5);
    std::uniform_int_distribution<ElementId> element(0, static_cast<ElementId>(e.size() - 1));
    for (std::size_t k = 0; k < objectives; ++k) {
        std::vector<Rational> w(e.size());
        for (auto& x : w)
            x = weight(rng);
        std::vector<std::pair<ElementId, Rational>> pins;
        if (k % 2)
            pins.emplace_back(element(rng), Rational(1));
        if (auto s = lp_minimize(e, pins, w))
            if (std::find(pool.begin(), pool.end(), *s) == pool.end())
                pool.push_back(std::move(*s));
    }
    return pool;
}

// Sampling oracle for "every state is Jauch-Piron": random finite convex
// combinations of pool vertices, each tested with the definition.
inline bool sampled_jp(const EffectAlgebra& e, const std::vector<State>& pool, std::mt19937_64& rng,
                       std::size_t samples)
{
    if (pool.empty())
        return true;
    for (const auto& s : pool)
        if (!oracle_state_is_jp(e, s))
            return false;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> count(2, std::min<std::size_t>(pool.size(), 4) + 1);
    std::uniform_int_distribution<int> weight(1, 9);
    for (std::size_t k = 0; k < samples; ++k) {
        std::vector<State> chosen;
        std::vector<Rational> w;
        Rational total = 0;
        for (std::size_t j = count(rng); j > 0; --j) {
            chosen.push_back(pool[pick(rng)]);
            w.emplace_back(weight(rng));
            total += w.back();
        }
        for (auto& x : w)
            x /= total;
        if (!oracle_state_is_jp(e, convex_combine(chosen, w)))
            return false;
    }
    return true;
}

}  // namespace testing_support
