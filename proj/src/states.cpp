#include "effalg/states.hpp"

#include "effalg/lp.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace effalg {

namespace {

std::string name_of(const EffectAlgebra& algebra, ElementId a)
{
    return algebra.name(a);
}

void check_pins(const EffectAlgebra& algebra, const std::vector<std::pair<ElementId, Rational>>& pins)
{
    for (const auto& [id, value] : pins)
        if (id >= algebra.size())
            throw std::out_of_range("pin references element " + std::to_string(id) + " outside the carrier");
}

lp::Problem state_polytope(const EffectAlgebra& algebra, const std::vector<std::pair<ElementId, Rational>>& pins)
{
    check_pins(algebra, pins);
    lp::Problem problem;
    problem.columns = algebra.size();
    problem.rows.push_back({{{algebra.zero(), Rational(1)}}, Rational(0)});
    problem.rows.push_back({{{algebra.one(), Rational(1)}}, Rational(1)});
    for (const auto& e : algebra.proper_sums()) {
        lp::EqualityRow row;
        if (e.lhs == e.rhs)
            row.terms.push_back({e.lhs, Rational(2)});
        else {
            row.terms.push_back({e.lhs, Rational(1)});
            row.terms.push_back({e.rhs, Rational(1)});
        }
        row.terms.push_back({e.result, Rational(-1)});
        row.rhs = 0;
        problem.rows.push_back(std::move(row));
    }
    for (const auto& [id, value] : pins)
        problem.rows.push_back({{{id, Rational(1)}}, value});
    return problem;
}

State as_state(std::vector<Rational> values, std::string name)
{
    State s;
    s.name = std::move(name);
    s.values = std::move(values);
    return s;
}

}  // namespace

Verdict is_state(const EffectAlgebra& algebra, const std::vector<Rational>& values)
{
    Verdict v;
    auto fail = [&](std::vector<ElementId> witness, std::string detail) {
        v.holds = false;
        v.witness = std::move(witness);
        v.detail = std::move(detail);
        return v;
    };
    if (values.size() != algebra.size())
        return fail({}, "valuation has " + std::to_string(values.size()) + " entries, carrier has " +
                            std::to_string(algebra.size()));
    if (values[algebra.one()] != 1)
        return fail({algebra.one()}, "s(1) = " + to_string(values[algebra.one()]) + ", expected 1");
    for (ElementId a = 0; a < algebra.size(); ++a)
        if (values[a] < 0 || values[a] > 1)
            return fail({a}, "s(" + name_of(algebra, a) + ") = " + to_string(values[a]) + " outside [0,1]");
    if (values[algebra.zero()] != 0)
        return fail({algebra.zero()}, "additivity fails on a+0: s(0) = " + to_string(values[algebra.zero()]));
    for (const auto& e : algebra.proper_sums())
        if (values[e.lhs] + values[e.rhs] != values[e.result])
            return fail({e.lhs, e.rhs, e.result}, "s(" + name_of(algebra, e.lhs) + " + " + name_of(algebra, e.rhs) +
                                                      ") != s(" + name_of(algebra, e.lhs) + ") + s(" +
                                                      name_of(algebra, e.rhs) + ")");
    return v;
}

std::vector<State> two_valued_states(const EffectAlgebra& algebra)
{
    const std::size_t n = algebra.size();
    const auto& sums = algebra.proper_sums();
    std::vector<std::vector<std::size_t>> watch(n);
    for (std::size_t k = 0; k < sums.size(); ++k) {
        watch[sums[k].lhs].push_back(k);
        if (sums[k].rhs != sums[k].lhs)
            watch[sums[k].rhs].push_back(k);
        watch[sums[k].result].push_back(k);
    }

    using Assignment = std::vector<std::int8_t>;
    static constexpr std::array<std::array<std::int8_t, 3>, 3> kTuples{{{0, 0, 0}, {1, 0, 1}, {0, 1, 1}}};

    // Assigns `value` to `var` and propagates; false on contradiction.
    auto propagate = [&](Assignment& vals, ElementId var, std::int8_t value) {
        std::vector<std::pair<ElementId, std::int8_t>> queue{{var, value}};
        while (!queue.empty()) {
            auto [x, val] = queue.back();
            queue.pop_back();
            if (vals[x] == val)
                continue;
            if (vals[x] != -1)
                return false;
            vals[x] = val;
            for (std::size_t k : watch[x]) {
                const std::array<ElementId, 3> vars{sums[k].lhs, sums[k].rhs, sums[k].result};
                std::array<std::uint8_t, 3> seen{0, 0, 0};  // bit v set if value v is supported
                bool any = false;
                for (const auto& t : kTuples) {
                    bool ok = true;
                    for (int p = 0; p < 3 && ok; ++p) {
                        if (vals[vars[p]] != -1 && vals[vars[p]] != t[p])
                            ok = false;
                        for (int q = 0; q < p && ok; ++q)
                            if (vars[p] == vars[q] && t[p] != t[q])
                                ok = false;
                    }
                    if (!ok)
                        continue;
                    any = true;
                    for (int p = 0; p < 3; ++p)
                        seen[p] |= static_cast<std::uint8_t>(1U << t[p]);
                }
                if (!any)
                    return false;
                for (int p = 0; p < 3; ++p)
                    if (vals[vars[p]] == -1 && (seen[p] == 1 || seen[p] == 2))
                        queue.emplace_back(vars[p], static_cast<std::int8_t>(seen[p] == 1 ? 0 : 1));
            }
        }
        return true;
    };

    std::vector<State> out;
    Assignment start(n, -1);
    if (!propagate(start, algebra.zero(), 0) || !propagate(start, algebra.one(), 1))
        return out;

    std::function<void(const Assignment&)> search = [&](const Assignment& vals) {
        ElementId next = 0;
        while (next < n && vals[next] != -1)
            ++next;
        if (next == n) {
            State s;
            s.name = "t" + std::to_string(out.size());
            for (auto v : vals)
                s.values.emplace_back(v);
            out.push_back(std::move(s));
            return;
        }
        for (std::int8_t value : {std::int8_t{0}, std::int8_t{1}}) {
            Assignment child = vals;
            if (propagate(child, next, value))
                search(child);
        }
    };
    search(start);
    return out;
}

std::optional<State> lp_feasible(const EffectAlgebra& algebra, const StatePolytopeQuery& query)
{
    auto solution = lp::solve(state_polytope(algebra, query.pins));
    if (solution.status != lp::Status::Optimal)
        return std::nullopt;
    return as_state(std::move(solution.x), "lp");
}

std::optional<std::pair<Rational, State>> lp_extremize(const EffectAlgebra& algebra, const StatePolytopeQuery& query)
{
    if (query.target >= algebra.size())
        throw std::out_of_range("lp_extremize: target outside the carrier");
    auto problem = state_polytope(algebra, query.pins);
    problem.objective.assign(algebra.size(), 0);
    problem.objective[query.target] = query.sense == Sense::Minimize ? 1 : -1;
    auto solution = lp::solve(problem);
    if (solution.status != lp::Status::Optimal)
        return std::nullopt;
    Rational value = solution.x[query.target];
    return std::make_pair(value, as_state(std::move(solution.x), "lp"));
}

std::optional<State> lp_minimize(const EffectAlgebra& algebra,
                                 const std::vector<std::pair<ElementId, Rational>>& pins,
                                 const std::vector<Rational>& weights)
{
    if (weights.size() != algebra.size())
        throw std::invalid_argument("lp_minimize: one weight per element required");
    auto problem = state_polytope(algebra, pins);
    problem.objective = weights;
    auto solution = lp::solve(problem);
    if (solution.status != lp::Status::Optimal)
        return std::nullopt;
    return as_state(std::move(solution.x), "lp");
}

Verdict unital_set_check(const EffectAlgebra& algebra, const std::vector<State>& states)
{
    for (ElementId a = 0; a < algebra.size(); ++a) {
        if (a == algebra.zero())
            continue;
        bool found = false;
        for (const auto& s : states)
            if (s(a) == 1) {
                found = true;
                break;
            }
        if (!found)
            return {false, {a}, "no state in the set takes value 1 at " + name_of(algebra, a), std::nullopt};
    }
    return {};
}

Verdict unital_full_check(const EffectAlgebra& algebra)
{
    for (ElementId a = 0; a < algebra.size(); ++a) {
        if (a == algebra.zero())
            continue;
        if (!lp_feasible(algebra, {{{a, Rational(1)}}, 0, Sense::Minimize}))
            return {false, {a}, "no state takes value 1 at " + name_of(algebra, a), std::nullopt};
    }
    return {};
}

Verdict sod_set_check(const EffectAlgebra& algebra, const std::vector<State>& states)
{
    for (ElementId a = 0; a < algebra.size(); ++a) {
        for (ElementId b = 0; b < algebra.size(); ++b) {
            if (algebra.leq(a, b))
                continue;
            bool found = false;
            for (const auto& s : states)
                if (s(a) == 1 && s(b) < 1) {
                    found = true;
                    break;
                }
            if (!found)
                return {false, {a, b},
                        name_of(algebra, a) + " is not below " + name_of(algebra, b) +
                            " but no state in the set has s(" + name_of(algebra, a) + ") = 1 > s(" +
                            name_of(algebra, b) + ")",
                        std::nullopt};
        }
    }
    return {};
}

Verdict sod_full_check(const EffectAlgebra& algebra)
{
    for (ElementId a = 0; a < algebra.size(); ++a) {
        for (ElementId b = 0; b < algebra.size(); ++b) {
            if (algebra.leq(a, b))
                continue;
            auto best = lp_extremize(algebra, {{{a, Rational(1)}}, b, Sense::Minimize});
            if (!best || best->first == 1)
                return {false, {a, b},
                        name_of(algebra, a) + " is not below " + name_of(algebra, b) +
                            (best ? " but every state with s(a) = 1 has s(b) = 1"
                                  : " but no state has s(" + name_of(algebra, a) + ") = 1"),
                        std::nullopt};
        }
    }
    return {};
}

Verdict jp_state_check(const EffectAlgebra& algebra, const State& state)
{
    for (ElementId a = 0; a < algebra.size(); ++a) {
        if (state(a) != 1)
            continue;
        for (ElementId b = a + 1; b < algebra.size(); ++b) {
            if (state(b) != 1)
                continue;
            bool found = false;
            for (ElementId c : algebra.lower_cone(a, b))
                if (state(c) == 1) {
                    found = true;
                    break;
                }
            if (!found)
                return {false, {a, b},
                        "s(" + name_of(algebra, a) + ") = s(" + name_of(algebra, b) +
                            ") = 1 but s(c) < 1 for every common lower bound c",
                        state};
        }
    }
    return {};
}

Verdict jp_algebra_check(const EffectAlgebra& algebra)
{
    for (ElementId a = 0; a < algebra.size(); ++a) {
        for (ElementId b = a + 1; b < algebra.size(); ++b) {
            if (algebra.leq(a, b) || algebra.leq(b, a))
                continue;
            std::vector<std::pair<ElementId, Rational>> pins{{a, Rational(1)}, {b, Rational(1)}};
            if (!lp_feasible(algebra, {pins, 0, Sense::Minimize}))
                continue;
            auto cone = algebra.lower_cone(a, b);
            bool covered = false;
            for (auto it = cone.rbegin(); it != cone.rend() && !covered; ++it) {
                auto best = lp_extremize(algebra, {pins, *it, Sense::Minimize});
                covered = best && best->first == 1;
            }
            if (!covered) {
                Verdict v{false, {a, b},
                          "the face s(" + name_of(algebra, a) + ") = s(" + name_of(algebra, b) +
                              ") = 1 contains a state with s(c) < 1 for every common lower bound c",
                          std::nullopt};
                v.counterexample = relative_interior_state(algebra, pins);
                return v;
            }
        }
    }
    return {};
}

State convex_combine(const std::vector<State>& states, const std::vector<Rational>& weights)
{
    if (states.empty() || states.size() != weights.size())
        throw std::invalid_argument("convex_combine: need one weight per state");
    Rational total = 0;
    for (const auto& w : weights) {
        if (w <= 0)
            throw std::invalid_argument("convex_combine: weights must be positive");
        total += w;
    }
    if (total != 1)
        throw std::invalid_argument("convex_combine: weights sum to " + to_string(total) + ", expected 1");
    const std::size_t n = states.front().values.size();
    State out;
    out.name = "mix";
    out.values.assign(n, 0);
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k].values.size() != n)
            throw std::invalid_argument("convex_combine: states over different carriers");
        for (std::size_t i = 0; i < n; ++i)
            out.values[i] += weights[k] * states[k].values[i];
    }
    return out;
}

std::optional<State> relative_interior_state(const EffectAlgebra& algebra,
                                             const std::vector<std::pair<ElementId, Rational>>& pins)
{
    std::vector<State> minimizers;
    for (ElementId c = 0; c < algebra.size(); ++c) {
        auto best = lp_extremize(algebra, {pins, c, Sense::Minimize});
        if (!best)
            return std::nullopt;
        bool duplicate = false;
        for (const auto& m : minimizers)
            duplicate = duplicate || m == best->second;
        if (!duplicate)
            minimizers.push_back(std::move(best->second));
    }
    std::vector<Rational> weights(minimizers.size(), Rational(1, static_cast<unsigned long>(minimizers.size())));
    auto out = convex_combine(minimizers, weights);
    out.name = "interior";
    return out;
}

}  // namespace effalg
