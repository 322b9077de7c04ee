#pragma once

#include "effalg/core.hpp"
#include "effalg/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace effalg {

/// A valuation of every element of one algebra.
struct State {
    std::string name;
    std::vector<Rational> values;

    const Rational& operator()(ElementId a) const { return values[a]; }
    bool operator==(const State& other) const { return values == other.values; }
};

/// Outcome of a yes/no decision. `witness` names the failing element(s) when
/// `holds` is false; it is empty otherwise.
struct Verdict {
    bool holds = true;
    std::vector<ElementId> witness;
    std::string detail;
    std::optional<State> counterexample;

    explicit operator bool() const { return holds; }
};

Verdict is_state(const EffectAlgebra& algebra, const std::vector<Rational>& values);
inline Verdict is_state(const EffectAlgebra& algebra, const State& state)
{
    return is_state(algebra, state.values);
}

/// Every {0,1}-valued state, by backtracking on elements in id order with
/// 0 tried before 1. Deterministic.
std::vector<State> two_valued_states(const EffectAlgebra& algebra);

enum class Sense { Minimize, Maximize };

struct StatePolytopeQuery {
    std::vector<std::pair<ElementId, Rational>> pins;
    ElementId target = 0;
    Sense sense = Sense::Minimize;
};

/// Some state satisfying the pins, or nothing if none exists.
std::optional<State> lp_feasible(const EffectAlgebra& algebra, const StatePolytopeQuery& query);

/// Exact optimum of s(target) over the pinned face and a state attaining it.
std::optional<std::pair<Rational, State>> lp_extremize(const EffectAlgebra& algebra,
                                                        const StatePolytopeQuery& query);

/// Minimizer of a general linear objective sum_i weight_i * s(i) over the pinned face.
std::optional<State> lp_minimize(const EffectAlgebra& algebra,
                                 const std::vector<std::pair<ElementId, Rational>>& pins,
                                 const std::vector<Rational>& weights);

Verdict unital_set_check(const EffectAlgebra& algebra, const std::vector<State>& states);
Verdict unital_full_check(const EffectAlgebra& algebra);

Verdict sod_set_check(const EffectAlgebra& algebra, const std::vector<State>& states);
Verdict sod_full_check(const EffectAlgebra& algebra);

Verdict jp_state_check(const EffectAlgebra& algebra, const State& state);
/// Decides whether every state is Jauch-Piron. For each pair a,b the face
/// {s : s(a) = s(b) = 1} is a polytope; it lies in the union of the faces
/// {s(c) = 1}, c <= a,b, only if it lies in one of them, so it is enough to
/// find a c whose minimum over the face is 1.
Verdict jp_algebra_check(const EffectAlgebra& algebra);

/// Finite convex combination. Throws std::invalid_argument unless the weights
/// are positive, sum to 1 and match the states in number and size.
State convex_combine(const std::vector<State>& states, const std::vector<Rational>& weights);

/// A state whose set {a : s(a) = 1} is as small as possible on the face cut
/// out by the pins: s(c) = 1 exactly when every state on the face has s(c) = 1.
std::optional<State> relative_interior_state(const EffectAlgebra& algebra,
                                             const std::vector<std::pair<ElementId, Rational>>& pins);

}  // namespace effalg
