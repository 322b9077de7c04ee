#pragma once

#include "effalg/core.hpp"
#include "effalg/states.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace effalg {

Verdict is_principal(const EffectAlgebra& algebra, ElementId a);
Verdict is_orthoalgebra(const EffectAlgebra& algebra);
/// Every element principal.
Verdict is_omp(const EffectAlgebra& algebra);
/// Independent route: a (+) b is the join of a and b for every orthogonal pair.
Verdict is_omp_by_joins(const EffectAlgebra& algebra);

std::optional<ElementId> meet(const EffectAlgebra& algebra, ElementId a, ElementId b);
std::optional<ElementId> join(const EffectAlgebra& algebra, ElementId a, ElementId b);
Verdict is_lattice(const EffectAlgebra& algebra);
Verdict is_oml(const EffectAlgebra& algebra);

/// Maximal elements of [0,a] intersected with [0,b].
std::vector<ElementId> maximal_elements(const EffectAlgebra& algebra, ElementId a, ElementId b);
Verdict has_maximality(const EffectAlgebra& algebra);

/// Every chain is finite: the strict order has no cycle, so every chain is a
/// subset of the finite carrier. `detail` reports the length of a longest chain.
Verdict is_chain_finite(const EffectAlgebra& algebra);
/// Every orthogonal system (repetitions allowed, nonzero members) has a
/// supremum of its finite partial sums.
Verdict is_orthocomplete(const EffectAlgebra& algebra);
/// Every chain in every lower cone [0,a] ^ [0,b] has an upper bound there.
Verdict has_chain_upper_bounds(const EffectAlgebra& algebra);

/// Flags keyed by short stable names; see `kFlagOrder` for rendering order.
struct ClassificationReport {
    std::map<std::string, bool> flags;
    std::map<std::string, Verdict> verdicts;

    bool flag(const std::string& key) const { return flags.at(key); }
    std::string render_text(const EffectAlgebra& algebra) const;
    /// `key=bool` pairs separated by single spaces, in fixed order.
    std::string render_flags() const;
};

extern const std::vector<std::string> kFlagOrder;

/// Structural flags always; `unital`, `sod`, `jp_algebra` and `jpcu` when
/// `with_states` is set.
ClassificationReport classify(const EffectAlgebra& algebra, bool with_states = false);

/// Implications that must hold inside any report: F=>CF=>OC=>CU=>M, L=>CU,
/// OML=>OMP=>OA, and JPCU=>L when the state flags are present. Returns the
/// violated implications as "lhs=>rhs" strings.
std::vector<std::string> report_implication_failures(const ClassificationReport& report);

}  // namespace effalg
