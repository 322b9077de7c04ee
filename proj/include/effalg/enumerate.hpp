#pragma once

#include "effalg/classify.hpp"
#include "effalg/core.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace effalg {

inline constexpr std::size_t kMaxEnumerate = 6;
inline constexpr std::size_t kMaxNaiveOracle = 4;
inline constexpr std::size_t kMaxCanonical = 9;

/// Lexicographically least full sum table over all relabelings that send
/// zero to 0 and one to n-1.
struct CanonicalForm {
    std::size_t size = 0;
    std::vector<std::int16_t> cells;  // row-major n*n, -1 for undefined

    auto operator<=>(const CanonicalForm&) const = default;

    /// "<n>:" then the cells i <= j over 1..n-1, '.' for undefined.
    std::string encode() const;
};

/// Throws std::invalid_argument for carriers above kMaxCanonical.
CanonicalForm canonical_form(const EffectAlgebra& algebra);
/// Inverse of CanonicalForm::encode; zero is 0 and one is n-1.
SumTable decode_canonical(const std::string& text);

/// One representative per isomorphism class of effect algebras on n elements,
/// in canonical form, sorted by canonical form.
std::vector<EffectAlgebra> enumerate_all(std::size_t n);

/// Unpruned generator: every partial table on n <= kMaxNaiveOracle elements is
/// validated and duplicates are removed by comparing explicit orbits.
std::vector<EffectAlgebra> naive_oracle(std::size_t n);

struct TheoremTally {
    std::string name;
    std::size_t checked = 0;
    std::size_t hypothesis_held = 0;
    std::size_t violations = 0;
};

struct HarnessReport {
    std::vector<std::size_t> algebras_per_size;  // index = n
    std::vector<TheoremTally> theorems;
    std::vector<std::string> violation_details;

    std::size_t total_violations() const;
    std::string render() const;
};

/// States that are Jauch-Piron: two-valued ones and, for every nonzero a, a
/// state minimally supported on the face s(a) = 1, when it passes the check.
std::vector<State> jp_candidate_states(const EffectAlgebra& algebra);

/// Checks every implication theorem as hypothesis => conclusion on every
/// algebra with 2..n_max elements.
HarnessReport theorem_harness(std::size_t n_max);
/// Same on an explicit list (used for concrete algebras too).
void run_theorems(const EffectAlgebra& algebra, HarnessReport& report);

/// One census line: canonical encoding then classification flags.
std::string census_line(const EffectAlgebra& algebra, const ClassificationReport& report);

}  // namespace effalg
