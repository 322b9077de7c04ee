#pragma once

#include "effalg/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace effalg::lp {

/// Sparse coefficient (column, value).
struct Term {
    std::size_t column;
    Rational coefficient;
};

struct EqualityRow {
    std::vector<Term> terms;
    Rational rhs;
};

/// minimize c^T x  subject to  A x = b,  x >= 0.
struct Problem {
    std::size_t columns = 0;
    std::vector<EqualityRow> rows;
    std::vector<Rational> objective;  // empty means pure feasibility
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    Rational value;
    std::vector<Rational> x;
};

/// Exact two-phase simplex with Bland's rule, so it terminates on degenerate
/// problems and is deterministic for a fixed input.
Solution solve(const Problem& problem);

}  // namespace effalg::lp
