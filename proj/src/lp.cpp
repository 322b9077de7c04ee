#include "effalg/lp.hpp"

#include <stdexcept>

namespace effalg::lp {

namespace {

class Tableau {
public:
    Tableau(const Problem& problem) : structural_(problem.columns)
    {
        const std::size_t m = problem.rows.size();
        width_ = structural_ + m;
        rows_.assign(m, std::vector<Rational>(width_));
        rhs_.resize(m);
        basis_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const auto& row = problem.rows[i];
            bool flip = row.rhs < 0;
            for (const auto& t : row.terms) {
                if (t.column >= structural_)
                    throw std::out_of_range("lp: column index out of range");
                rows_[i][t.column] += flip ? Rational(-t.coefficient) : t.coefficient;
            }
            rhs_[i] = flip ? Rational(-row.rhs) : row.rhs;
            rows_[i][structural_ + i] = 1;
            basis_[i] = structural_ + i;
        }
        cost_.assign(width_, 0);
    }

    bool phase_one()
    {
        // Minimize the sum of artificials: reduced costs are minus the column sums.
        std::fill(cost_.begin(), cost_.end(), Rational(0));
        value_ = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < structural_; ++j)
                cost_[j] -= rows_[i][j];
            value_ -= rhs_[i];
        }
        allowed_ = width_;
        iterate();
        if (value_ != 0)
            return false;
        drive_out_artificials();
        return true;
    }

    Status phase_two(const std::vector<Rational>& objective)
    {
        allowed_ = structural_;
        std::fill(cost_.begin(), cost_.end(), Rational(0));
        for (std::size_t j = 0; j < objective.size(); ++j)
            cost_[j] = objective[j];
        value_ = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::size_t b = basis_[i];
            if (b >= structural_ || objective.empty() || cost_[b] == 0)
                continue;
            Rational cb = cost_[b];
            for (std::size_t j = 0; j < width_; ++j)
                if (rows_[i][j] != 0)
                    cost_[j] -= cb * rows_[i][j];
            value_ -= cb * rhs_[i];
        }
        return iterate() ? Status::Optimal : Status::Unbounded;
    }

    Rational objective_value() const { return -value_; }

    std::vector<Rational> point() const
    {
        std::vector<Rational> x(structural_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < structural_)
                x[basis_[i]] = rhs_[i];
        return x;
    }

private:
    // Returns false when the objective is unbounded below.
    bool iterate()
    {
        for (;;) {
            std::size_t entering = allowed_;
            for (std::size_t j = 0; j < allowed_; ++j) {
                if (cost_[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == allowed_)
                return true;

            std::size_t leaving = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const auto& a = rows_[i][entering];
                if (a <= 0)
                    continue;
                Rational ratio = rhs_[i] / a;
                if (leaving == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best = ratio;
                }
            }
            if (leaving == rows_.size())
                return false;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        auto& prow = rows_[r];
        Rational p = prow[c];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < width_; ++j) {
            if (prow[j] != 0) {
                prow[j] /= p;
                nz.push_back(j);
            }
        }
        rhs_[r] /= p;
        auto eliminate = [&](std::vector<Rational>& row, Rational& rhs) {
            if (row[c] == 0)
                return;
            Rational f = row[c];
            for (std::size_t j : nz)
                row[j] -= f * prow[j];
            rhs -= f * rhs_[r];
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r)
                eliminate(rows_[i], rhs_[i]);
        eliminate(cost_, value_);
        basis_[r] = c;
    }

    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < structural_) {
                ++i;
                continue;
            }
            std::size_t col = structural_;
            for (std::size_t j = 0; j < structural_; ++j) {
                if (rows_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col < structural_) {
                pivot(i, col);
                ++i;
            }
            else {
                // Redundant equality.
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    std::size_t structural_;
    std::size_t width_ = 0;
    std::size_t allowed_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> cost_;
    Rational value_;  // holds minus the current objective
};

}  // namespace

Solution solve(const Problem& problem)
{
    Solution out;
    Tableau tableau(problem);
    if (!tableau.phase_one()) {
        out.status = Status::Infeasible;
        return out;
    }
    out.status = tableau.phase_two(problem.objective);
    if (out.status == Status::Optimal) {
        out.x = tableau.point();
        out.value = 0;
        for (std::size_t j = 0; j < problem.objective.size() && j < out.x.size(); ++j)
            out.value += problem.objective[j] * out.x[j];
    }
    return out;
}

}  // namespace effalg::lp
