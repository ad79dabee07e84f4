#include "toric/lp.hpp"

#include <stdexcept>

namespace toric {

namespace {

void check_dimensions(const LinearSystem& sys) {
    auto check_rows = [&](const std::vector<RationalVector>& rows, const char* kind) {
        for (const auto& row : rows) {
            if (row.size() != sys.num_vars) {
                throw std::invalid_argument(std::string("lp: ") + kind + " row has " +
                                            std::to_string(row.size()) + " coefficients, expected " +
                                            std::to_string(sys.num_vars));
            }
        }
    };
    check_rows(sys.eq_rows, "equality");
    check_rows(sys.ge_one_rows, "inequality");
    for (auto v : sys.nonneg_vars) {
        if (v >= sys.num_vars) {
            throw std::invalid_argument("lp: nonnegative variable " + std::to_string(v) +
                                        " out of range for " + std::to_string(sys.num_vars) + " variables");
        }
    }
}

// Dense phase-1 tableau in standard form A x = b, x >= 0, b >= 0, with one
// artificial per row.  Bland's rule on both entering and leaving choices.
class Phase1Tableau {
public:
    Phase1Tableau(std::vector<RationalVector> a, RationalVector b)
        : rows_(a.size()), structural_(rows_ ? a.front().size() : 0), cols_(structural_ + rows_),
          t_(rows_, RationalVector(cols_ + 1)), cost_(cols_ + 1), basis_(rows_) {
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t j = 0; j < structural_; ++j) t_[r][j] = a[r][j];
            t_[r][structural_ + r] = 1;
            t_[r][cols_] = b[r];
            basis_[r] = structural_ + r;
        }
        // Reduced costs of sum(artificials) after pricing out the basis.
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j <= cols_; ++j)
                if (j < structural_ || j == cols_) cost_[j] -= t_[r][j];
    }

    /// Runs to optimality; returns true when the artificials can all be zero.
    bool solve() {
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (cost_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols_) break;

            std::size_t leave = rows_;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (t_[r][enter] <= 0) continue;
                Rational ratio = t_[r][cols_] / t_[r][enter];
                if (leave == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            // Phase 1 is bounded below by zero, so a ratio always exists.
            if (leave == rows_) throw std::logic_error("lp: unbounded phase-1 direction");
            pivot(leave, enter);
        }
        return cost_[cols_] == 0;
    }

    RationalVector structural_values() const {
        RationalVector x(structural_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (basis_[r] < structural_) x[basis_[r]] = t_[r][cols_];
        return x;
    }

private:
    void pivot(std::size_t pr, std::size_t pc) {
        const Rational p = t_[pr][pc];
        for (auto& x : t_[pr]) x /= p;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr || t_[r][pc] == 0) continue;
            const Rational f = t_[r][pc];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (t_[pr][j] != 0) t_[r][j] -= f * t_[pr][j];
        }
        if (cost_[pc] != 0) {
            const Rational f = cost_[pc];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (t_[pr][j] != 0) cost_[j] -= f * t_[pr][j];
        }
        basis_[pr] = pc;
    }

    std::size_t rows_;
    std::size_t structural_;
    std::size_t cols_;
    std::vector<RationalVector> t_;
    RationalVector cost_;
    std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<RationalVector> lp_feasible(const LinearSystem& sys) {
    check_dimensions(sys);
    const std::size_t n = sys.num_vars;

    // Column layout: one column per nonnegative variable, a +/- pair per
    // free variable, then one surplus column per ">= 1" row.
    std::vector<bool> nonneg(n, false);
    for (auto v : sys.nonneg_vars) nonneg[v] = true;
    std::vector<std::size_t> pos(n), neg(n, static_cast<std::size_t>(-1));
    std::size_t cols = 0;
    for (std::size_t i = 0; i < n; ++i) {
        pos[i] = cols++;
        if (!nonneg[i]) neg[i] = cols++;
    }
    const std::size_t first_surplus = cols;
    cols += sys.ge_one_rows.size();

    std::vector<RationalVector> a;
    RationalVector b;
    auto add_row = [&](const RationalVector& row, const Rational& rhs, std::size_t surplus) {
        RationalVector r(cols);
        for (std::size_t i = 0; i < n; ++i) {
            r[pos[i]] = row[i];
            if (!nonneg[i]) r[neg[i]] = -row[i];
        }
        if (surplus != cols) r[surplus] = -1;
        a.push_back(std::move(r));
        b.push_back(rhs);
    };
    for (const auto& row : sys.eq_rows) add_row(row, 0, cols);
    for (std::size_t k = 0; k < sys.ge_one_rows.size(); ++k) add_row(sys.ge_one_rows[k], 1, first_surplus + k);

    if (a.empty()) return RationalVector(n);

    Phase1Tableau tableau(std::move(a), std::move(b));
    if (!tableau.solve()) return std::nullopt;

    const RationalVector x = tableau.structural_values();
    RationalVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = x[pos[i]];
        if (!nonneg[i]) y[i] -= x[neg[i]];
    }
    if (!satisfies(sys, y)) throw std::logic_error("lp: witness failed substitution check");
    return y;
}

bool satisfies(const LinearSystem& sys, const RationalVector& y) {
    if (y.size() != sys.num_vars) return false;
    auto dot = [&](const RationalVector& row) {
        Rational s = 0;
        for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * y[i];
        return s;
    };
    for (const auto& row : sys.eq_rows)
        if (dot(row) != 0) return false;
    for (const auto& row : sys.ge_one_rows)
        if (dot(row) < 1) return false;
    for (auto v : sys.nonneg_vars)
        if (y[v] < 0) return false;
    return true;
}

}  // namespace toric
