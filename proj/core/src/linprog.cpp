#include "johnsimplex/linprog.hpp"

#include <algorithm>
#include <cmath>

#include "johnsimplex/errors.hpp"
#include "johnsimplex/matrix.hpp"

namespace johnsimplex {

std::string to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
        case LpStatus::NumericalBreakdown: return "numerical_breakdown";
    }
    return "unknown";
}

template <Scalar S>
void LinearProgram<S>::add_constraint(std::vector<S> g, S h) {
    constraints.push_back(std::move(g));
    rhs.push_back(std::move(h));
}

template <Scalar S>
void LinearProgram<S>::validate() const {
    if (num_vars == 0) throw InvalidArgument("linear program needs at least one variable");
    if (objective.size() != num_vars) throw InvalidArgument("objective length differs from num_vars");
    if (constraints.empty()) throw InvalidArgument("linear program needs at least one constraint");
    if (constraints.size() != rhs.size()) throw InvalidArgument("constraint and rhs counts differ");
    for (const auto& row : constraints) {
        if (row.size() != num_vars) throw InvalidArgument("constraint row length differs from num_vars");
    }
}

namespace {

// Tableau for  min cost.x  s.t.  A x = b, x >= 0  with one artificial per row.
// Columns [0, n) are structural, [n, n+m) artificial, n+m holds the rhs.
template <Scalar S>
class DualTableau {
public:
    DualTableau(const LinearProgram<S>& lp, const LpOptions& options)
        : m_(lp.num_vars), n_(lp.constraints.size()), options_(options),
          table_(m_, n_ + m_ + 1), reduced_(n_ + m_ + 1, S(0)), basis_(m_), row_sign_(m_, 1) {
        double scale = 1.0;
        for (std::size_t k = 0; k < n_; ++k) {
            for (std::size_t r = 0; r < m_; ++r) {
                table_(r, k) = lp.constraints[k][r];
                scale = std::max(scale, to_double(abs_value(lp.constraints[k][r])));
            }
            scale = std::max(scale, to_double(abs_value(lp.rhs[k])));
        }
        for (std::size_t r = 0; r < m_; ++r) {
            table_(r, rhs_col()) = -lp.objective[r];
            scale = std::max(scale, to_double(abs_value(lp.objective[r])));
        }
        eps_ = is_exact_v<S> ? 0.0 : options.tolerance * scale;
        for (std::size_t r = 0; r < m_; ++r) {
            if (sign(table_(r, rhs_col())) < 0) {
                row_sign_[r] = -1;
                for (std::size_t c = 0; c <= rhs_col(); ++c) table_(r, c) = -table_(r, c);
            }
            table_(r, n_ + r) = S(1);
            basis_[r] = n_ + r;
        }
        cost_.assign(lp.rhs.begin(), lp.rhs.end());
    }

    enum class Outcome { Optimal, Unbounded, PivotLimit };

    // Phase 1; returns false when the equality system has no nonnegative
    // solution.
    Outcome phase_one(bool& feasible) {
        std::vector<S> phase_cost(n_ + m_, S(0));
        for (std::size_t r = 0; r < m_; ++r) phase_cost[n_ + r] = S(1);
        price(phase_cost);
        const Outcome out = iterate(/*allow_artificial=*/true);
        if (out != Outcome::Optimal) return out;
        const S value = -reduced_[rhs_col()];
        feasible = is_zero(value);
        if (!feasible) {
            phase_one_multipliers_.assign(m_, S(0));
            for (std::size_t r = 0; r < m_; ++r) phase_one_multipliers_[r] = S(1) - reduced_[n_ + r];
            return out;
        }
        drive_out_artificials();
        return out;
    }

    Outcome phase_two() {
        std::vector<S> phase_cost(n_ + m_, S(0));
        for (std::size_t k = 0; k < n_; ++k) phase_cost[k] = cost_[k];
        price(phase_cost);
        return iterate(/*allow_artificial=*/false);
    }

    // Multipliers of the original (unflipped) equality rows.
    std::vector<S> multipliers() const {
        std::vector<S> pi(m_, S(0));
        for (std::size_t r = 0; r < m_; ++r) {
            const S p = -reduced_[n_ + r];
            pi[r] = row_sign_[r] < 0 ? S(-p) : p;
        }
        return pi;
    }

    std::vector<S> phase_one_ray() const {
        std::vector<S> ray(m_, S(0));
        for (std::size_t r = 0; r < m_; ++r) {
            ray[r] = row_sign_[r] < 0 ? S(-phase_one_multipliers_[r]) : phase_one_multipliers_[r];
        }
        return ray;
    }

    std::vector<S> basic_solution() const {
        std::vector<S> y(n_, S(0));
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) y[basis_[r]] = table_(r, rhs_col());
        }
        return y;
    }

    std::vector<std::size_t> structural_basis() const {
        std::vector<std::size_t> out;
        for (std::size_t b : basis_) {
            if (b < n_) out.push_back(b);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Direction along which the last phase-two objective decreases forever.
    std::vector<S> unbounded_direction() const {
        std::vector<S> y(n_, S(0));
        y[unbounded_column_] = S(1);
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) y[basis_[r]] = -table_(r, unbounded_column_);
        }
        return y;
    }

    std::size_t pivots() const { return pivots_; }

private:
    std::size_t rhs_col() const { return n_ + m_; }

    bool is_zero(const S& v) const {
        if constexpr (is_exact_v<S>) {
            return sign(v) == 0;
        } else {
            return std::fabs(v) <= eps_;
        }
    }
    bool is_negative(const S& v) const {
        if constexpr (is_exact_v<S>) {
            return sign(v) < 0;
        } else {
            return v < -eps_;
        }
    }
    bool is_positive(const S& v) const {
        if constexpr (is_exact_v<S>) {
            return sign(v) > 0;
        } else {
            return v > eps_;
        }
    }

    void price(const std::vector<S>& column_cost) {
        for (std::size_t c = 0; c < n_ + m_; ++c) reduced_[c] = column_cost[c];
        reduced_[rhs_col()] = S(0);
        for (std::size_t r = 0; r < m_; ++r) {
            const S& cb = column_cost[basis_[r]];
            if (sign(cb) == 0) continue;
            for (std::size_t c = 0; c <= rhs_col(); ++c) {
                if (sign(table_(r, c)) != 0) reduced_[c] -= cb * table_(r, c);
            }
        }
    }

    Outcome iterate(bool allow_artificial) {
        const std::size_t limit = allow_artificial ? n_ + m_ : n_;
        for (;;) {
            // Bland: lowest-index improving column
            std::size_t entering = limit;
            for (std::size_t c = 0; c < limit; ++c) {
                if (is_negative(reduced_[c])) {
                    entering = c;
                    break;
                }
            }
            if (entering == limit) return Outcome::Optimal;

            std::size_t leaving = m_;
            S best_ratio(0);
            for (std::size_t r = 0; r < m_; ++r) {
                if (!is_positive(table_(r, entering))) continue;
                const S ratio = table_(r, rhs_col()) / table_(r, entering);
                if (leaving == m_) {
                    leaving = r;
                    best_ratio = ratio;
                    continue;
                }
                bool better;
                if constexpr (is_exact_v<S>) {
                    better = ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leaving]);
                } else {
                    const double slack = eps_ * std::max(1.0, std::fabs(best_ratio));
                    better = ratio < best_ratio - slack ||
                             (std::fabs(ratio - best_ratio) <= slack && basis_[r] < basis_[leaving]);
                }
                if (better) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (leaving == m_) {
                unbounded_column_ = entering;
                return Outcome::Unbounded;
            }
            if (pivots_ >= options_.max_pivots) return Outcome::PivotLimit;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        ++pivots_;
        const std::size_t width = rhs_col() + 1;
        const S inv = S(1) / table_(row, col);
        std::vector<std::size_t> nonzero;
        nonzero.reserve(width);
        for (std::size_t c = 0; c < width; ++c) {
            if (sign(table_(row, c)) == 0) continue;
            table_(row, c) *= inv;
            nonzero.push_back(c);
        }
        table_(row, col) = S(1);
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == row || sign(table_(r, col)) == 0) continue;
            const S f = table_(r, col);
            for (std::size_t c : nonzero) table_(r, c) -= f * table_(row, c);
            table_(r, col) = S(0);
        }
        if (sign(reduced_[col]) != 0) {
            const S f = reduced_[col];
            for (std::size_t c : nonzero) reduced_[c] -= f * table_(row, c);
            reduced_[col] = S(0);
        }
        basis_[row] = col;
        if constexpr (!is_exact_v<S>) {
            for (std::size_t r = 0; r < m_; ++r) {
                if (std::fabs(table_(r, rhs_col())) <= eps_ * 1e-3) table_(r, rhs_col()) = 0.0;
            }
        }
    }

    void drive_out_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) continue;
            if constexpr (!is_exact_v<S>) table_(r, rhs_col()) = 0.0;
            std::size_t col = n_;
            if constexpr (is_exact_v<S>) {
                for (std::size_t c = 0; c < n_; ++c) {
                    if (sign(table_(r, c)) != 0) {
                        col = c;
                        break;
                    }
                }
            } else {
                double best = eps_;
                for (std::size_t c = 0; c < n_; ++c) {
                    if (std::fabs(table_(r, c)) > best) {
                        best = std::fabs(table_(r, c));
                        col = c;
                    }
                }
            }
            // A row with no structural entry is redundant; its artificial
            // stays basic at zero and never leaves.
            if (col < n_) pivot(r, col);
        }
    }

    std::size_t m_;
    std::size_t n_;
    LpOptions options_;
    double eps_ = 0.0;
    Matrix<S> table_;
    std::vector<S> reduced_;
    std::vector<std::size_t> basis_;
    std::vector<int> row_sign_;
    std::vector<S> cost_;
    std::vector<S> phase_one_multipliers_;
    std::size_t unbounded_column_ = 0;
    std::size_t pivots_ = 0;
};

template <Scalar S>
S dot_row(const std::vector<S>& a, const std::vector<S>& b) {
    S acc(0);
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
}

template <Scalar S>
[[noreturn]] void pivot_limit() {
    throw SolverFailure("simplex pivot limit reached in exact arithmetic");
}

template <Scalar S>
LPSolution<S> breakdown(std::size_t pivots) {
    LPSolution<S> out;
    out.status = LpStatus::NumericalBreakdown;
    out.pivots = pivots;
    return out;
}

template <Scalar S>
bool verify_farkas(const LinearProgram<S>& lp, const std::vector<S>& y, double tol) {
    double scale = 1.0;
    for (const S& v : y) {
        if (!leq(S(0), v, tol)) return false;
        scale = std::max(scale, to_double(abs_value(v)));
    }
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        S acc(0);
        for (std::size_t k = 0; k < y.size(); ++k) acc += y[k] * lp.constraints[k][j];
        if (!approx_equal(acc, S(0), tol * scale)) return false;
    }
    const S yh = dot_row(y, lp.rhs);
    if constexpr (is_exact_v<S>) {
        return sign(yh) < 0;
    } else {
        return yh < -tol * scale;
    }
}

template <Scalar S>
bool verify_ray(const LinearProgram<S>& lp, const std::vector<S>& ray, double tol) {
    double scale = 1.0;
    for (const S& v : ray) scale = std::max(scale, to_double(abs_value(v)));
    for (const auto& row : lp.constraints) {
        if (!leq(dot_row(row, ray), S(0), tol * scale)) return false;
    }
    const S cr = dot_row(lp.objective, ray);
    if constexpr (is_exact_v<S>) {
        return sign(cr) < 0;
    } else {
        return cr < -tol * scale;
    }
}

}  // namespace

template <Scalar S>
LPSolution<S> solve_lp(const LinearProgram<S>& lp, const LpOptions& options) {
    lp.validate();
    using Outcome = typename DualTableau<S>::Outcome;
    const double check_tol = is_exact_v<S> ? 0.0 : std::max(1e-7, 100 * options.tolerance);

    DualTableau<S> tableau(lp, options);
    bool dual_feasible = false;
    Outcome out = tableau.phase_one(dual_feasible);
    if (out == Outcome::PivotLimit) {
        if constexpr (is_exact_v<S>) pivot_limit<S>();
        return breakdown<S>(tableau.pivots());
    }
    if (out == Outcome::Unbounded) {
        // phase one is bounded below by zero
        if constexpr (is_exact_v<S>) throw SolverFailure("phase one reported unbounded");
        return breakdown<S>(tableau.pivots());
    }

    if (!dual_feasible) {
        // Either unbounded or infeasible; settle feasibility with c = 0.
        LinearProgram<S> feasibility = lp;
        feasibility.objective.assign(lp.num_vars, S(0));
        LPSolution<S> probe = solve_lp(feasibility, options);
        if (probe.status == LpStatus::Infeasible || probe.status == LpStatus::NumericalBreakdown) {
            probe.pivots += tableau.pivots();
            return probe;
        }
        LPSolution<S> sol;
        sol.status = LpStatus::Unbounded;
        sol.ray = tableau.phase_one_ray();
        sol.z = probe.z;
        sol.pivots = tableau.pivots() + probe.pivots;
        if (!verify_ray(lp, *sol.ray, check_tol)) {
            if constexpr (is_exact_v<S>) throw SolverFailure("unbounded ray failed verification");
            return breakdown<S>(sol.pivots);
        }
        return sol;
    }

    out = tableau.phase_two();
    if (out == Outcome::PivotLimit) {
        if constexpr (is_exact_v<S>) pivot_limit<S>();
        return breakdown<S>(tableau.pivots());
    }

    LPSolution<S> sol;
    sol.pivots = tableau.pivots();
    if (out == Outcome::Unbounded) {
        sol.status = LpStatus::Infeasible;
        sol.farkas = tableau.unbounded_direction();
        for (std::size_t k = 0; k < sol.farkas->size(); ++k) {
            if (sign((*sol.farkas)[k]) != 0) sol.inconsistent_subset.push_back(k);
        }
        if (!verify_farkas(lp, *sol.farkas, check_tol)) {
            if constexpr (is_exact_v<S>) throw SolverFailure("Farkas certificate failed verification");
            return breakdown<S>(sol.pivots);
        }
        return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.z = tableau.multipliers();
    sol.value = dot_row(lp.objective, sol.z);
    sol.dual_certificate = tableau.basic_solution();
    sol.basis = tableau.structural_basis();
    if (!check_certificate(lp, sol, check_tol)) {
        if constexpr (is_exact_v<S>) throw SolverFailure("optimality certificate failed verification");
        return breakdown<S>(sol.pivots);
    }
    return sol;
}

template <Scalar S>
bool check_certificate(const LinearProgram<S>& lp, const LPSolution<S>& solution, double tol) {
    if (solution.status != LpStatus::Optimal) throw InvalidArgument("certificate check needs an optimal solution");
    if (!solution.dual_certificate) throw InvalidArgument("solution carries no dual certificate");
    lp.validate();
    const auto& y = *solution.dual_certificate;
    if (solution.z.size() != lp.num_vars || y.size() != lp.constraints.size()) return false;

    for (std::size_t k = 0; k < lp.constraints.size(); ++k) {
        if (!leq(dot_row(lp.constraints[k], solution.z), lp.rhs[k], tol)) return false;
    }
    for (const S& v : y) {
        if (!leq(S(0), v, tol)) return false;
    }
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        S acc(0);
        for (std::size_t k = 0; k < y.size(); ++k) acc += y[k] * lp.constraints[k][j];
        if (!approx_equal(acc, S(-lp.objective[j]), tol)) return false;
    }
    const S primal = dot_row(lp.objective, solution.z);
    const S dual = -dot_row(y, lp.rhs);
    return approx_equal(primal, solution.value, tol) && approx_equal(dual, solution.value, tol);
}

template struct LinearProgram<double>;
template struct LinearProgram<Rational>;
template LPSolution<double> solve_lp(const LinearProgram<double>&, const LpOptions&);
template LPSolution<Rational> solve_lp(const LinearProgram<Rational>&, const LpOptions&);
template bool check_certificate(const LinearProgram<double>&, const LPSolution<double>&, double);
template bool check_certificate(const LinearProgram<Rational>&, const LPSolution<Rational>&, double);

}  // namespace johnsimplex
