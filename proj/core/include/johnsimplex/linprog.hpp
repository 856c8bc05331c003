#pragma once

// Dense two-phase simplex method for inequality-form linear programs
//
//     minimize c.z  subject to  G z <= h,  z free.
//
// The solver pivots on the dual problem
//
//     minimize h.y  subject to  G^T y = -c,  y >= 0,
//
// whose tableau has one row per primal variable instead of one per
// constraint. The primal optimum is read off the final simplex
// multipliers. Pivoting follows Bland's rule, so it terminates on
// degenerate input in exact arithmetic.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "johnsimplex/scalar.hpp"

namespace johnsimplex {

template <Scalar S>
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<S> objective;                // c
    std::vector<std::vector<S>> constraints; // rows g_k
    std::vector<S> rhs;                      // h_k

    /// Appends the constraint g.z <= h.
    void add_constraint(std::vector<S> g, S h);

    /// Throws InvalidArgument unless every row has num_vars entries and
    /// there is at least one constraint.
    void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, NumericalBreakdown };

std::string to_string(LpStatus status);

template <Scalar S>
struct LPSolution {
    LpStatus status = LpStatus::NumericalBreakdown;
    std::vector<S> z;        // primal optimum (Optimal)
    S value{0};              // c.z (Optimal)
    std::vector<std::size_t> basis;  // constraint indices in the final basis, ascending

    /// Optimality certificate: multipliers y >= 0 (one per constraint) with
    /// y^T G = -c^T and -y^T h = value. Set when status is Optimal.
    std::optional<std::vector<S>> dual_certificate;

    /// Unbounded: direction r with G r <= 0 and c.r < 0.
    std::optional<std::vector<S>> ray;

    /// Infeasible: Farkas multipliers y >= 0 with y^T G = 0 and y^T h < 0.
    /// Its support is an inconsistent subsystem.
    std::optional<std::vector<S>> farkas;
    std::vector<std::size_t> inconsistent_subset;

    std::size_t pivots = 0;
};

struct LpOptions {
    /// Float mode only: pivot/feasibility tolerance and the residual bound
    /// used by the final self-check.
    double tolerance = 1e-9;
    std::size_t max_pivots = 100000;
};

template <Scalar S>
LPSolution<S> solve_lp(const LinearProgram<S>& lp, const LpOptions& options = {});

/// Re-verifies an Optimal solution: primal feasibility, y >= 0, y^T G = -c,
/// and zero duality gap. Exact re-substitution in Exact mode, tolerance
/// `tol` (relative to data magnitude) in Float mode. Throws InvalidArgument
/// when the solution is not Optimal or has no certificate.
template <Scalar S>
bool check_certificate(const LinearProgram<S>& lp, const LPSolution<S>& solution, double tol = 1e-7);

extern template struct LinearProgram<double>;
extern template struct LinearProgram<Rational>;
extern template LPSolution<double> solve_lp(const LinearProgram<double>&, const LpOptions&);
extern template LPSolution<Rational> solve_lp(const LinearProgram<Rational>&, const LpOptions&);
extern template bool check_certificate(const LinearProgram<double>&, const LPSolution<double>&, double);
extern template bool check_certificate(const LinearProgram<Rational>&, const LPSolution<Rational>&, double);

}  // namespace johnsimplex
