#pragma once

// Covering a point set by dilated translates of a simplex.
//
// min_dilation solves, for a simplex T with centered unit-offset form
// (a_i, b_i = 1, centroid c), the linear program
//
//     minimize lambda  over (u, lambda)
//     subject to  s * a_i.(x_j - c - u) <= lambda   for every facet i, point j
//
// with s = +1 (positive dilation) or s = -1 (T reflected through c). The
// optimal covering set is c + u + s*lambda*(T - c) = t + s*lambda*T.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "johnsimplex/geometry.hpp"
#include "johnsimplex/linprog.hpp"
#include "johnsimplex/mvs.hpp"

namespace johnsimplex {

enum class DilationSign { Positive, Negative };

std::string to_string(DilationSign sign);

template <Scalar S>
struct DilationResult {
    S lambda;               // minimal dilation magnitude
    DilationSign sign = DilationSign::Positive;
    Point<S> translate;     // X is covered by translate + (+/-)lambda * T
    LpStatus status = LpStatus::Optimal;
    std::optional<std::vector<S>> certificate;  // LP dual multipliers
    LPSolution<S> solution;
};

/// The containment LP that min_dilation solves, exposed for certificate
/// re-verification. Variables are (u_1..u_d, lambda).
template <Scalar S>
LinearProgram<S> dilation_program(const Simplex<S>& simplex, const PointSet<S>& points, DilationSign sign);

template <Scalar S>
DilationResult<S> min_dilation(const Simplex<S>& simplex, const PointSet<S>& points, DilationSign sign,
                               const LpOptions& lp_options = {});

/// The covering simplex translate + (+/-)lambda * T described by a result.
template <Scalar S>
Simplex<S> covering_simplex(const Simplex<S>& simplex, const DilationResult<S>& result);

/// True iff every point of X lies in the covering simplex of `result`
/// (tolerance ignored in Exact mode).
template <Scalar S>
bool covers(const Simplex<S>& simplex, const PointSet<S>& points, const DilationResult<S>& result,
            double tol = kDefaultFloatTolerance);

/// The simplex bounded by the hyperplanes through each vertex parallel to
/// its opposite facet; equals the dilation of T by -d about its centroid.
template <Scalar S>
Simplex<S> vertex_hyperplane_simplex(const Simplex<S>& simplex);

template <Scalar S>
struct SwapViolation {
    std::size_t vertex;  // slot of T being replaced
    std::size_t point;   // index into X
    S volume_ratio;      // vol(swapped) / vol(T) > 1
};

template <Scalar S>
struct FacetSlack {
    S lower;  // min_x a_i.(x - c) + d  (distance to the vertex hyperplane side)
    S upper;  // (d + 2) - max_x a_i.(x - c)  (distance to the facet of T')
};

template <Scalar S>
struct SandwichReport {
    bool locally_maximal = true;
    std::optional<SwapViolation<S>> swap_violation;  // worst improving swap
    bool in_hat = true;        // X inside the slab intersection
    bool hat_in_prime = true;  // slab intersection inside (d+2)-dilation
    std::vector<FacetSlack<S>> slacks;
    bool ok = true;
};

/// Checks the inclusion chain X in (slab intersection) in T' = (d+2)T about
/// the centroid. Swap-local maximality of T is checked first, by comparing
/// actual determinant volumes of every single-vertex swap.
template <Scalar S>
SandwichReport<S> verify_sandwich(const Simplex<S>& simplex, const PointSet<S>& points,
                                  double tol = kDefaultFloatTolerance);

struct CoverOptions {
    MvsOptions mvs;
    std::uint64_t seed = 0;
    /// Float-mode tolerance for containment and bound checks.
    double tol = kDefaultFloatTolerance;
    LpOptions lp;
    /// Use local search even when exact enumeration fits under the cap.
    bool force_local_search = false;
    /// Throw TheoremViolation when a proven bound fails for a global MVS.
    bool throw_on_violation = true;
};

template <Scalar S>
MvsResult<S> select_mvs(const PointSet<S>& points, const CoverOptions& options);

template <Scalar S>
struct CoverReport {
    MvsResult<S> mvs;
    DilationResult<S> positive;
    DilationResult<S> negative;
    Simplex<S> d_plus_2_construction;  // T' = dilate_about_center(T, d+2)
    bool construction_contains = true; // X in T' with no translate
    SandwichReport<S> sandwich;
    bool sandwich_ok = true;
    bool bounds_ok = true;             // lambda+ <= d+2 and lambda- <= d
    bool escalated = false;            // local search failed and exact MVS was used
    std::vector<std::string> warnings;
};

/// Negative cover from the MVS of X; throws TheoremViolation if lambda > d.
template <Scalar S>
DilationResult<S> john_negative_cover(const PointSet<S>& points, const CoverOptions& options = {});

template <Scalar S>
CoverReport<S> john_positive_cover(const PointSet<S>& points, const CoverOptions& options = {});

#define JOHNSIMPLEX_COVERING_EXTERN(S)                                                                      \
    extern template LinearProgram<S> dilation_program(const Simplex<S>&, const PointSet<S>&, DilationSign); \
    extern template DilationResult<S> min_dilation(const Simplex<S>&, const PointSet<S>&, DilationSign,     \
                                                   const LpOptions&);                                       \
    extern template Simplex<S> covering_simplex(const Simplex<S>&, const DilationResult<S>&);               \
    extern template bool covers(const Simplex<S>&, const PointSet<S>&, const DilationResult<S>&, double);   \
    extern template Simplex<S> vertex_hyperplane_simplex(const Simplex<S>&);                                \
    extern template SandwichReport<S> verify_sandwich(const Simplex<S>&, const PointSet<S>&, double);       \
    extern template MvsResult<S> select_mvs(const PointSet<S>&, const CoverOptions&);                       \
    extern template DilationResult<S> john_negative_cover(const PointSet<S>&, const CoverOptions&);         \
    extern template CoverReport<S> john_positive_cover(const PointSet<S>&, const CoverOptions&);

JOHNSIMPLEX_COVERING_EXTERN(double)
JOHNSIMPLEX_COVERING_EXTERN(Rational)
#undef JOHNSIMPLEX_COVERING_EXTERN

}  // namespace johnsimplex
