#include "johnsimplex/covering.hpp"

#include <string>

namespace johnsimplex {

std::string to_string(DilationSign sign) { return sign == DilationSign::Positive ? "positive" : "negative"; }

namespace {

template <Scalar S>
S signed_unit(DilationSign sign) {
    return sign == DilationSign::Positive ? S(1) : S(-1);
}

template <Scalar S>
void check_dims(const Simplex<S>& simplex, const PointSet<S>& points) {
    if (points.dim() != simplex.dim()) throw DimensionMismatch("point set and simplex dimensions differ");
    if (points.empty()) throw InvalidArgument("point set is empty");
}

}  // namespace

template <Scalar S>
LinearProgram<S> dilation_program(const Simplex<S>& simplex, const PointSet<S>& points, DilationSign sign) {
    check_dims(simplex, points);
    const std::size_t d = simplex.dim();
    const HalfspaceForm<S> form = halfspace_form(simplex);
    const S s = signed_unit<S>(sign);

    LinearProgram<S> lp;
    lp.num_vars = d + 1;
    lp.objective.assign(d + 1, S(0));
    lp.objective[d] = S(1);
    lp.constraints.reserve((d + 1) * points.size());
    lp.rhs.reserve((d + 1) * points.size());
    // s a_i.(x_j - c) - s a_i.u - lambda <= 0
    for (std::size_t i = 0; i <= d; ++i) {
        std::vector<S> normal(d);
        for (std::size_t k = 0; k < d; ++k) normal[k] = s * form.normals[i][k];
        for (const auto& x : points) {
            std::vector<S> row(d + 1);
            S value(0);
            for (std::size_t k = 0; k < d; ++k) {
                row[k] = -normal[k];
                value += normal[k] * (x[k] - form.center[k]);
            }
            row[d] = S(-1);
            lp.add_constraint(std::move(row), S(-value));
        }
    }
    return lp;
}

template <Scalar S>
DilationResult<S> min_dilation(const Simplex<S>& simplex, const PointSet<S>& points, DilationSign sign,
                               const LpOptions& lp_options) {
    const LinearProgram<S> lp = dilation_program(simplex, points, sign);
    LPSolution<S> sol = solve_lp(lp, lp_options);
    if (sol.status != LpStatus::Optimal) {
        // lambda large is always feasible and lambda >= 0 bounds the objective
        throw SolverFailure("containment LP returned status " + to_string(sol.status));
    }
    const std::size_t d = simplex.dim();
    const Point<S> c = centroid(simplex);
    Point<S> u(std::vector<S>(sol.z.begin(), sol.z.begin() + static_cast<std::ptrdiff_t>(d)));
    const S lambda = sol.z[d];
    // c + u + s lambda (T - c) = (c + u - s lambda c) + s lambda T
    Point<S> translate = c + u - (signed_unit<S>(sign) * lambda) * c;
    DilationResult<S> result{lambda, sign, std::move(translate), sol.status, sol.dual_certificate, std::move(sol)};
    return result;
}

template <Scalar S>
Simplex<S> covering_simplex(const Simplex<S>& simplex, const DilationResult<S>& result) {
    if (sign(result.lambda) == 0) throw DegenerateSimplex("zero dilation collapses the simplex");
    const S factor = signed_unit<S>(result.sign) * result.lambda;
    std::vector<Point<S>> vertices;
    vertices.reserve(simplex.vertices().size());
    for (const auto& v : simplex.vertices()) vertices.push_back(result.translate + factor * v);
    return Simplex<S>(std::move(vertices));
}

template <Scalar S>
bool covers(const Simplex<S>& simplex, const PointSet<S>& points, const DilationResult<S>& result, double tol) {
    check_dims(simplex, points);
    const double t = effective_tolerance<S>(tol);
    if (sign(result.lambda) == 0) {
        // the cover collapses to the single point `translate`
        for (const auto& x : points) {
            for (std::size_t k = 0; k < x.dim(); ++k) {
                if (!approx_equal(x[k], result.translate[k], t)) return false;
            }
        }
        return true;
    }
    const HalfspaceForm<S> form = halfspace_form(covering_simplex(simplex, result));
    for (const auto& x : points) {
        if (!contains(form, x, t)) return false;
    }
    return true;
}

template <Scalar S>
Simplex<S> vertex_hyperplane_simplex(const Simplex<S>& simplex) {
    return dilate_about_center(simplex, S(-static_cast<long>(simplex.dim())));
}

template <Scalar S>
SandwichReport<S> verify_sandwich(const Simplex<S>& simplex, const PointSet<S>& points, double tol) {
    check_dims(simplex, points);
    const std::size_t d = simplex.dim();
    const double t = effective_tolerance<S>(tol);
    SandwichReport<S> report;

    // swap-local maximality by direct volume comparison
    const S base_volume = simplex_volume(simplex);
    std::vector<Point<S>> swapped = simplex.vertices();
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            swapped[i] = points[j];
            const S ratio = simplex_volume(std::span<const Point<S>>(swapped)) / base_volume;
            if (!leq(ratio, S(1), t)) {
                report.locally_maximal = false;
                if (!report.swap_violation || ratio > report.swap_violation->volume_ratio) {
                    report.swap_violation = SwapViolation<S>{i, j, ratio};
                }
            }
        }
        swapped[i] = simplex.vertex(i);
    }

    // X inside the slab intersection -d <= a_i.(x - c) <= d + 2
    const HalfspaceForm<S> form = halfspace_form(simplex);
    const S lower(-static_cast<long>(d));
    const S upper(static_cast<long>(d + 2));
    report.slacks.reserve(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        S lo = form.facet_value(i, points[0]);
        S hi = lo;
        for (const auto& x : points) {
            const S v = form.facet_value(i, x);
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        if (!leq(lower, lo, t) || !leq(hi, upper, t)) report.in_hat = false;
        report.slacks.push_back(FacetSlack<S>{S(lo - lower), S(upper - hi)});
    }

    // The upper facets of the slab intersection are the facets of T'.
    const HalfspaceForm<S> prime = halfspace_form(dilate_about_center(simplex, upper));
    for (std::size_t i = 0; i <= d && report.hat_in_prime; ++i) {
        if (!approx_equal(prime.offsets[i], S(1), t)) report.hat_in_prime = false;
        for (std::size_t k = 0; k < d; ++k) {
            if (!approx_equal(S(prime.normals[i][k] * upper), form.normals[i][k], t)) report.hat_in_prime = false;
        }
        for (std::size_t k = 0; k < d; ++k) {
            if (!approx_equal(prime.center[k], form.center[k], t)) report.hat_in_prime = false;
        }
    }

    report.ok = report.locally_maximal && report.in_hat && report.hat_in_prime;
    return report;
}

template <Scalar S>
MvsResult<S> select_mvs(const PointSet<S>& points, const CoverOptions& options) {
    const std::uint64_t combos = combination_count(points.size(), points.dim() + 1);
    if (!options.force_local_search && combos <= options.mvs.enum_cap) return mvs_exact(points, options.mvs);
    return mvs_local_search(points, options.seed, options.mvs);
}

template <Scalar S>
DilationResult<S> john_negative_cover(const PointSet<S>& points, const CoverOptions& options) {
    const MvsResult<S> mvs = select_mvs(points, options);
    DilationResult<S> result = min_dilation(mvs.simplex, points, DilationSign::Negative, options.lp);
    const S d(static_cast<long>(points.dim()));
    if (!leq(result.lambda, d, effective_tolerance<S>(options.tol))) {
        throw TheoremViolation("negative dilation " + format_scalar(result.lambda) + " exceeds d = " +
                               std::to_string(points.dim()));
    }
    return result;
}

template <Scalar S>
CoverReport<S> john_positive_cover(const PointSet<S>& points, const CoverOptions& options) {
    const std::size_t d = points.dim();
    const double t = effective_tolerance<S>(options.tol);
    MvsResult<S> mvs = select_mvs(points, options);
    SandwichReport<S> sandwich = verify_sandwich(mvs.simplex, points, options.tol);

    std::vector<std::string> warnings;
    bool escalated = false;
    if (!sandwich.ok && mvs.method == MvsMethod::LocalSearch) {
        warnings.push_back("local-search simplex failed the sandwich check; escalating to exact MVS");
        if (combination_count(points.size(), d + 1) <= options.mvs.enum_cap) {
            mvs = mvs_exact(points, options.mvs);
            sandwich = verify_sandwich(mvs.simplex, points, options.tol);
            escalated = true;
        } else {
            warnings.push_back("exact MVS exceeds the enumeration cap; keeping the local-search simplex");
        }
    }

    const S upper(static_cast<long>(d + 2));
    Simplex<S> prime = dilate_about_center(mvs.simplex, upper);
    const HalfspaceForm<S> prime_form = halfspace_form(prime);
    bool construction_contains = true;
    for (const auto& x : points) {
        if (!contains(prime_form, x, t)) {
            construction_contains = false;
            break;
        }
    }

    DilationResult<S> positive = min_dilation(mvs.simplex, points, DilationSign::Positive, options.lp);
    DilationResult<S> negative = min_dilation(mvs.simplex, points, DilationSign::Negative, options.lp);
    const bool bounds_ok = leq(positive.lambda, upper, t) && leq(negative.lambda, S(static_cast<long>(d)), t);
    const bool sandwich_ok = sandwich.ok && construction_contains;

    CoverReport<S> report{std::move(mvs),      std::move(positive), std::move(negative),
                          std::move(prime),    construction_contains, std::move(sandwich),
                          sandwich_ok,         bounds_ok,           escalated,
                          std::move(warnings)};

    if (options.throw_on_violation && report.mvs.method == MvsMethod::Exact && (!sandwich_ok || !bounds_ok)) {
        throw TheoremViolation("covering bounds failed for a globally maximal simplex: lambda+ = " +
                               format_scalar(report.positive.lambda) +
                               ", lambda- = " + format_scalar(report.negative.lambda));
    }
    return report;
}

#define JOHNSIMPLEX_COVERING_INSTANTIATE(S)                                                          \
    template LinearProgram<S> dilation_program(const Simplex<S>&, const PointSet<S>&, DilationSign); \
    template DilationResult<S> min_dilation(const Simplex<S>&, const PointSet<S>&, DilationSign,     \
                                            const LpOptions&);                                       \
    template Simplex<S> covering_simplex(const Simplex<S>&, const DilationResult<S>&);               \
    template bool covers(const Simplex<S>&, const PointSet<S>&, const DilationResult<S>&, double);   \
    template Simplex<S> vertex_hyperplane_simplex(const Simplex<S>&);                                \
    template SandwichReport<S> verify_sandwich(const Simplex<S>&, const PointSet<S>&, double);       \
    template MvsResult<S> select_mvs(const PointSet<S>&, const CoverOptions&);                       \
    template DilationResult<S> john_negative_cover(const PointSet<S>&, const CoverOptions&);         \
    template CoverReport<S> john_positive_cover(const PointSet<S>&, const CoverOptions&);

JOHNSIMPLEX_COVERING_INSTANTIATE(double)
JOHNSIMPLEX_COVERING_INSTANTIATE(Rational)

}  // namespace johnsimplex
