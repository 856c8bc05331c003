#pragma once

// Exact verification that the planar five-point family
//
//     A = (-1, 0), B = (1, 0), C = (-e-f, 1), D = (e+f, 1), E = (0, e-1)
//
// (e = epsilon, f = delta) admits no triangle T on its points with X inside
// a translate of 2T. For every one of the ten triangles the minimal positive
// dilation is computed by exact LP with a dual certificate; the analytic
// per-case quantities are reproduced alongside as consistency checks.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "johnsimplex/covering.hpp"
#include "johnsimplex/geometry.hpp"

namespace johnsimplex::counterexample {

inline constexpr std::array<char, 5> kLabels = {'A', 'B', 'C', 'D', 'E'};

class Config {
public:
    /// Throws InvalidArgument unless epsilon and delta lie in (0, 1).
    Config(Rational epsilon, Rational delta);

    /// Demonstration constants epsilon = delta = 1/5.
    static Config standard() { return Config(Rational(1, 5), Rational(1, 5)); }

    const Rational& epsilon() const noexcept { return epsilon_; }
    const Rational& delta() const noexcept { return delta_; }
    /// epsilon + delta < 1/2, the range where the impossibility argument applies.
    bool feasible() const noexcept { return feasible_; }

private:
    Rational epsilon_;
    Rational delta_;
    bool feasible_;
};

/// The points A, B, C, D, E in that order.
PointSet<Rational> build_points(const Config& config);

struct LabeledTriangle {
    std::string name;                   // e.g. "ADE"
    std::array<std::size_t, 3> indices; // into the five points, ascending
    int matched_case;                   // 1..6, shared by mirror images
    std::string mirror;                 // name of the mirror-image triangle
    std::optional<Simplex<Rational>> simplex;  // nullopt when degenerate
};

/// All ten triangles in case order: CDE, ABE, ACD, BCD, ABC, ABD, ACE, BDE,
/// ADE, BCE. Degenerate triples are kept with an empty simplex.
std::vector<LabeledTriangle> enumerate_triangles(const PointSet<Rational>& points);

struct TriangleCaseReport {
    std::string name;
    int matched_case = 0;
    bool degenerate = false;
    std::optional<Rational> lambda_star;   // minimal positive dilation covering X
    bool exceeds_two = false;              // lambda_star > 2
    bool certificate_ok = false;           // dual certificate re-verified exactly
    std::optional<Point<Rational>> translate;
};

struct AllTrianglesReport {
    std::vector<TriangleCaseReport> triangles;  // case order
    std::optional<Rational> min_lambda;
    std::string argmin;
    bool mirror_symmetric = true;  // mirror pairs have identical lambda_star
    bool certificates_ok = true;
};

AllTrianglesReport min_dilation_all(const Config& config);

struct AnalyticBounds {
    Rational case1_intercept;  // 4(e+f)
    Rational case2_intercept;  // 2 - 2e
    Rational case4_intercept;  // 2e
    Rational case5_intercept;  // 2 - 2(e+f)(1-e)/(2-e)
    Rational case6_y;          // -2 / ((2-e)/(e+f) + 1 - e)
    Rational case6_intercept;  // 2 - (e+f)(1+2e-e^2)/((1-e)(2-e)), as published
    // Lengths each bound must be compared against.
    Rational case1_required;   // 2, the segment AB
    Rational case2_required;   // 2 - e, vertical span of C and E
    Rational case4_required;   // 2e + 2f, the segment CD
    Rational case5_required;   // 2
    Rational case6_required;   // 2
    bool feasible = true;
};

AnalyticBounds analytic_case_bounds(const Config& config);

struct Line {
    Rational slope;
    Rational intercept;  // y = slope * x + intercept
};

struct Case6Geometry {
    Point<Rational> a_prime;   // = A
    Point<Rational> d_prime;   // A + 2(D - A)
    Point<Rational> e_prime;   // A + 2(E - A)
    Line line1;                  // through A' + (B - C), parallel to A'D'
    Line line2;                  // through D' and E'
    bool line1_matches_formula = false;  // equals y = (x - e - f)/(1 + e + f) - 1
    bool line2_matches_formula = false;  // equals the published D'E' line
    Point<Rational> intersection;
    bool y_matches_case6_y = false;        // intersection y == case6_y
    Rational chord_length;             // width of A'D'E' along y = intersection y
    Rational closed_form_intercept;    // published closed form
    bool chord_matches_closed_form = false;
    Rational chord_closed_form;        // 2 - 2e(e+f)/(1-e), simplification of the chord
    /// (2 - 2e + case6_y) (1 + (e+f)(1-e)/(2-e)) / (1 - e), the unsimplified
    /// product form of the published derivation.
    Rational product_form;
    bool product_form_matches_chord = false;
};

Case6Geometry case6_geometry(const Config& config);

struct Implication {
    int matched_case;
    Rational bound;
    Rational required;
    bool bound_certifies = false;  // bound < required
    bool lp_confirms = false;      // every triangle of the case has lambda_star > 2
};

struct CounterexampleReport {
    Rational epsilon;
    Rational delta;
    bool feasible = true;
    AllTrianglesReport triangles;
    AnalyticBounds bounds;
    Case6Geometry case6;
    std::vector<Implication> implications;
    bool implications_ok = true;  // bound_certifies implies lp_confirms
    bool verified = false;        // min lambda_star > 2 with all certificates valid
};

CounterexampleReport verify_counterexample(const Config& config);

struct SweepRow {
    Rational epsilon;
    Rational delta;
    bool feasible = true;
    std::vector<std::optional<Rational>> lambdas;  // case order
    std::optional<Rational> lambda_min;
    AnalyticBounds bounds;
};

/// One row per (epsilon, delta) pair of the grid, epsilon-major. Rows are
/// computed concurrently and returned in grid order.
std::vector<SweepRow> sweep(const std::vector<Rational>& epsilons, const std::vector<Rational>& deltas,
                            unsigned threads = 0);

/// Triangle names in case order, matching SweepRow::lambdas.
std::vector<std::string> triangle_names();

}  // namespace johnsimplex::counterexample
