#include "johnsimplex/counterexample.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "johnsimplex/linprog.hpp"

namespace johnsimplex::counterexample {
namespace {

struct TriangleEntry {
    const char* name;
    const char* mirror;
    int matched_case;
};

// Case order; each entry lists its mirror image under x -> -x
// (A <-> B, C <-> D, E fixed).
constexpr std::array<TriangleEntry, 10> kTriangles = {{
    {"CDE", "CDE", 1},
    {"ABE", "ABE", 2},
    {"ACD", "BCD", 3},
    {"BCD", "ACD", 3},
    {"ABC", "ABD", 4},
    {"ABD", "ABC", 4},
    {"ACE", "BDE", 5},
    {"BDE", "ACE", 5},
    {"ADE", "BCE", 6},
    {"BCE", "ADE", 6},
}};

std::size_t label_index(char label) { return static_cast<std::size_t>(label - 'A'); }

Point<Rational> point(Rational x, Rational y) { return Point<Rational>{std::move(x), std::move(y)}; }

Line line_through(const Point<Rational>& p, const Point<Rational>& q) {
    const Rational slope = (q[1] - p[1]) / (q[0] - p[0]);
    return Line{slope, Rational(p[1] - slope * p[0])};
}

Line line_with_direction(const Point<Rational>& p, const Point<Rational>& direction) {
    const Rational slope = direction[1] / direction[0];
    return Line{slope, Rational(p[1] - slope * p[0])};
}

// Width of the triangle along the horizontal line y = level.
Rational horizontal_chord(const std::array<Point<Rational>, 3>& tri, const Rational& level) {
    std::vector<Rational> xs;
    for (std::size_t e = 0; e < 3; ++e) {
        const Point<Rational>& p = tri[e];
        const Point<Rational>& q = tri[(e + 1) % 3];
        const Rational lo = std::min(p[1], q[1]);
        const Rational hi = std::max(p[1], q[1]);
        if (level < lo || level > hi) continue;
        if (p[1] == q[1]) {
            xs.push_back(p[0]);
            xs.push_back(q[0]);
        } else {
            xs.push_back(p[0] + (level - p[1]) * (q[0] - p[0]) / (q[1] - p[1]));
        }
    }
    if (xs.empty()) return Rational(0);
    const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    return *mx - *mn;
}

TriangleCaseReport analyze(const LabeledTriangle& tri, const PointSet<Rational>& points) {
    TriangleCaseReport report;
    report.name = tri.name;
    report.matched_case = tri.matched_case;
    if (!tri.simplex) {
        report.degenerate = true;
        return report;
    }
    const LinearProgram<Rational> lp = dilation_program(*tri.simplex, points, DilationSign::Positive);
    const DilationResult<Rational> result = min_dilation(*tri.simplex, points, DilationSign::Positive);
    report.lambda_star = result.lambda;
    report.exceeds_two = result.lambda > 2;
    report.certificate_ok = check_certificate(lp, result.solution, 0.0) &&
                            covers(*tri.simplex, points, result, 0.0);
    report.translate = result.translate;
    return report;
}

}  // namespace

Config::Config(Rational epsilon, Rational delta) : epsilon_(std::move(epsilon)), delta_(std::move(delta)) {
    if (epsilon_ <= 0 || epsilon_ >= 1 || delta_ <= 0 || delta_ >= 1) {
        throw InvalidArgument("epsilon and delta must lie strictly inside (0, 1)");
    }
    feasible_ = epsilon_ + delta_ < Rational(1, 2);
}

PointSet<Rational> build_points(const Config& config) {
    const Rational s = config.epsilon() + config.delta();
    return PointSet<Rational>(2, {
                                     point(-1, 0),
                                     point(1, 0),
                                     point(Rational(-s), 1),
                                     point(s, 1),
                                     point(0, Rational(config.epsilon() - 1)),
                                 });
}

std::vector<std::string> triangle_names() {
    std::vector<std::string> names;
    for (const auto& t : kTriangles) names.emplace_back(t.name);
    return names;
}

std::vector<LabeledTriangle> enumerate_triangles(const PointSet<Rational>& points) {
    if (points.size() != 5 || points.dim() != 2) throw InvalidArgument("expected five points in the plane");
    std::vector<LabeledTriangle> out;
    out.reserve(kTriangles.size());
    for (const auto& entry : kTriangles) {
        LabeledTriangle tri;
        tri.name = entry.name;
        tri.mirror = entry.mirror;
        tri.matched_case = entry.matched_case;
        for (std::size_t k = 0; k < 3; ++k) tri.indices[k] = label_index(entry.name[k]);
        try {
            tri.simplex = Simplex<Rational>::from_indices(points, tri.indices);
        } catch (const DegenerateSimplex&) {
            tri.simplex.reset();
        }
        out.push_back(std::move(tri));
    }
    return out;
}

AllTrianglesReport min_dilation_all(const Config& config) {
    const PointSet<Rational> points = build_points(config);
    const std::vector<LabeledTriangle> triangles = enumerate_triangles(points);
    AllTrianglesReport report;
    for (const auto& tri : triangles) {
        report.triangles.push_back(analyze(tri, points));
        const auto& r = report.triangles.back();
        if (r.lambda_star && (!report.min_lambda || *r.lambda_star < *report.min_lambda)) {
            report.min_lambda = r.lambda_star;
            report.argmin = r.name;
        }
        if (!r.degenerate && !r.certificate_ok) report.certificates_ok = false;
    }
    for (std::size_t i = 0; i < triangles.size(); ++i) {
        for (std::size_t j = 0; j < triangles.size(); ++j) {
            if (triangles[j].name != triangles[i].mirror) continue;
            if (report.triangles[i].lambda_star != report.triangles[j].lambda_star) report.mirror_symmetric = false;
        }
    }
    return report;
}

AnalyticBounds analytic_case_bounds(const Config& config) {
    const Rational& e = config.epsilon();
    const Rational& f = config.delta();
    const Rational s = e + f;
    AnalyticBounds b;
    b.case1_intercept = 4 * s;
    b.case2_intercept = 2 - 2 * e;
    b.case4_intercept = 2 * e;
    b.case5_intercept = 2 - 2 * s * (1 - e) / (2 - e);
    b.case6_y = -2 / ((2 - e) / s + 1 - e);
    b.case6_intercept = 2 - s * (1 + 2 * e - e * e) / ((1 - e) * (2 - e));
    b.case1_required = 2;
    b.case2_required = 2 - e;
    b.case4_required = 2 * s;
    b.case5_required = 2;
    b.case6_required = 2;
    b.feasible = config.feasible();
    return b;
}

Case6Geometry case6_geometry(const Config& config) {
    const Rational& e = config.epsilon();
    const Rational s = config.epsilon() + config.delta();
    const PointSet<Rational> pts = build_points(config);
    const Point<Rational>& A = pts[0];
    const Point<Rational>& B = pts[1];
    const Point<Rational>& C = pts[2];
    const Point<Rational>& D = pts[3];
    const Point<Rational>& E = pts[4];

    Case6Geometry g;
    g.a_prime = A;
    g.d_prime = A + Rational(2) * (D - A);
    g.e_prime = A + Rational(2) * (E - A);

    g.line1 = line_with_direction(A + (B - C), g.d_prime - g.a_prime);
    g.line2 = line_through(g.d_prime, g.e_prime);

    // y = (x - s)/(1 + s) - 1
    const Line line1_formula{Rational(1 / (1 + s)), Rational(-s / (1 + s) - 1)};
    // y = ((2 - e)/s) (x - 1 - 2 s (1 - e)/(2 - e))
    const Rational line2_slope = (2 - e) / s;
    const Line line2_formula{line2_slope, Rational(-line2_slope * (1 + 2 * s * (1 - e) / (2 - e)))};
    g.line1_matches_formula = g.line1.slope == line1_formula.slope && g.line1.intercept == line1_formula.intercept;
    g.line2_matches_formula = g.line2.slope == line2_formula.slope && g.line2.intercept == line2_formula.intercept;

    const Rational x = (g.line2.intercept - g.line1.intercept) / (g.line1.slope - g.line2.slope);
    g.intersection = point(x, Rational(g.line1.slope * x + g.line1.intercept));

    const AnalyticBounds bounds = analytic_case_bounds(config);
    g.y_matches_case6_y = g.intersection[1] == bounds.case6_y;

    g.chord_length = horizontal_chord({g.a_prime, g.d_prime, g.e_prime}, g.intersection[1]);
    g.closed_form_intercept = bounds.case6_intercept;
    g.chord_matches_closed_form = g.chord_length == g.closed_form_intercept;
    g.chord_closed_form = 2 - 2 * e * s / (1 - e);
    g.product_form = (2 - 2 * e + bounds.case6_y) * (1 + s * (1 - e) / (2 - e)) / (1 - e);
    g.product_form_matches_chord = g.product_form == g.chord_length;
    return g;
}

CounterexampleReport verify_counterexample(const Config& config) {
    CounterexampleReport report;
    report.epsilon = config.epsilon();
    report.delta = config.delta();
    report.feasible = config.feasible();
    report.triangles = min_dilation_all(config);
    report.bounds = analytic_case_bounds(config);
    report.case6 = case6_geometry(config);

    const AnalyticBounds& b = report.bounds;
    const std::array<std::pair<Rational, Rational>, 6> per_case = {{
        {b.case1_intercept, b.case1_required},
        {b.case2_intercept, b.case2_required},
        {b.case1_intercept, b.case1_required},  // case 3 reuses the case 1 width bound
        {b.case4_intercept, b.case4_required},
        {b.case5_intercept, b.case5_required},
        {b.case6_intercept, b.case6_required},
    }};
    for (int c = 1; c <= 6; ++c) {
        Implication imp;
        imp.matched_case = c;
        imp.bound = per_case[static_cast<std::size_t>(c - 1)].first;
        imp.required = per_case[static_cast<std::size_t>(c - 1)].second;
        imp.bound_certifies = imp.bound < imp.required;
        imp.lp_confirms = true;
        for (const auto& t : report.triangles.triangles) {
            if (t.matched_case == c && !t.exceeds_two) imp.lp_confirms = false;
        }
        if (imp.bound_certifies && !imp.lp_confirms) report.implications_ok = false;
        report.implications.push_back(std::move(imp));
    }

    bool all_exceed = report.triangles.min_lambda.has_value();
    for (const auto& t : report.triangles.triangles) {
        if (t.degenerate || !t.exceeds_two) all_exceed = false;
    }
    report.verified = all_exceed && report.triangles.certificates_ok;
    return report;
}

std::vector<SweepRow> sweep(const std::vector<Rational>& epsilons, const std::vector<Rational>& deltas,
                            unsigned threads) {
    std::vector<std::pair<Rational, Rational>> grid;
    for (const auto& e : epsilons) {
        for (const auto& f : deltas) grid.emplace_back(e, f);
    }
    for (const auto& [e, f] : grid) Config(e, f);  // validate before spawning workers

    std::vector<std::optional<SweepRow>> rows(grid.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            const Config cfg(grid[i].first, grid[i].second);
            const AllTrianglesReport all = min_dilation_all(cfg);
            SweepRow row;
            row.epsilon = cfg.epsilon();
            row.delta = cfg.delta();
            row.feasible = cfg.feasible();
            for (const auto& t : all.triangles) row.lambdas.push_back(t.lambda_star);
            row.lambda_min = all.min_lambda;
            row.bounds = analytic_case_bounds(cfg);
            rows[i] = std::move(row);
        }
    };
    unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(grid.size(), 1)));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::vector<SweepRow> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(std::move(*r));
    return out;
}

}  // namespace johnsimplex::counterexample
