#include "johnsimplex/report.hpp"

namespace johnsimplex {
namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? to_json(*v) : Json(nullptr);
}

Json index_list(const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (std::size_t i : v) out.push_back(i);
    return out;
}

}  // namespace

Json to_json(double x) { return Json(x); }
Json to_json(const Rational& x) { return Json(format_scalar(x)); }

template <Scalar S>
Json to_json(const std::vector<S>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

template <Scalar S>
Json to_json(const Point<S>& p) {
    return to_json(p.coords());
}

template <Scalar S>
Json to_json(const PointSet<S>& points) {
    Json rows = Json::array();
    for (const auto& p : points) rows.push_back(to_json(p));
    return Json{{"dim", points.dim()}, {"points", std::move(rows)}};
}

template <Scalar S>
Json to_json(const Simplex<S>& simplex) {
    Json vs = Json::array();
    for (const auto& v : simplex.vertices()) vs.push_back(to_json(v));
    Json out{{"vertices", std::move(vs)}};
    out["indices"] = simplex.vertex_indices() ? index_list(*simplex.vertex_indices()) : Json(nullptr);
    return out;
}

template <Scalar S>
Json to_json(const HalfspaceForm<S>& form) {
    Json normals = Json::array();
    for (const auto& a : form.normals) normals.push_back(to_json(a));
    return Json{{"normals", std::move(normals)}, {"offsets", to_json(form.offsets)}, {"center", to_json(form.center)}};
}

template <Scalar S>
Json to_json(const MvsResult<S>& result) {
    Json out{{"method", to_string(result.method)},
             {"simplex", to_json(result.simplex)},
             {"volume", to_json(result.volume)}};
    if (result.method == MvsMethod::LocalSearch) {
        out["swap_count"] = result.swap_count;
        out["volume_trace"] = to_json(result.volume_trace);
    }
    return out;
}

template <Scalar S>
Json to_json(const LocalMaximalityReport<S>& report) {
    Json slabs = Json::array();
    for (const auto& s : report.slabs) slabs.push_back(Json{{"min", to_json(s.min)}, {"max", to_json(s.max)}});
    Json worst = nullptr;
    if (report.worst) {
        worst = Json{{"facet", report.worst->facet},
                     {"point", report.worst->point},
                     {"excess", to_json(report.worst->excess)}};
    }
    return Json{{"ok", report.ok}, {"worst", std::move(worst)}, {"slabs", std::move(slabs)}};
}

template <Scalar S>
Json to_json(const LPSolution<S>& solution) {
    Json out{{"status", to_string(solution.status)}, {"pivots", solution.pivots}};
    if (solution.status == LpStatus::Optimal) {
        out["z"] = to_json(solution.z);
        out["value"] = to_json(solution.value);
        out["basis"] = index_list(solution.basis);
        out["dual_certificate"] = optional_json(solution.dual_certificate);
    }
    if (solution.ray) out["ray"] = to_json(*solution.ray);
    if (solution.farkas) {
        out["farkas"] = to_json(*solution.farkas);
        out["inconsistent_subset"] = index_list(solution.inconsistent_subset);
    }
    return out;
}

template <Scalar S>
Json to_json(const DilationResult<S>& result) {
    return Json{{"lambda", to_json(result.lambda)},
                {"sign", to_string(result.sign)},
                {"translate", to_json(result.translate)},
                {"status", to_string(result.status)},
                {"certificate", optional_json(result.certificate)}};
}

template <Scalar S>
Json to_json(const SandwichReport<S>& report) {
    Json slacks = Json::array();
    for (const auto& s : report.slacks) slacks.push_back(Json{{"lower", to_json(s.lower)}, {"upper", to_json(s.upper)}});
    Json swap = nullptr;
    if (report.swap_violation) {
        swap = Json{{"vertex", report.swap_violation->vertex},
                    {"point", report.swap_violation->point},
                    {"volume_ratio", to_json(report.swap_violation->volume_ratio)}};
    }
    return Json{{"locally_maximal", report.locally_maximal},
                {"swap_violation", std::move(swap)},
                {"in_hat", report.in_hat},
                {"hat_in_prime", report.hat_in_prime},
                {"slacks", std::move(slacks)},
                {"ok", report.ok}};
}

template <Scalar S>
Json to_json(const CoverReport<S>& report) {
    return Json{{"mvs", to_json(report.mvs)},
                {"positive", to_json(report.positive)},
                {"negative", to_json(report.negative)},
                {"d_plus_2_construction", to_json(report.d_plus_2_construction)},
                {"construction_contains", report.construction_contains},
                {"sandwich", to_json(report.sandwich)},
                {"sandwich_ok", report.sandwich_ok},
                {"bounds_ok", report.bounds_ok},
                {"escalated", report.escalated},
                {"warnings", report.warnings}};
}

Json to_json(const counterexample::AllTrianglesReport& report) {
    Json tris = Json::array();
    for (const auto& t : report.triangles) {
        tris.push_back(Json{{"triangle", t.name},
                            {"matched_case", t.matched_case},
                            {"degenerate", t.degenerate},
                            {"lambda_star", optional_json(t.lambda_star)},
                            {"exceeds_two", t.exceeds_two},
                            {"certificate_ok", t.certificate_ok},
                            {"translate", optional_json(t.translate)}});
    }
    return Json{{"triangles", std::move(tris)},
                {"min_lambda", optional_json(report.min_lambda)},
                {"argmin", report.argmin},
                {"mirror_symmetric", report.mirror_symmetric},
                {"certificates_ok", report.certificates_ok}};
}

Json to_json(const counterexample::AnalyticBounds& b) {
    return Json{{"case1_intercept", to_json(b.case1_intercept)}, {"case2_intercept", to_json(b.case2_intercept)},
                {"case4_intercept", to_json(b.case4_intercept)}, {"case5_intercept", to_json(b.case5_intercept)},
                {"case6_y", to_json(b.case6_y)},                 {"case6_intercept", to_json(b.case6_intercept)},
                {"case1_required", to_json(b.case1_required)},   {"case2_required", to_json(b.case2_required)},
                {"case4_required", to_json(b.case4_required)},   {"case5_required", to_json(b.case5_required)},
                {"case6_required", to_json(b.case6_required)},   {"feasible", b.feasible}};
}

Json to_json(const counterexample::Case6Geometry& g) {
    auto line = [](const counterexample::Line& l) {
        return Json{{"slope", to_json(l.slope)}, {"intercept", to_json(l.intercept)}};
    };
    return Json{{"a_prime", to_json(g.a_prime)},
                {"d_prime", to_json(g.d_prime)},
                {"e_prime", to_json(g.e_prime)},
                {"line1", line(g.line1)},
                {"line2", line(g.line2)},
                {"line1_matches_formula", g.line1_matches_formula},
                {"line2_matches_formula", g.line2_matches_formula},
                {"intersection", to_json(g.intersection)},
                {"y_matches_case6_y", g.y_matches_case6_y},
                {"chord_length", to_json(g.chord_length)},
                {"closed_form_intercept", to_json(g.closed_form_intercept)},
                {"chord_matches_closed_form", g.chord_matches_closed_form},
                {"chord_closed_form", to_json(g.chord_closed_form)},
                {"product_form", to_json(g.product_form)},
                {"product_form_matches_chord", g.product_form_matches_chord}};
}

Json to_json(const counterexample::CounterexampleReport& r) {
    Json imps = Json::array();
    for (const auto& i : r.implications) {
        imps.push_back(Json{{"matched_case", i.matched_case},
                            {"bound", to_json(i.bound)},
                            {"required", to_json(i.required)},
                            {"bound_certifies", i.bound_certifies},
                            {"lp_confirms", i.lp_confirms}});
    }
    return Json{{"epsilon", to_json(r.epsilon)},
                {"delta", to_json(r.delta)},
                {"feasible", r.feasible},
                {"triangles", to_json(r.triangles)},
                {"bounds", to_json(r.bounds)},
                {"case6", to_json(r.case6)},
                {"implications", std::move(imps)},
                {"implications_ok", r.implications_ok},
                {"verified", r.verified}};
}

Json to_json(const counterexample::SweepRow& row) {
    Json lambdas = Json::object();
    const auto names = counterexample::triangle_names();
    for (std::size_t i = 0; i < row.lambdas.size(); ++i) lambdas[names[i]] = optional_json(row.lambdas[i]);
    return Json{{"epsilon", to_json(row.epsilon)},
                {"delta", to_json(row.delta)},
                {"feasible", row.feasible},
                {"lambdas", std::move(lambdas)},
                {"lambda_min", optional_json(row.lambda_min)},
                {"bounds", to_json(row.bounds)}};
}

Json make_report(const std::string& command, Json config, Json results, Json timings) {
    return Json{{"schema_version", kReportSchemaVersion},
                {"command", command},
                {"config", std::move(config)},
                {"results", std::move(results)},
                {"timings", std::move(timings)}};
}

std::string sweep_csv(const std::vector<counterexample::SweepRow>& rows, bool with_bounds) {
    std::string out = "epsilon,delta,feasible";
    for (const auto& name : counterexample::triangle_names()) out += ",lambda_" + name;
    out += ",lambda_min";
    if (with_bounds) out += ",case1_intercept,case2_intercept,case4_intercept,case5_intercept,case6_y,case6_intercept";
    out += '\n';
    auto cell = [](const std::optional<Rational>& v) { return v ? format_scalar(*v) : std::string(); };
    for (const auto& r : rows) {
        out += format_scalar(r.epsilon) + "," + format_scalar(r.delta) + "," + (r.feasible ? "true" : "false");
        for (const auto& l : r.lambdas) out += "," + cell(l);
        out += "," + cell(r.lambda_min);
        if (with_bounds) {
            const auto& b = r.bounds;
            for (const Rational* v : {&b.case1_intercept, &b.case2_intercept, &b.case4_intercept, &b.case5_intercept,
                                      &b.case6_y, &b.case6_intercept}) {
                out += "," + format_scalar(*v);
            }
        }
        out += '\n';
    }
    return out;
}

#define JOHNSIMPLEX_REPORT_INSTANTIATE(S)                          \
    template Json to_json(const std::vector<S>&);                  \
    template Json to_json(const Point<S>&);                        \
    template Json to_json(const PointSet<S>&);                     \
    template Json to_json(const Simplex<S>&);                      \
    template Json to_json(const HalfspaceForm<S>&);                \
    template Json to_json(const MvsResult<S>&);                    \
    template Json to_json(const LocalMaximalityReport<S>&);        \
    template Json to_json(const LPSolution<S>&);                   \
    template Json to_json(const DilationResult<S>&);               \
    template Json to_json(const SandwichReport<S>&);               \
    template Json to_json(const CoverReport<S>&);

JOHNSIMPLEX_REPORT_INSTANTIATE(double)
JOHNSIMPLEX_REPORT_INSTANTIATE(Rational)

}  // namespace johnsimplex
