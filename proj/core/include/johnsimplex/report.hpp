#pragma once

// JSON encodings of result types. Rationals are written as "p/q" strings
// and doubles as JSON numbers (shortest round-trip form), so every value
// parses back to exactly what was computed.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "johnsimplex/counterexample.hpp"
#include "johnsimplex/covering.hpp"
#include "johnsimplex/linprog.hpp"
#include "johnsimplex/mvs.hpp"

namespace johnsimplex {

inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::json;

Json to_json(double x);
Json to_json(const Rational& x);

template <Scalar S>
Json to_json(const std::vector<S>& v);
template <Scalar S>
Json to_json(const Point<S>& p);
template <Scalar S>
Json to_json(const PointSet<S>& points);
template <Scalar S>
Json to_json(const Simplex<S>& simplex);
template <Scalar S>
Json to_json(const HalfspaceForm<S>& form);
template <Scalar S>
Json to_json(const MvsResult<S>& result);
template <Scalar S>
Json to_json(const LocalMaximalityReport<S>& report);
template <Scalar S>
Json to_json(const LPSolution<S>& solution);
template <Scalar S>
Json to_json(const DilationResult<S>& result);
template <Scalar S>
Json to_json(const SandwichReport<S>& report);
template <Scalar S>
Json to_json(const CoverReport<S>& report);

Json to_json(const counterexample::AllTrianglesReport& report);
Json to_json(const counterexample::AnalyticBounds& bounds);
Json to_json(const counterexample::Case6Geometry& geometry);
Json to_json(const counterexample::CounterexampleReport& report);
Json to_json(const counterexample::SweepRow& row);

/// {"schema_version", "command", "config", "results", "timings"}
Json make_report(const std::string& command, Json config, Json results, Json timings);

/// Header `epsilon,delta,feasible,lambda_CDE,...,lambda_BCE,lambda_min`,
/// optionally followed by the analytic bound columns.
std::string sweep_csv(const std::vector<counterexample::SweepRow>& rows, bool with_bounds = false);

#define JOHNSIMPLEX_REPORT_EXTERN(S)                                      \
    extern template Json to_json(const std::vector<S>&);                  \
    extern template Json to_json(const Point<S>&);                        \
    extern template Json to_json(const PointSet<S>&);                     \
    extern template Json to_json(const Simplex<S>&);                      \
    extern template Json to_json(const HalfspaceForm<S>&);                \
    extern template Json to_json(const MvsResult<S>&);                    \
    extern template Json to_json(const LocalMaximalityReport<S>&);        \
    extern template Json to_json(const LPSolution<S>&);                   \
    extern template Json to_json(const DilationResult<S>&);               \
    extern template Json to_json(const SandwichReport<S>&);               \
    extern template Json to_json(const CoverReport<S>&);

JOHNSIMPLEX_REPORT_EXTERN(double)
JOHNSIMPLEX_REPORT_EXTERN(Rational)
#undef JOHNSIMPLEX_REPORT_EXTERN

}  // namespace johnsimplex
