#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "CLI11.hpp"
#include "johnsimplex/counterexample.hpp"
#include "johnsimplex/svg.hpp"

namespace johnsimplex::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    Json results;
    int exit_code = 0;
    std::string diagnostic;
};

template <Scalar S>
PointSet<S> convert(const PointSet<Rational>& points) {
    if constexpr (is_exact_v<S>) {
        return points;
    } else {
        PointSet<double> out(points.dim());
        for (const auto& p : points) {
            std::vector<double> c;
            for (std::size_t k = 0; k < p.dim(); ++k) c.push_back(p[k].get_d());
            out.add(Point<double>(std::move(c)));
        }
        return out;
    }
}

template <Scalar S>
PointSet<S> load_points(const RunConfig& cfg) {
    if (cfg.input) return parse_points<S>(*cfg.input, cfg.format);
    if (cfg.sample) return sample_body<S>(*cfg.sample, cfg.n, cfg.dim, cfg.seed);
    throw InvalidArgument("no point set given; pass --input FILE or --sample BODY");
}

CoverOptions cover_options(const RunConfig& cfg) {
    CoverOptions opt;
    opt.mvs.enum_cap = cfg.enum_cap;
    opt.mvs.threads = cfg.threads;
    opt.seed = cfg.seed;
    opt.tol = cfg.tol;
    opt.force_local_search = cfg.mvs == MvsChoice::LocalSearch;
    opt.throw_on_violation = false;
    return opt;
}

template <Scalar S>
MvsResult<S> choose_mvs(const PointSet<S>& points, const RunConfig& cfg) {
    const CoverOptions opt = cover_options(cfg);
    if (cfg.mvs == MvsChoice::Exact) return mvs_exact(points, opt.mvs);
    return select_mvs(points, opt);
}

template <Scalar S>
Outcome cmd_mvs(const RunConfig& cfg) {
    const PointSet<S> points = load_points<S>(cfg);
    const MvsResult<S> mvs = choose_mvs(points, cfg);
    const LocalMaximalityReport<S> local = verify_local_maximality(mvs.simplex, points, effective_tolerance<S>(cfg.tol));
    Outcome out;
    out.results = Json{{"n", points.size()},
                       {"dim", points.dim()},
                       {"mvs", to_json(mvs)},
                       {"halfspace_form", to_json(halfspace_form(mvs.simplex))},
                       {"local_maximality", to_json(local)}};
    if (!local.ok) {
        out.exit_code = 2;
        out.diagnostic = "returned simplex is not swap-locally maximal";
    }
    return out;
}

template <Scalar S>
Outcome cmd_dilation(const RunConfig& cfg) {
    const PointSet<S> points = load_points<S>(cfg);
    std::optional<MvsResult<S>> mvs;
    std::optional<Simplex<S>> simplex;
    if (cfg.simplex) {
        for (std::size_t i : *cfg.simplex) {
            if (i >= points.size()) throw InvalidArgument("simplex index " + std::to_string(i) + " out of range");
        }
        simplex = Simplex<S>::from_indices(points, *cfg.simplex);
    } else {
        mvs = choose_mvs(points, cfg);
        simplex = mvs->simplex;
    }
    LpOptions lp;
    const DilationResult<S> result = min_dilation(*simplex, points, cfg.sign, lp);
    const bool covered = covers(*simplex, points, result, cfg.tol);
    const bool certified = check_certificate(dilation_program(*simplex, points, cfg.sign), result.solution,
                                             is_exact_v<S> ? 0.0 : std::max(1e-7, cfg.tol));

    Outcome out;
    out.results = Json{{"simplex", to_json(*simplex)},
                       {"mvs", mvs ? to_json(*mvs) : Json(nullptr)},
                       {"dilation", to_json(result)},
                       {"covers", covered},
                       {"certificate_ok", certified}};
    if (!covered || !certified) {
        out.exit_code = 2;
        out.diagnostic = "LP optimum failed re-verification";
    } else if (mvs) {
        const std::size_t d = points.dim();
        const S bound(static_cast<long>(cfg.sign == DilationSign::Negative ? d : d + 2));
        const bool within = leq(result.lambda, bound, effective_tolerance<S>(cfg.tol));
        out.results["bound"] = to_json(bound);
        out.results["within_bound"] = within;
        if (!within) {
            out.exit_code = 2;
            out.diagnostic = "dilation of the maximum-volume simplex exceeds its proven bound";
        }
    }
    return out;
}

template <Scalar S>
Outcome cmd_john(const RunConfig& cfg) {
    const PointSet<S> points = load_points<S>(cfg);
    CoverOptions opt = cover_options(cfg);
    CoverReport<S> report = [&] {
        if (cfg.mvs != MvsChoice::Exact) return john_positive_cover(points, opt);
        // pin the exact path by making sure the cap admits the enumeration
        opt.mvs.enum_cap = std::max(opt.mvs.enum_cap, combination_count(points.size(), points.dim() + 1));
        return john_positive_cover(points, opt);
    }();
    Outcome out;
    out.results = to_json(report);
    if (!report.bounds_ok || !report.sandwich_ok) {
        out.exit_code = 2;
        out.diagnostic = "covering bounds violated: lambda+ = " + format_scalar(report.positive.lambda) +
                         ", lambda- = " + format_scalar(report.negative.lambda);
    }
    return out;
}

Outcome cmd_counterexample(const RunConfig& cfg) {
    const counterexample::Config config(parse_rational(cfg.epsilon), parse_rational(cfg.delta));
    const counterexample::CounterexampleReport report = counterexample::verify_counterexample(config);
    Outcome out;
    out.results = to_json(report);
    if (config.feasible() && !report.verified) {
        out.exit_code = 2;
        out.diagnostic = "some triangle admits a translate of 2T covering X";
    }
    return out;
}

Outcome cmd_sweep(const RunConfig& cfg) {
    std::vector<Rational> eps, dels;
    for (const auto& e : cfg.epsilons) eps.push_back(parse_rational(e));
    for (const auto& d : cfg.deltas) dels.push_back(parse_rational(d));
    const auto rows = counterexample::sweep(eps, dels, cfg.threads);
    Outcome out;
    Json jrows = Json::array();
    std::size_t failures = 0;
    for (const auto& r : rows) {
        jrows.push_back(to_json(r));
        if (r.feasible && !(r.lambda_min && *r.lambda_min > 2)) ++failures;
    }
    out.results = Json{{"rows", std::move(jrows)}, {"feasible_failures", failures}};
    if (cfg.csv) {
        write_text_file(*cfg.csv, sweep_csv(rows, cfg.with_bounds));
        out.results["csv"] = cfg.csv->string();
    }
    if (failures) {
        out.exit_code = 2;
        out.diagnostic = std::to_string(failures) + " feasible grid point(s) with min lambda* <= 2";
    }
    return out;
}

template <Scalar S>
Json trial(const RunConfig& cfg, std::uint64_t seed, bool& ok) {
    const PointSet<S> points = cfg.sample ? sample_body<S>(*cfg.sample, cfg.n, cfg.dim, seed)
                                          : convert<S>(random_rational_points(cfg.n, cfg.dim, seed));
    RunConfig local = cfg;
    local.seed = seed;
    const CoverOptions opt = cover_options(local);
    const double t = effective_tolerance<S>(cfg.tol);
    const std::size_t d = points.dim();

    const MvsResult<S> mvs = cfg.mvs == MvsChoice::Exact ? mvs_exact(points, opt.mvs) : select_mvs(points, opt);
    const DilationResult<S> neg = min_dilation(mvs.simplex, points, DilationSign::Negative, opt.lp);
    const DilationResult<S> pos = min_dilation(mvs.simplex, points, DilationSign::Positive, opt.lp);
    const HalfspaceForm<S> prime = halfspace_form(dilate_about_center(mvs.simplex, S(static_cast<long>(d + 2))));
    bool contained = true;
    for (const auto& x : points) contained = contained && contains(prime, x, t);
    const LocalMaximalityReport<S> slabs = verify_local_maximality(mvs.simplex, points, t);

    const bool neg_ok = leq(neg.lambda, S(static_cast<long>(d)), t);
    const bool pos_ok = leq(pos.lambda, S(static_cast<long>(d + 2)), t);
    ok = neg_ok && pos_ok && contained && slabs.ok;
    return Json{{"seed", seed},
                {"method", to_string(mvs.method)},
                {"volume", to_json(mvs.volume)},
                {"lambda_negative", to_json(neg.lambda)},
                {"lambda_positive", to_json(pos.lambda)},
                {"construction_contains", contained},
                {"slabs_ok", slabs.ok},
                {"ok", ok}};
}

template <Scalar S>
Outcome cmd_random_trials(const RunConfig& cfg) {
    if (cfg.n < cfg.dim + 1) throw InvalidArgument("--n must be at least dim + 1");
    std::vector<Json> rows(cfg.trials);
    std::vector<char> passed(cfg.trials, 0);
    std::vector<std::string> errors(cfg.trials);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cfg.trials; i = next++) {
            try {
                bool ok = false;
                rows[i] = trial<S>(cfg, cfg.seed + i, ok);
                passed[i] = ok;
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    // each trial runs single-threaded; parallelism is across trials
    unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(cfg.trials, 1)));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    Outcome out;
    std::size_t ok_count = 0;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        if (!errors[i].empty()) {
            // an error in a random instance means degenerate input, not a theorem failure
            rows[i] = Json{{"seed", cfg.seed + i}, {"error", errors[i]}};
            if (out.exit_code == 0) {
                out.exit_code = 1;
                out.diagnostic = "trial " + std::to_string(i) + ": " + errors[i];
            }
        } else if (passed[i]) {
            ++ok_count;
        }
    }
    const std::size_t violations = cfg.trials - ok_count - static_cast<std::size_t>(std::count_if(
                                                               errors.begin(), errors.end(),
                                                               [](const std::string& e) { return !e.empty(); }));
    if (violations) {
        out.exit_code = 2;
        out.diagnostic = std::to_string(violations) + " trial(s) violated a covering bound";
    }
    out.results = Json{{"trials", cfg.trials}, {"passed", ok_count}, {"violations", violations}, {"instances", rows}};
    return out;
}

template <Scalar S>
bool all_inside(const HalfspaceForm<S>& form, const std::vector<Point<S>>& pts, double tol) {
    for (const auto& p : pts) {
        if (!contains(form, p, tol)) return false;
    }
    return true;
}

template <Scalar S>
Outcome cmd_render_cover(const RunConfig& cfg) {
    const PointSet<S> points = load_points<S>(cfg);
    if (points.dim() != 2) throw DimensionMismatch("render needs a planar point set");
    const MvsResult<S> mvs = choose_mvs(points, cfg);
    const Simplex<S> prime = dilate_about_center(mvs.simplex, S(4));
    const Simplex<S> tilde = vertex_hyperplane_simplex(mvs.simplex);
    const double t = effective_tolerance<S>(cfg.tol);
    const HalfspaceForm<S> prime_form = halfspace_form(prime);
    const bool t_in_prime = all_inside(prime_form, mvs.simplex.vertices(), t);
    const bool x_in_prime = all_inside(prime_form, std::vector<Point<S>>(points.begin(), points.end()), t);

    std::vector<StyledPolygon> polys = {
        styled_polygon(mvs.simplex, PolygonStyle{"#d62728", "#d6272822", 1.5, "T"}),
        styled_polygon(prime, PolygonStyle{"#1f77b4", "none", 1.5, "T' = 4T"}),
        styled_polygon(tilde, PolygonStyle{"#2ca02c", "none", 1.0, "-2T"}),
    };
    render_scene_2d(points, polys, *cfg.svg);
    return Outcome{Json{{"svg", cfg.svg->string()},
                        {"points", points.size()},
                        {"polygons", polys.size()},
                        {"mvs", to_json(mvs)},
                        {"simplex_in_prime", t_in_prime},
                        {"points_in_prime", x_in_prime}},
                   (t_in_prime && x_in_prime) ? 0 : 2,
                   (t_in_prime && x_in_prime) ? "" : "containment check failed for the (d+2)-dilation"};
}

Outcome cmd_render_counterexample(const RunConfig& cfg) {
    const counterexample::Config config(parse_rational(cfg.epsilon), parse_rational(cfg.delta));
    const PointSet<Rational> points = counterexample::build_points(config);
    const auto triangles = counterexample::enumerate_triangles(points);
    const auto it = std::find_if(triangles.begin(), triangles.end(),
                                 [&](const auto& tri) { return tri.name == cfg.triangle; });
    if (it == triangles.end()) throw InvalidArgument("unknown triangle '" + cfg.triangle + "'");
    if (!it->simplex) throw DegenerateSimplex("triangle " + cfg.triangle + " is degenerate");
    const Simplex<Rational> doubled = dilate_about_center(*it->simplex, Rational(2));
    std::vector<StyledPolygon> polys = {
        styled_polygon(*it->simplex, PolygonStyle{"#d62728", "#d6272822", 1.5, cfg.triangle}),
        styled_polygon(doubled, PolygonStyle{"#1f77b4", "none", 1.5, "2 " + cfg.triangle}),
    };
    render_scene_2d(points, polys, *cfg.svg);
    return Outcome{Json{{"svg", cfg.svg->string()}, {"points", points.size()}, {"polygons", polys.size()},
                        {"triangle", cfg.triangle}},
                   0, ""};
}

template <Scalar S>
Outcome dispatch(const RunConfig& cfg) {
    switch (cfg.command) {
    case Command::Mvs: return cmd_mvs<S>(cfg);
    case Command::Dilation: return cmd_dilation<S>(cfg);
    case Command::John: return cmd_john<S>(cfg);
    case Command::Counterexample: return cmd_counterexample(cfg);
    case Command::Sweep: return cmd_sweep(cfg);
    case Command::RandomTrials: return cmd_random_trials<S>(cfg);
    case Command::Render:
        if (!cfg.svg) throw InvalidArgument("render needs --svg PATH");
        if (cfg.scene == "counterexample") return cmd_render_counterexample(cfg);
        if (cfg.scene == "cover") return cmd_render_cover<S>(cfg);
        throw InvalidArgument("unknown scene '" + cfg.scene + "'");
    }
    throw InvalidArgument("unknown command");
}

bool exact_only(Command c) { return c == Command::Counterexample || c == Command::Sweep; }

Json config_json(const RunConfig& cfg) {
    const bool exact = cfg.mode == ScalarMode::Exact || exact_only(cfg.command);
    Json j{{"command", to_string(cfg.command)}, {"mode", exact ? "exact" : "float"}, {"seed", cfg.seed}};
    if (!exact) j["tol"] = cfg.tol;
    switch (cfg.command) {
    case Command::Counterexample:
        j["epsilon"] = cfg.epsilon;
        j["delta"] = cfg.delta;
        return j;
    case Command::Sweep:
        j["epsilons"] = cfg.epsilons;
        j["deltas"] = cfg.deltas;
        return j;
    default: break;
    }
    j["enum_cap"] = cfg.enum_cap;
    j["mvs"] = cfg.mvs == MvsChoice::Auto ? "auto" : cfg.mvs == MvsChoice::Exact ? "exact" : "local_search";
    if (cfg.input) j["input"] = cfg.input->string();
    if (cfg.sample) {
        j["sample"] = to_string(*cfg.sample);
    }
    if (cfg.sample || cfg.command == Command::RandomTrials) {
        j["n"] = cfg.n;
        j["dim"] = cfg.dim;
    }
    if (cfg.command == Command::Dilation) {
        j["sign"] = to_string(cfg.sign);
        if (cfg.simplex) j["simplex"] = *cfg.simplex;
    }
    if (cfg.command == Command::RandomTrials) j["trials"] = cfg.trials;
    if (cfg.command == Command::Render) {
        j["scene"] = cfg.scene;
        if (cfg.scene == "counterexample") {
            j["triangle"] = cfg.triangle;
            j["epsilon"] = cfg.epsilon;
            j["delta"] = cfg.delta;
        }
    }
    return j;
}

}  // namespace

std::string to_string(Command command) {
    switch (command) {
    case Command::Mvs: return "mvs";
    case Command::Dilation: return "dilation";
    case Command::John: return "john";
    case Command::Counterexample: return "counterexample";
    case Command::Sweep: return "sweep";
    case Command::RandomTrials: return "random-trials";
    case Command::Render: return "render";
    }
    return "unknown";
}

RunResult run(const RunConfig& cfg) {
    const auto start = Clock::now();
    RunResult result;
    try {
        Outcome out = (cfg.mode == ScalarMode::Exact || exact_only(cfg.command)) ? dispatch<Rational>(cfg)
                                                                                  : dispatch<double>(cfg);
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        result.exit_code = out.exit_code;
        result.diagnostic = std::move(out.diagnostic);
        result.report = make_report(to_string(cfg.command), config_json(cfg), std::move(out.results),
                                    Json{{"total_ms", ms}});
    } catch (const TheoremViolation& e) {
        result.exit_code = 2;
        result.diagnostic = std::string("theorem violation: ") + e.what();
    } catch (const SolverFailure& e) {
        result.exit_code = 2;
        result.diagnostic = std::string("solver failure: ") + e.what();
    } catch (const std::exception& e) {
        result.exit_code = 1;
        result.diagnostic = e.what();
    }
    return result;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, int& exit_code) {
    RunConfig cfg;
    CLI::App app{"Maximum-volume simplices of point sets and the simplex coverings they induce."};
    app.require_subcommand(1);
    app.fallthrough();

    std::string mode = "exact";
    std::string format, sample, output, input;
    app.add_option("--mode", mode, "Scalar mode")->check(CLI::IsMember({"float", "exact"}))->capture_default_str();
    app.add_option("--tol", cfg.tol, "Relative tolerance (float mode)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--enum-cap", cfg.enum_cap, "Maximum number of subsets exact MVS may enumerate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--input", input, "Point file (CSV or JSON)");
    app.add_option("--format", format, "Point file format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--sample", sample, "Sample the points from a body instead of reading a file")
        ->check(CLI::IsMember({"square", "disk", "regular-simplex", "annulus"}));
    app.add_option("--n", cfg.n, "Number of points to sample")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--dim", cfg.dim, "Dimension of sampled points")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--output", output, "Write the JSON report here instead of stdout");
    app.add_option("--epsilon", cfg.epsilon, "Counterexample epsilon")->capture_default_str();
    app.add_option("--delta", cfg.delta, "Counterexample delta")->capture_default_str();
    std::string method = "auto";
    app.add_option("--method", method, "MVS method")
        ->check(CLI::IsMember({"auto", "exact", "local"}))
        ->capture_default_str();

    auto* mvs = app.add_subcommand("mvs", "Maximum-volume simplex of a point set");
    auto* dil = app.add_subcommand("dilation", "Minimal dilation of a simplex covering the point set");
    std::string sign = "positive";
    dil->add_option("--sign", sign)->check(CLI::IsMember({"positive", "negative"}))->capture_default_str();
    std::vector<std::size_t> simplex;
    dil->add_option("--simplex", simplex, "Vertex indices of T (default: the MVS)")->delimiter(',');
    auto* john = app.add_subcommand("john", "Positive and negative covers from the MVS, with all checks");
    auto* cex = app.add_subcommand("counterexample", "Verify the planar five-point family");
    auto* swp = app.add_subcommand("sweep", "Counterexample over an (epsilon, delta) grid");
    swp->add_option("--epsilons", cfg.epsilons)->delimiter(',')->capture_default_str();
    swp->add_option("--deltas", cfg.deltas)->delimiter(',')->capture_default_str();
    std::string csv;
    swp->add_option("--csv", csv, "Also write the table as CSV");
    swp->add_flag("--with-bounds", cfg.with_bounds, "Append analytic bound columns to the CSV");
    auto* trials = app.add_subcommand("random-trials", "Check the covering bounds on random instances");
    trials->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber)->capture_default_str();
    auto* render = app.add_subcommand("render", "Write an SVG scene");
    std::string svg;
    render->add_option("--svg", svg, "Output SVG path")->required();
    render->add_option("--scene", cfg.scene)->check(CLI::IsMember({"cover", "counterexample"}))->capture_default_str();
    render->add_option("--triangle", cfg.triangle)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        exit_code = code == 0 ? 0 : 1;
        return std::nullopt;
    }

    if (mvs->parsed()) cfg.command = Command::Mvs;
    if (dil->parsed()) cfg.command = Command::Dilation;
    if (john->parsed()) cfg.command = Command::John;
    if (cex->parsed()) cfg.command = Command::Counterexample;
    if (swp->parsed()) cfg.command = Command::Sweep;
    if (trials->parsed()) cfg.command = Command::RandomTrials;
    if (render->parsed()) cfg.command = Command::Render;

    cfg.mode = mode == "float" ? ScalarMode::Float : ScalarMode::Exact;
    cfg.mvs = method == "exact" ? MvsChoice::Exact : method == "local" ? MvsChoice::LocalSearch : MvsChoice::Auto;
    cfg.sign = sign == "negative" ? DilationSign::Negative : DilationSign::Positive;
    if (!input.empty()) cfg.input = input;
    if (!format.empty()) cfg.format = parse_point_format(format);
    if (!sample.empty()) cfg.sample = parse_body(sample);
    if (!output.empty()) cfg.output = output;
    if (!simplex.empty()) cfg.simplex = simplex;
    if (!csv.empty()) cfg.csv = csv;
    if (!svg.empty()) cfg.svg = svg;
    exit_code = 0;
    return cfg;
}

}  // namespace johnsimplex::cli
