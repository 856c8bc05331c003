#include <gtest/gtest.h>

#include <filesystem>
#include <vector>

#include "cli.hpp"

using namespace johnsimplex;
using johnsimplex::cli::RunConfig;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("johnsimplex_cli_" + name);
}

std::optional<RunConfig> parse(std::vector<std::string> args, int& code) {
    args.insert(args.begin(), "johnsimplex");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli::parse_args(static_cast<int>(argv.size()), argv.data(), code);
}

cli::RunResult run_args(std::vector<std::string> args) {
    int code = 0;
    const auto cfg = parse(std::move(args), code);
    if (!cfg) return cli::RunResult{code, nullptr, "parse failure"};
    return cli::run(*cfg);
}

std::filesystem::path square_csv() {
    const auto path = temp_file("square.csv");
    write_text_file(path, "0,0\n1,0\n0,1\n1,1\n");
    return path;
}

Json without_timings(Json j) {
    j.erase("timings");
    return j;
}

}  // namespace

TEST(Cli, JohnOnSquareExact) {
    const auto r = run_args({"john", "--input", square_csv().string(), "--mode", "exact"});
    ASSERT_EQ(r.exit_code, 0) << r.diagnostic;
    EXPECT_EQ(r.report["command"], "john");
    EXPECT_EQ(r.report["results"]["negative"]["lambda"], "2");
    EXPECT_EQ(r.report["results"]["positive"]["lambda"], "2");
    EXPECT_EQ(r.report["results"]["bounds_ok"], true);
}

TEST(Cli, CounterexampleVerified) {
    const auto r = run_args({"counterexample", "--epsilon", "1/5", "--delta", "1/5"});
    ASSERT_EQ(r.exit_code, 0) << r.diagnostic;
    EXPECT_EQ(r.report["results"]["verified"], true);
    EXPECT_EQ(r.report["results"]["triangles"]["min_lambda"], "110/53");
}

TEST(Cli, InputErrorsExitWithOne) {
    auto r = run_args({"john", "--input", temp_file("does_not_exist.csv").string()});
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.diagnostic.find("cannot open"), std::string::npos);
    EXPECT_TRUE(r.report.is_null());

    const auto ragged = temp_file("ragged.csv");
    write_text_file(ragged, "0,0\n1\n");
    r = run_args({"mvs", "--input", ragged.string()});
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.diagnostic.find("line 2"), std::string::npos);

    EXPECT_EQ(run_args({"mvs"}).exit_code, 1);
    EXPECT_EQ(run_args({"counterexample", "--epsilon", "3/2"}).exit_code, 1);
    EXPECT_EQ(run_args({"mvs", "--sample", "disk", "--enum-cap", "5"}).exit_code, 0);
    EXPECT_EQ(run_args({"mvs", "--sample", "disk", "--enum-cap", "5", "--method", "exact"}).exit_code, 1);
}

TEST(Cli, FlagValidation) {
    int code = -1;
    EXPECT_FALSE(parse({"mvs", "--mode", "fuzzy"}, code));
    EXPECT_EQ(code, 1);
    EXPECT_FALSE(parse({"mvs", "--tol", "-1"}, code));
    EXPECT_EQ(code, 1);
    EXPECT_FALSE(parse({"bogus"}, code));
    EXPECT_EQ(code, 1);
    EXPECT_FALSE(parse({"render"}, code));  // --svg is required
    EXPECT_EQ(code, 1);
    const auto cfg = parse({"dilation", "--simplex", "0,2,3", "--sign", "negative", "--mode", "float"}, code);
    ASSERT_TRUE(cfg);
    EXPECT_EQ(cfg->command, cli::Command::Dilation);
    EXPECT_EQ(*cfg->simplex, (std::vector<std::size_t>{0, 2, 3}));
    EXPECT_EQ(cfg->sign, DilationSign::Negative);
    EXPECT_EQ(cfg->mode, ScalarMode::Float);
}

TEST(Cli, DilationWithExplicitSimplex) {
    const auto r = run_args({"dilation", "--input", square_csv().string(), "--simplex", "1,2,3", "--sign", "negative"});
    ASSERT_EQ(r.exit_code, 0) << r.diagnostic;
    EXPECT_EQ(r.report["results"]["dilation"]["lambda"], "2");
    EXPECT_EQ(r.report["results"]["covers"], true);
    EXPECT_EQ(r.report["results"]["certificate_ok"], true);
    EXPECT_EQ(run_args({"dilation", "--input", square_csv().string(), "--simplex", "0,1,9"}).exit_code, 1);
}

TEST(Cli, DeterministicReports) {
    const std::vector<std::string> args = {"random-trials", "--trials", "6", "--dim", "3", "--n", "12", "--seed", "9"};
    auto a = run_args(args);
    auto b = run_args({"random-trials", "--trials", "6", "--dim", "3", "--n", "12", "--seed", "9", "--threads", "3"});
    ASSERT_EQ(a.exit_code, 0) << a.diagnostic;
    EXPECT_EQ(without_timings(a.report).dump(), without_timings(b.report).dump());
    EXPECT_EQ(a.report["results"]["passed"], 6);

    auto f1 = run_args({"john", "--sample", "disk", "--n", "30", "--mode", "float", "--seed", "4"});
    auto f2 = run_args({"john", "--sample", "disk", "--n", "30", "--mode", "float", "--seed", "4"});
    EXPECT_EQ(without_timings(f1.report).dump(), without_timings(f2.report).dump());
}

TEST(Cli, SweepWritesCsv) {
    const auto csv = temp_file("sweep.csv");
    const auto r = run_args({"sweep", "--epsilons", "1/10,1/5", "--deltas", "1/5", "--csv", csv.string()});
    ASSERT_EQ(r.exit_code, 0) << r.diagnostic;
    EXPECT_EQ(r.report["results"]["rows"].size(), 2u);
    const std::string text = read_text_file(csv);
    EXPECT_EQ(text.substr(0, 22), "epsilon,delta,feasible");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

TEST(Cli, RenderScenes) {
    const auto svg = temp_file("scene.svg");
    auto r = run_args({"render", "--scene", "counterexample", "--triangle", "ADE", "--svg", svg.string()});
    ASSERT_EQ(r.exit_code, 0) << r.diagnostic;
    EXPECT_EQ(r.report["results"]["polygons"], 2);
    r = run_args({"render", "--sample", "disk", "--n", "25", "--svg", svg.string()});
    ASSERT_EQ(r.exit_code, 0) << r.diagnostic;
    EXPECT_EQ(r.report["results"]["polygons"], 3);
    EXPECT_EQ(r.report["results"]["simplex_in_prime"], true);
    EXPECT_EQ(r.report["results"]["points_in_prime"], true);
    r = run_args({"render", "--sample", "disk", "--dim", "3", "--n", "25", "--svg", svg.string()});
    EXPECT_EQ(r.exit_code, 1);
    r = run_args({"render", "--scene", "counterexample", "--triangle", "XYZ", "--svg", svg.string()});
    EXPECT_EQ(r.exit_code, 1);
}

TEST(Cli, MvsFloatAndExactAgreeOnSample) {
    const auto e = run_args({"mvs", "--sample", "square", "--n", "15", "--dim", "3", "--seed", "2"});
    const auto f = run_args({"mvs", "--sample", "square", "--n", "15", "--dim", "3", "--seed", "2", "--mode", "float"});
    ASSERT_EQ(e.exit_code, 0);
    ASSERT_EQ(f.exit_code, 0);
    EXPECT_EQ(e.report["results"]["mvs"]["simplex"]["indices"], f.report["results"]["mvs"]["simplex"]["indices"]);
    EXPECT_EQ(e.report["results"]["local_maximality"]["ok"], true);
}
