#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <regex>

#include "johnsimplex/counterexample.hpp"
#include "johnsimplex/covering.hpp"
#include "johnsimplex/io.hpp"
#include "johnsimplex/report.hpp"
#include "johnsimplex/sampling.hpp"
#include "johnsimplex/svg.hpp"

using namespace johnsimplex;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("johnsimplex_test_" + name);
}

}  // namespace

TEST(ParsePoints, CsvSquare) {
    const auto x = parse_points_text<Rational>("0,0\n1,0\n0,1\n1,1", PointFormat::Csv);
    EXPECT_EQ(x.dim(), 2u);
    EXPECT_EQ(x.size(), 4u);
    EXPECT_EQ(x[3], (Point<Rational>{1, 1}));
}

TEST(ParsePoints, CsvRationalsCommentsAndBlankLines) {
    const auto x = parse_points_text<Rational>("# header\n\n1/3, 2/3\r\n 0.25 ,-1e-1\n", PointFormat::Csv);
    ASSERT_EQ(x.size(), 2u);
    EXPECT_EQ(x[0], (Point<Rational>{Rational(1, 3), Rational(2, 3)}));
    EXPECT_EQ(x[1], (Point<Rational>{Rational(1, 4), Rational(-1, 10)}));
    const auto f = parse_points_text<double>("1/4,2\n", PointFormat::Csv);
    EXPECT_EQ(f[0], (Point<double>{0.25, 2.0}));
}

TEST(ParsePoints, CsvErrorsNameTheLine) {
    try {
        parse_points_text<Rational>("0,0\n1,0\n1\n", PointFormat::Csv);
        FAIL() << "ragged input accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    try {
        parse_points_text<Rational>("0,0\n1,x\n", PointFormat::Csv);
        FAIL() << "junk accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse_points_text<Rational>("0,,1\n", PointFormat::Csv), ParseError);
    EXPECT_THROW(parse_points_text<Rational>("\n# only comments\n", PointFormat::Csv), ParseError);
}

TEST(ParsePoints, Json) {
    const auto x = parse_points_text<Rational>(R"({"dim": 2, "points": [[0, "1/3"], [0.5, -2]]})", PointFormat::Json);
    ASSERT_EQ(x.size(), 2u);
    EXPECT_EQ(x[0], (Point<Rational>{0, Rational(1, 3)}));
    EXPECT_EQ(x[1], (Point<Rational>{Rational(1, 2), -2}));
    EXPECT_THROW(parse_points_text<Rational>(R"({"dim": 3, "points": [[0, 1]]})", PointFormat::Json), ParseError);
    EXPECT_THROW(parse_points_text<Rational>(R"({"dim": 2, "points": [[0, true]]})", PointFormat::Json),
                 ParseError);
    EXPECT_THROW(parse_points_text<Rational>("[1, 2]", PointFormat::Json), ParseError);
    EXPECT_THROW(parse_points_text<Rational>("{", PointFormat::Json), ParseError);
}

TEST(ParsePoints, RoundTripExact) {
    const auto x = sample_body<Rational>(Body::Disk, 25, 3, 1);
    for (PointFormat fmt : {PointFormat::Csv, PointFormat::Json}) {
        EXPECT_EQ(parse_points_text<Rational>(serialize_points(x, fmt), fmt), x);
    }
    PointSet<Rational> odd(2, {Point<Rational>{Rational(-7, 3), Rational(1, 1000000007)}});
    EXPECT_EQ(parse_points_text<Rational>(serialize_points(odd, PointFormat::Csv), PointFormat::Csv), odd);
}

TEST(ParsePoints, RoundTripFloat) {
    const auto x = sample_body<double>(Body::Square, 25, 4, 2);
    for (PointFormat fmt : {PointFormat::Csv, PointFormat::Json}) {
        EXPECT_EQ(parse_points_text<double>(serialize_points(x, fmt), fmt), x);
    }
}

TEST(ParsePoints, FilesAndFormatDetection) {
    const auto path = temp_file("points.json");
    const auto x = sample_body<Rational>(Body::Square, 6, 2, 3);
    write_text_file(path, serialize_points(x, PointFormat::Json));
    EXPECT_EQ(format_for_path(path), PointFormat::Json);
    EXPECT_EQ(parse_points<Rational>(path), x);
    std::filesystem::remove(path);
    EXPECT_THROW(parse_points<Rational>(temp_file("missing.csv")), ParseError);
    EXPECT_EQ(parse_point_format("csv"), PointFormat::Csv);
    EXPECT_THROW(parse_point_format("xml"), InvalidArgument);
}

TEST(Sampling, DeterministicPerSeed) {
    EXPECT_EQ(sample_body<double>(Body::Disk, 100, 2, 42), sample_body<double>(Body::Disk, 100, 2, 42));
    EXPECT_NE(sample_body<double>(Body::Disk, 100, 2, 42), sample_body<double>(Body::Disk, 100, 2, 43));
    EXPECT_EQ(random_rational_points(10, 3, 5), random_rational_points(10, 3, 5));
}

TEST(Sampling, BodiesStayInside) {
    for (const auto& p : sample_body<double>(Body::Disk, 200, 3, 1)) {
        EXPECT_LE(p[0] * p[0] + p[1] * p[1] + p[2] * p[2], 1.0 + 1e-12);
    }
    for (const auto& p : sample_body<double>(Body::Annulus, 200, 2, 1)) {
        const double r = std::hypot(p[0], p[1]);
        EXPECT_GE(r, 0.5 - 1e-12);
        EXPECT_LE(r, 1.0 + 1e-12);
    }
    for (const auto& p : sample_body<Rational>(Body::Square, 50, 2, 1)) {
        EXPECT_LE(abs(p[0]), 1);
        EXPECT_EQ(1000 % p[0].get_den(), 0);
    }
    for (const auto& p : random_rational_points(50, 2, 9)) {
        EXPECT_LE(abs(p[1]), 2);
        EXPECT_LE(p[1].get_den(), 5);
    }
}

TEST(Sampling, RegularSimplex) {
    const auto x = sample_body<Rational>(Body::RegularSimplex, 4, 3, 0);
    const PointSet<Rational> expected(3, regular_simplex_vertices<Rational>(3));
    EXPECT_EQ(x, expected);
    const auto vs = regular_simplex_vertices<Rational>(8);
    Rational edge = 0;
    for (std::size_t k = 0; k < 8; ++k) edge += (vs[0][k] - vs[1][k]) * (vs[0][k] - vs[1][k]);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            Rational dist = 0;
            for (std::size_t k = 0; k < 8; ++k) dist += (vs[i][k] - vs[j][k]) * (vs[i][k] - vs[j][k]);
            EXPECT_EQ(dist, edge);
        }
    }
    const auto fl = regular_simplex_vertices<double>(2);
    EXPECT_NEAR(std::hypot(fl[0][0] - fl[1][0], fl[0][1] - fl[1][1]),
                std::hypot(fl[0][0] - fl[2][0], fl[0][1] - fl[2][1]), 1e-12);
    // interior samples are convex combinations of the vertices
    const auto inner = sample_body<Rational>(Body::RegularSimplex, 40, 3, 5);
    const HalfspaceForm<Rational> form = halfspace_form(Simplex<Rational>(regular_simplex_vertices<Rational>(3)));
    for (const auto& p : inner) EXPECT_TRUE(contains(form, p));
}

TEST(Sampling, UnsupportedCombinations) {
    EXPECT_THROW(sample_body<double>(Body::Annulus, 10, 3, 0), InvalidArgument);
    EXPECT_THROW(sample_body<double>(Body::Disk, 2, 2, 0), InvalidArgument);
    EXPECT_THROW(sample_body<Rational>(Body::RegularSimplex, 3, 2, 0), InvalidArgument);
    EXPECT_NO_THROW(sample_body<double>(Body::RegularSimplex, 3, 2, 0));
    EXPECT_THROW(parse_body("cube"), InvalidArgument);
}

TEST(Svg, CounterexampleScene) {
    namespace cx = johnsimplex::counterexample;
    const auto x = cx::build_points(cx::Config::standard());
    const auto tris = cx::enumerate_triangles(x);
    const auto& ade = *tris[8].simplex;
    const std::string svg =
        render_scene_2d(x, {styled_polygon(ade, {}), styled_polygon(dilate_about_center(ade, Rational(2)), {})});
    EXPECT_EQ(count(svg, "<circle"), 5u);
    EXPECT_EQ(count(svg, "<polygon"), 2u);
    EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}

TEST(Svg, DotsOnlyAndViewBoxMargin) {
    PointSet<double> x(2, {Point<double>{0, 0}, Point<double>{10, 0}, Point<double>{0, 5}});
    const std::string svg = render_scene_2d(x, {});
    EXPECT_EQ(count(svg, "<circle"), 3u);
    EXPECT_EQ(count(svg, "<polygon"), 0u);
    // 5% of the larger extent (10) on each side, y flipped
    EXPECT_NE(svg.find("viewBox=\"-0.5 -5.5 11 6\""), std::string::npos);
}

TEST(Svg, RejectsNonPlanarInput) {
    PointSet<double> x(3, {Point<double>{0, 0, 0}});
    EXPECT_THROW(render_scene_2d(x, {}), DimensionMismatch);
}

TEST(Report, RationalsAreStringsAndSchemaIsStable) {
    PointSet<Rational> x(2, {Point<Rational>{0, 0}, Point<Rational>{1, 0}, Point<Rational>{0, 1},
                             Point<Rational>{1, 1}});
    const auto report = john_positive_cover(x);
    const Json j = make_report("john", Json::object(), to_json(report), Json::object());
    EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
    EXPECT_EQ(j["results"]["positive"]["lambda"], "2");
    EXPECT_EQ(j["results"]["mvs"]["volume"], "1/2");
    EXPECT_EQ(j["results"]["bounds_ok"], true);
    EXPECT_EQ(to_json(0.1).dump(), "0.1");
    EXPECT_EQ(Json::parse(to_json(1.0 / 3.0).dump()).get<double>(), 1.0 / 3.0);
}
