#include <gtest/gtest.h>

#include <random>

#include "instances.hpp"
#include "johnsimplex/covering.hpp"
#include "johnsimplex/sampling.hpp"
#include "oracles.hpp"

using namespace johnsimplex;

namespace {

PointSet<Rational> square() {
    return PointSet<Rational>(2, {Point<Rational>{0, 0}, Point<Rational>{1, 0}, Point<Rational>{0, 1},
                                  Point<Rational>{1, 1}});
}

}  // namespace

TEST(MinDilation, SquareWithCornerTriangle) {
    const auto x = square();
    const std::vector<std::size_t> idx = {0, 1, 2};
    const auto t = Simplex<Rational>::from_indices(x, idx);
    const auto pos = min_dilation(t, x, DilationSign::Positive);
    const auto neg = min_dilation(t, x, DilationSign::Negative);
    EXPECT_EQ(pos.lambda, 2);
    EXPECT_EQ(neg.lambda, 2);
    EXPECT_TRUE(covers(t, x, pos));
    EXPECT_TRUE(covers(t, x, neg));
    // -2T placed at (1, 1): the triangle (1,1), (-1,1), (1,-1)
    EXPECT_EQ(neg.translate, (Point<Rational>{1, 1}));
    EXPECT_TRUE(check_certificate(dilation_program(t, x, DilationSign::Positive), pos.solution, 0.0));
}

TEST(MinDilation, MatchesBarycentricClosedForm) {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t d = 1 + rep % 4;
        const auto x = random_rational_points(10 + rep % 5, d, 500 + rep);
        std::vector<std::size_t> idx(d + 1);
        for (std::size_t i = 0; i <= d; ++i) idx[i] = i;
        std::vector<oracle::Vec> vs;
        for (std::size_t i : idx) vs.push_back(testing_support::to_vecs(x)[i]);
        if (oracle::volume(vs) == 0) continue;
        const auto t = Simplex<Rational>::from_indices(x, idx);
        for (bool positive : {true, false}) {
            const auto sign = positive ? DilationSign::Positive : DilationSign::Negative;
            const auto r = min_dilation(t, x, sign);
            EXPECT_EQ(r.lambda, oracle::dilation_closed_form(vs, testing_support::to_vecs(x), positive));
            EXPECT_TRUE(covers(t, x, r));
            EXPECT_TRUE(check_certificate(dilation_program(t, x, sign), r.solution, 0.0));

            const auto f = min_dilation(Simplex<double>::from_indices(testing_support::to_double(x), idx),
                                        testing_support::to_double(x), sign);
            EXPECT_NEAR(f.lambda, r.lambda.get_d(), 1e-9 * std::max(1.0, r.lambda.get_d()));
        }
    }
}

TEST(MinDilation, SinglePointIsCoveredWithZeroDilation) {
    PointSet<Rational> x(2, {Point<Rational>{3, 4}});
    const Simplex<Rational> t({Point<Rational>{0, 0}, Point<Rational>{1, 0}, Point<Rational>{0, 1}});
    const auto r = min_dilation(t, x, DilationSign::Positive);
    EXPECT_EQ(r.lambda, 0);
    EXPECT_EQ(r.translate, (Point<Rational>{3, 4}));
    EXPECT_TRUE(covers(t, x, r));
    EXPECT_THROW(covering_simplex(t, r), DegenerateSimplex);
}

TEST(MinDilation, DimensionMismatch) {
    PointSet<Rational> x(3, {Point<Rational>{0, 0, 0}});
    const Simplex<Rational> t({Point<Rational>{0, 0}, Point<Rational>{1, 0}, Point<Rational>{0, 1}});
    EXPECT_THROW(min_dilation(t, x, DilationSign::Positive), DimensionMismatch);
}

TEST(VertexHyperplaneSimplex, IsAnticomplementaryTriangleInThePlane) {
    const Simplex<Rational> t({Point<Rational>{0, 0}, Point<Rational>{4, 0}, Point<Rational>{1, 3}});
    const auto big = vertex_hyperplane_simplex(t);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(big.vertex(i), t.vertex((i + 1) % 3) + t.vertex((i + 2) % 3) - t.vertex(i));
    }
    EXPECT_EQ(simplex_volume(big), 4 * simplex_volume(t));
}

TEST(Sandwich, HoldsForMaximumVolumeSimplex) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const std::size_t d = 2 + seed % 3;
        const auto x = random_rational_points(15, d, seed);
        const auto mvs = mvs_exact(x);
        const auto report = verify_sandwich(mvs.simplex, x);
        EXPECT_TRUE(report.ok);
        ASSERT_EQ(report.slacks.size(), d + 1);
        for (const auto& s : report.slacks) {
            EXPECT_GE(s.lower, 0);
            EXPECT_GE(s.upper, 0);
        }
    }
}

TEST(Sandwich, ReportsImprovingSwap) {
    PointSet<Rational> x(2, {Point<Rational>{0, 0}, Point<Rational>{1, 0}, Point<Rational>{0, 1},
                             Point<Rational>{3, 3}});
    const std::vector<std::size_t> idx = {0, 1, 2};
    const auto report = verify_sandwich(Simplex<Rational>::from_indices(x, idx), x);
    EXPECT_FALSE(report.locally_maximal);
    EXPECT_FALSE(report.in_hat);
    EXPECT_TRUE(report.hat_in_prime);
    ASSERT_TRUE(report.swap_violation);
    EXPECT_EQ(report.swap_violation->vertex, 0u);
    EXPECT_EQ(report.swap_violation->point, 3u);
    EXPECT_EQ(report.swap_violation->volume_ratio, 5);
    EXPECT_FALSE(report.ok);
}

TEST(JohnCover, SquareExact) {
    const auto report = john_positive_cover(square());
    EXPECT_TRUE(report.bounds_ok);
    EXPECT_TRUE(report.sandwich_ok);
    EXPECT_TRUE(report.construction_contains);
    EXPECT_LE(report.positive.lambda, 4);
    EXPECT_LE(report.negative.lambda, 2);
    EXPECT_EQ(report.mvs.method, MvsMethod::Exact);
    EXPECT_FALSE(report.escalated);
}

TEST(JohnCover, BoundsOnSampledBodies) {
    for (Body body : {Body::Square, Body::Disk, Body::RegularSimplex}) {
        for (std::size_t d : {2u, 3u}) {
            if (body == Body::RegularSimplex && d == 2) continue;  // irrational vertices
            const auto x = sample_body<Rational>(body, 18, d, 3);
            const auto report = john_positive_cover(x);
            EXPECT_TRUE(report.bounds_ok) << to_string(body) << " d=" << d;
            EXPECT_TRUE(report.sandwich_ok) << to_string(body) << " d=" << d;
            const auto neg = john_negative_cover(x);
            EXPECT_LE(neg.lambda, static_cast<long>(d));
        }
    }
}

TEST(JohnCover, LocalSearchPathInFloatMode) {
    const auto x = sample_body<double>(Body::Disk, 80, 3, 21);
    CoverOptions opt;
    opt.force_local_search = true;
    const auto report = john_positive_cover(x, opt);
    EXPECT_EQ(report.mvs.method, MvsMethod::LocalSearch);
    EXPECT_TRUE(report.bounds_ok);
    EXPECT_TRUE(report.sandwich_ok);
    EXPECT_TRUE(report.warnings.empty());
}

TEST(JohnCover, NegativeBoundIsTightForRegularSimplexVertices) {
    // the reflected regular simplex needs the full factor d
    const auto vs = regular_simplex_vertices<Rational>(3);
    const PointSet<Rational> x(3, vs);
    EXPECT_EQ(john_negative_cover(x).lambda, 3);
    EXPECT_EQ(john_positive_cover(x).positive.lambda, 1);
}
