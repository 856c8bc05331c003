#include <gtest/gtest.h>

#include <random>

#include "instances.hpp"
#include "johnsimplex/errors.hpp"
#include "johnsimplex/mvs.hpp"
#include "johnsimplex/sampling.hpp"
#include "oracles.hpp"

using namespace johnsimplex;

namespace {

PointSet<Rational> square() {
    return PointSet<Rational>(2, {Point<Rational>{0, 0}, Point<Rational>{1, 0}, Point<Rational>{0, 1},
                                  Point<Rational>{1, 1}});
}

}  // namespace

TEST(CombinationCount, SmallAndSaturating) {
    EXPECT_EQ(combination_count(5, 3), 10u);
    EXPECT_EQ(combination_count(20, 6), 38760u);
    EXPECT_EQ(combination_count(3, 4), 0u);
    EXPECT_EQ(combination_count(200, 100), UINT64_MAX);
}

TEST(MvsExact, SquareTiesGoToSmallestTuple) {
    const auto r = mvs_exact(square());
    EXPECT_EQ(r.volume, Rational(1, 2));
    EXPECT_EQ(r.method, MvsMethod::Exact);
    EXPECT_EQ(*r.simplex.vertex_indices(), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(MvsExact, RegularSimplexWithInteriorPoints) {
    const auto x = sample_body<Rational>(Body::RegularSimplex, 30, 3, 9);
    const auto r = mvs_exact(x);
    EXPECT_EQ(*r.simplex.vertex_indices(), (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(r.volume, Rational(8, 3));
}

TEST(MvsExact, Errors) {
    PointSet<Rational> line(2, {Point<Rational>{0, 0}, Point<Rational>{1, 1}, Point<Rational>{2, 2},
                                Point<Rational>{5, 5}});
    EXPECT_THROW(mvs_exact(line), DegeneratePointSet);
    PointSet<Rational> few(2, {Point<Rational>{0, 0}, Point<Rational>{1, 1}});
    EXPECT_THROW(mvs_exact(few), DegeneratePointSet);
    MvsOptions opt;
    opt.enum_cap = 3;
    EXPECT_THROW(mvs_exact(square(), opt), EnumerationCapExceeded);
}

TEST(MvsExact, MatchesSubsetEnumerationOracle) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t d = 1 + seed % 3;
        const std::size_t n = d + 2 + seed % 6;
        const auto x = random_rational_points(n, d, 100 + seed);
        const auto expected = oracle::brute_mvs(testing_support::to_vecs(x));
        if (expected.volume == 0) continue;
        const auto got = mvs_exact(x);
        EXPECT_EQ(got.volume, expected.volume) << "seed " << seed;
        EXPECT_EQ(*got.simplex.vertex_indices(), expected.indices) << "seed " << seed;
    }
}

TEST(MvsExact, LargeCoordinatesUseBigIntegerPath) {
    // coordinates far beyond the 128-bit fast path
    std::mt19937_64 rng(1);
    PointSet<Rational> x(3);
    for (int i = 0; i < 9; ++i) {
        Point<Rational> p(3);
        for (std::size_t k = 0; k < 3; ++k) {
            p[k] = Rational(static_cast<long>(rng() % 2000000000000000ULL) - 1000000000000000L,
                            1 + static_cast<long>(rng() % 97));
            p[k].canonicalize();
        }
        x.add(p);
    }
    const auto expected = oracle::brute_mvs(testing_support::to_vecs(x));
    const auto got = mvs_exact(x);
    EXPECT_EQ(got.volume, expected.volume);
    EXPECT_EQ(*got.simplex.vertex_indices(), expected.indices);
}

TEST(MvsExact, ThreadCountDoesNotChangeResult) {
    const auto x = random_rational_points(40, 3, 77);
    MvsOptions one, many;
    one.threads = 1;
    many.threads = 4;
    const auto a = mvs_exact(x, one);
    const auto b = mvs_exact(x, many);
    EXPECT_EQ(a.simplex, b.simplex);
    EXPECT_EQ(a.volume, b.volume);
}

TEST(MvsExact, FloatAgreesWithExactOnGenericData) {
    const auto x = sample_body<Rational>(Body::Disk, 25, 3, 4);
    const auto e = mvs_exact(x);
    const auto f = mvs_exact(testing_support::to_double(x));
    EXPECT_EQ(*e.simplex.vertex_indices(), *f.simplex.vertex_indices());
    EXPECT_NEAR(f.volume, e.volume.get_d(), 1e-12);
}

TEST(MvsLocalSearch, ReachesSwapLocalMaximum) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto x = random_rational_points(30, 2 + seed % 3, seed);
        const auto r = mvs_local_search(x, seed);
        EXPECT_EQ(r.method, MvsMethod::LocalSearch);
        EXPECT_TRUE(verify_local_maximality(r.simplex, x).ok);
        ASSERT_FALSE(r.volume_trace.empty());
        EXPECT_EQ(r.volume_trace.size(), r.swap_count + 1);
        for (std::size_t i = 1; i < r.volume_trace.size(); ++i) EXPECT_GT(r.volume_trace[i], r.volume_trace[i - 1]);
        EXPECT_EQ(r.volume_trace.back(), r.volume);
        EXPECT_LE(r.volume, mvs_exact(x).volume);
    }
}

TEST(MvsLocalSearch, DeterministicForSeed) {
    const auto x = sample_body<double>(Body::Square, 60, 3, 12);
    const auto a = mvs_local_search(x, 5);
    const auto b = mvs_local_search(x, 5);
    EXPECT_EQ(a.simplex, b.simplex);
    EXPECT_EQ(a.volume_trace, b.volume_trace);
}

TEST(LocalMaximality, DetectsImprovingSwap) {
    PointSet<Rational> x(2, {Point<Rational>{0, 0}, Point<Rational>{1, 0}, Point<Rational>{0, 1},
                             Point<Rational>{3, 3}});
    const std::vector<std::size_t> small = {0, 1, 2};
    const auto report = verify_local_maximality(Simplex<Rational>::from_indices(x, small), x);
    EXPECT_FALSE(report.ok);
    ASSERT_TRUE(report.worst);
    EXPECT_EQ(report.worst->facet, 0u);
    EXPECT_EQ(report.worst->point, 3u);
    // a_0.(x - c) = 16 at (3, 3) against the upper limit d + 2 = 4
    EXPECT_EQ(report.worst->excess, 12);
    EXPECT_TRUE(verify_local_maximality(mvs_exact(x).simplex, x).ok);
}

TEST(LocalMaximality, AnnulusSampleStaysInsideSlabs) {
    const auto x = sample_body<Rational>(Body::Annulus, 40, 2, 8);
    const auto r = mvs_exact(x);
    const auto report = verify_local_maximality(r.simplex, x);
    EXPECT_TRUE(report.ok);
    for (const auto& s : report.slabs) {
        EXPECT_GE(s.min, -2);
        EXPECT_LE(s.max, 4);
    }
}
