#include <gtest/gtest.h>

#include <random>

#include "instances.hpp"
#include "johnsimplex/geometry.hpp"
#include "johnsimplex/matrix.hpp"
#include "johnsimplex/sampling.hpp"
#include "oracles.hpp"

using namespace johnsimplex;

namespace {

Simplex<Rational> unit_triangle() {
    return Simplex<Rational>({Point<Rational>{0, 0}, Point<Rational>{1, 0}, Point<Rational>{0, 1}});
}

Simplex<Rational> random_simplex(std::mt19937_64& rng, std::size_t d) {
    while (true) {
        std::vector<Point<Rational>> vs;
        for (std::size_t i = 0; i <= d; ++i) {
            Point<Rational> p(d);
            for (std::size_t k = 0; k < d; ++k) p[k] = testing_support::small_rational(rng, 3, 4);
            vs.push_back(p);
        }
        if (oracle::volume(testing_support::to_vecs(vs)) != 0) return Simplex<Rational>(vs);
    }
}

}  // namespace

TEST(Simplex, VolumeOfStandardSimplices) {
    EXPECT_EQ(simplex_volume(unit_triangle()), Rational(1, 2));
    const Simplex<Rational> tet({Point<Rational>{0, 0, 0}, Point<Rational>{1, 0, 0}, Point<Rational>{0, 1, 0},
                                 Point<Rational>{0, 0, 1}});
    EXPECT_EQ(simplex_volume(tet), Rational(1, 6));
    const auto reg = regular_simplex_vertices<Rational>(3);
    EXPECT_EQ(simplex_volume(Simplex<Rational>(reg)), Rational(8, 3));
}

TEST(Simplex, RejectsDegenerateAndMalformedInput) {
    EXPECT_THROW(Simplex<Rational>({Point<Rational>{0, 0}, Point<Rational>{1, 1}, Point<Rational>{2, 2}}),
                 DegenerateSimplex);
    EXPECT_THROW(Simplex<double>({Point<double>{0, 0}, Point<double>{1, 1}, Point<double>{2, 2 + 1e-15}}),
                 DegenerateSimplex);
    EXPECT_THROW(Simplex<Rational>({Point<Rational>{0, 0}, Point<Rational>{1, 0}}), DimensionMismatch);
    EXPECT_THROW(Simplex<Rational>({Point<Rational>{0, 0}, Point<Rational>{1, 0}, Point<Rational>{0, 1, 0}}),
                 DimensionMismatch);
}

TEST(Simplex, FromIndicesKeepsIndices) {
    PointSet<Rational> x(2, {Point<Rational>{5, 5}, Point<Rational>{0, 0}, Point<Rational>{1, 0},
                             Point<Rational>{0, 1}});
    const std::vector<std::size_t> idx = {1, 2, 3};
    const auto s = Simplex<Rational>::from_indices(x, idx);
    EXPECT_EQ(s, Simplex<Rational>(unit_triangle().vertices(), idx));
    ASSERT_TRUE(s.vertex_indices());
    EXPECT_EQ(*s.vertex_indices(), idx);
}

TEST(PointSet, RejectsWrongDimension) {
    PointSet<Rational> x(2);
    EXPECT_THROW(x.add(Point<Rational>{1, 2, 3}), DimensionMismatch);
    EXPECT_THROW(PointSet<Rational>(0), InvalidArgument);
}

TEST(HalfspaceForm, CenteredUnitOffsetIdentities) {
    std::mt19937_64 rng(7);
    for (std::size_t d = 1; d <= 4; ++d) {
        for (int rep = 0; rep < 10; ++rep) {
            const Simplex<Rational> t = random_simplex(rng, d);
            const HalfspaceForm<Rational> form = halfspace_form(t);
            EXPECT_EQ(form.center, centroid(t));
            std::vector<Rational> sum(d, Rational(0));
            for (std::size_t i = 0; i <= d; ++i) {
                EXPECT_EQ(form.offsets[i], 1);
                for (std::size_t k = 0; k < d; ++k) sum[k] += form.normals[i][k];
                EXPECT_EQ(form.facet_value(i, t.vertex(i)), -Rational(static_cast<long>(d)));
                for (std::size_t j = 0; j <= d; ++j) {
                    if (j != i) EXPECT_EQ(form.facet_value(i, t.vertex(j)), 1);
                }
            }
            EXPECT_EQ(sum, std::vector<Rational>(d, Rational(0)));
        }
    }
}

TEST(HalfspaceForm, FacetValuesMatchBarycentricOracle) {
    std::mt19937_64 rng(11);
    for (std::size_t d = 2; d <= 4; ++d) {
        const Simplex<Rational> t = random_simplex(rng, d);
        const HalfspaceForm<Rational> form = halfspace_form(t);
        const auto vs = testing_support::to_vecs(t.vertices());
        for (int rep = 0; rep < 5; ++rep) {
            Point<Rational> x(d);
            for (std::size_t k = 0; k < d; ++k) x[k] = testing_support::small_rational(rng, 4, 7);
            const oracle::Vec beta = oracle::barycentric(vs, x.coords());
            EXPECT_EQ(barycentric_coordinates(t, x), beta);
            for (std::size_t i = 0; i <= d; ++i) {
                EXPECT_EQ(form.facet_value(i, x), 1 - static_cast<long>(d + 1) * beta[i]);
            }
        }
    }
}

TEST(Reflection, ReflectedVertexAndFacetPoint) {
    std::mt19937_64 rng(3);
    for (std::size_t d = 1; d <= 4; ++d) {
        const Simplex<Rational> t = random_simplex(rng, d);
        const Point<Rational> c = centroid(t);
        const HalfspaceForm<Rational> form = halfspace_form(t);
        const Rational dd(static_cast<long>(d));
        for (std::size_t i = 0; i <= d; ++i) {
            const Point<Rational> w = line_facet_intersection(t, i);
            EXPECT_EQ(w, c - (1 / dd) * (t.vertex(i) - c));
            EXPECT_EQ(form.facet_value(i, w), 1);
            const Point<Rational> hat = reflect_vertex(t, i);
            EXPECT_EQ(hat, c - ((dd + 2) / dd) * (t.vertex(i) - c));
            EXPECT_EQ(form.facet_value(i, hat), dd + 2);
        }
    }
}

TEST(Dilation, AboutCenterAndHalfspaceForm) {
    const Simplex<Rational> t = unit_triangle();
    const Simplex<Rational> t2 = dilate_about_center(t, Rational(2));
    EXPECT_EQ(simplex_volume(t2), Rational(2));
    EXPECT_EQ(centroid(t2), centroid(t));
    EXPECT_THROW(dilate_about_center(t, Rational(0)), InvalidArgument);

    const HalfspaceForm<Rational> form = halfspace_form(t);
    const HalfspaceForm<Rational> neg = dilate(form, Rational(-2));
    const Simplex<Rational> tneg = dilate_about_center(t, Rational(-2));
    for (const auto& v : tneg.vertices()) EXPECT_TRUE(contains(neg, v));
    // the anticomplementary triangle of the unit triangle
    EXPECT_EQ(tneg.vertex(0), (Point<Rational>{1, 1}));
    EXPECT_TRUE(contains(neg, Point<Rational>{Rational(1, 2), Rational(1, 2)}));
    EXPECT_FALSE(contains(neg, Point<Rational>{Rational(11, 10), Rational(11, 10)}));
}

TEST(Containment, BoundaryIsInsideExactly) {
    const HalfspaceForm<Rational> form = halfspace_form(unit_triangle());
    EXPECT_TRUE(contains(form, Point<Rational>{Rational(1, 2), Rational(1, 2)}));
    EXPECT_FALSE(contains(form, Point<Rational>{Rational(1, 2), Rational(1, 2) + Rational(1, 1000000)}));
    EXPECT_THROW(contains(form, Point<Rational>{0, 0}, 1e-9), InvalidArgument);

    const HalfspaceForm<double> f = halfspace_form(Simplex<double>({Point<double>{0, 0}, Point<double>{1, 0},
                                                                    Point<double>{0, 1}}));
    EXPECT_TRUE(contains(f, Point<double>{0.5, 0.5 + 1e-12}, 1e-9));
    EXPECT_FALSE(contains(f, Point<double>{0.5, 0.5 + 1e-6}, 1e-9));
}

TEST(Slabs, BoundsOverPointSet) {
    const Simplex<Rational> t = unit_triangle();
    PointSet<Rational> x(2, {Point<Rational>{0, 0}, Point<Rational>{1, 0}, Point<Rational>{0, 1},
                             Point<Rational>{1, 1}});
    const auto slabs = slab_bounds(t, x);
    ASSERT_EQ(slabs.size(), 3u);
    // facet 0 is x + y = 1 opposite the origin
    EXPECT_EQ(slabs[0].min, -2);
    EXPECT_EQ(slabs[0].max, 4);
    EXPECT_EQ(slabs[1].min, -2);
    EXPECT_EQ(slabs[1].max, 1);
}

TEST(Matrix, DeterminantMatchesLaplaceOracle) {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 5; ++n) {
        Matrix<Rational> m(n, n);
        oracle::Mat o(n, oracle::Vec(n));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) o[r][c] = m(r, c) = testing_support::small_rational(rng, 4, 5);
        }
        EXPECT_EQ(determinant(m), oracle::det(o));
        const auto inv = inverse(m);
        if (oracle::det(o) != 0) {
            ASSERT_TRUE(inv);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    Rational acc = 0;
                    for (std::size_t k = 0; k < n; ++k) acc += m(r, k) * (*inv)(k, c);
                    EXPECT_EQ(acc, r == c ? 1 : 0);
                }
            }
        }
    }
    Matrix<Rational> singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 2;
    singular(1, 0) = 2;
    singular(1, 1) = 4;
    EXPECT_FALSE(inverse(singular));
    EXPECT_EQ(determinant(singular), 0);
}
