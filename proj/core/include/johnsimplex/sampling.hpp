#pragma once

// Pseudo-random finite samples of a few standard convex (and one
// non-convex) bodies. Output depends only on (body, n, d, seed, grid).

#include <cstdint>
#include <string>
#include <string_view>

#include "johnsimplex/geometry.hpp"

namespace johnsimplex {

enum class Body {
    Square,          // the cube [-1, 1]^d
    Disk,            // the unit ball
    RegularSimplex,  // vertices of a regular simplex plus interior samples
    Annulus,         // 1/2 <= |x| <= 1, d = 2 only
};

std::string to_string(Body body);
Body parse_body(std::string_view name);

struct SampleOptions {
    /// Exact mode snaps every sampled coordinate to a multiple of 1/grid.
    long grid = 1000;
};

/// n points of the body in R^d. For RegularSimplex the first d+1 points are
/// the vertices; the rest are random convex combinations of them. Exact mode
/// supports RegularSimplex only where the vertices are rational (d = 1, 3,
/// and d with d+1 a perfect square). Throws InvalidArgument on n < d+1 or an
/// unsupported body/dimension pair.
template <Scalar S>
PointSet<S> sample_body(Body body, std::size_t n, std::size_t d, std::uint64_t seed,
                        const SampleOptions& options = {});

/// n points with independent coordinates p/q, q uniform in [1, max_den]
/// and |p/q| <= max_abs. Small denominators keep exact determinants cheap.
PointSet<Rational> random_rational_points(std::size_t n, std::size_t d, std::uint64_t seed, long max_abs = 2,
                                          long max_den = 5);

/// Vertices of the regular simplex used by sample_body, centered at the
/// origin.
template <Scalar S>
std::vector<Point<S>> regular_simplex_vertices(std::size_t d);

extern template PointSet<double> sample_body(Body, std::size_t, std::size_t, std::uint64_t, const SampleOptions&);
extern template PointSet<Rational> sample_body(Body, std::size_t, std::size_t, std::uint64_t, const SampleOptions&);
extern template std::vector<Point<double>> regular_simplex_vertices(std::size_t);
extern template std::vector<Point<Rational>> regular_simplex_vertices(std::size_t);

}  // namespace johnsimplex
