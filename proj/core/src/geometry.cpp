#include "johnsimplex/geometry.hpp"

#include <cmath>
#include <string>

#include "johnsimplex/matrix.hpp"

namespace johnsimplex {
namespace {

template <Scalar S>
void check_vertex_list(std::span<const Point<S>> vertices) {
    if (vertices.size() < 2) throw DimensionMismatch("a simplex needs at least two vertices");
    const std::size_t d = vertices.size() - 1;
    for (const auto& v : vertices) {
        if (v.dim() != d) {
            throw DimensionMismatch("simplex in R^" + std::to_string(d) + " needs " + std::to_string(d + 1) +
                                    " vertices of dimension " + std::to_string(d));
        }
    }
}

template <Scalar S>
S factorial(std::size_t d) {
    S f(1);
    for (std::size_t k = 2; k <= d; ++k) f *= S(static_cast<long>(k));
    return f;
}

template <Scalar S>
Matrix<S> edge_matrix(std::span<const Point<S>> vertices) {
    const std::size_t d = vertices.size() - 1;
    Matrix<S> m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) m(r, c) = vertices[r + 1][c] - vertices[0][c];
    }
    return m;
}

// Zero volume, or (doubles) |det| negligible against the product of edge lengths.
template <Scalar S>
bool is_degenerate(std::span<const Point<S>> vertices) {
    const Matrix<S> edges = edge_matrix(vertices);
    const S det = determinant(edges);
    if constexpr (is_exact_v<S>) {
        return sign(det) == 0;
    } else {
        double lengths = 1.0;
        for (std::size_t r = 0; r < edges.rows(); ++r) {
            double sq = 0;
            for (double v : edges.row(r)) sq += v * v;
            lengths *= std::sqrt(sq);
        }
        return !(std::fabs(det) > 1e-12 * lengths);
    }
}

template <Scalar S>
void check_facet_index(const Simplex<S>& simplex, std::size_t i) {
    if (i > simplex.dim()) throw InvalidArgument("facet index " + std::to_string(i) + " out of range");
}

}  // namespace

template <Scalar S>
Simplex<S>::Simplex(std::vector<Point<S>> vertices, std::optional<std::vector<std::size_t>> vertex_indices)
    : vertices_(std::move(vertices)), indices_(std::move(vertex_indices)) {
    check_vertex_list(std::span<const Point<S>>(vertices_));
    if (indices_ && indices_->size() != vertices_.size()) {
        throw InvalidArgument("vertex_indices must name exactly d+1 points");
    }
    if (is_degenerate(std::span<const Point<S>>(vertices_))) throw DegenerateSimplex("simplex has zero volume");
}

template <Scalar S>
Simplex<S> Simplex<S>::from_indices(const PointSet<S>& points, std::span<const std::size_t> indices) {
    std::vector<Point<S>> vertices;
    vertices.reserve(indices.size());
    for (std::size_t idx : indices) {
        if (idx >= points.size()) throw InvalidArgument("vertex index " + std::to_string(idx) + " out of range");
        vertices.push_back(points[idx]);
    }
    return Simplex(std::move(vertices), std::vector<std::size_t>(indices.begin(), indices.end()));
}

template <Scalar S>
S HalfspaceForm<S>::facet_value(std::size_t i, const Point<S>& x) const {
    if (x.dim() != dim) throw DimensionMismatch("point dimension does not match halfspace form");
    S acc(0);
    for (std::size_t k = 0; k < dim; ++k) acc += normals[i][k] * (x[k] - center[k]);
    return acc;
}

template <Scalar S>
S simplex_volume(std::span<const Point<S>> vertices) {
    check_vertex_list(vertices);
    return abs_value(determinant(edge_matrix(vertices))) / factorial<S>(vertices.size() - 1);
}

template <Scalar S>
Point<S> centroid(std::span<const Point<S>> points) {
    if (points.empty()) throw InvalidArgument("centroid of an empty point list");
    Point<S> sum(points[0].dim());
    for (const auto& p : points) sum += p;
    sum *= S(1) / S(static_cast<long>(points.size()));
    return sum;
}

template <Scalar S>
HalfspaceForm<S> halfspace_form(const Simplex<S>& simplex) {
    const std::size_t d = simplex.dim();
    const Point<S> c = centroid(simplex);

    // Columns are homogeneous centered vertices; row i of the inverse gives
    // the barycentric coordinate beta_i(y) = g_i.y + h_i, and a_i = -(d+1) g_i.
    Matrix<S> homogeneous(d + 1, d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
        for (std::size_t k = 0; k < d; ++k) homogeneous(k, j) = simplex.vertex(j)[k] - c[k];
        homogeneous(d, j) = S(1);
    }
    auto inv = inverse(std::move(homogeneous));
    if (!inv) throw DegenerateSimplex("simplex has zero volume");

    HalfspaceForm<S> form;
    form.dim = d;
    form.center = c;
    form.offsets.assign(d + 1, S(1));
    form.normals.assign(d + 1, std::vector<S>(d, S(0)));
    const S scale(-static_cast<long>(d + 1));
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t k = 0; k < d; ++k) form.normals[i][k] = scale * (*inv)(i, k);
    }
    return form;
}

template <Scalar S>
std::vector<S> barycentric_coordinates(const Simplex<S>& simplex, const Point<S>& x) {
    const std::size_t d = simplex.dim();
    if (x.dim() != d) throw DimensionMismatch("point dimension does not match simplex");
    Matrix<S> a(d + 1, d + 1);
    std::vector<S> rhs(d + 1, S(1));
    for (std::size_t j = 0; j <= d; ++j) {
        for (std::size_t k = 0; k < d; ++k) a(k, j) = simplex.vertex(j)[k];
        a(d, j) = S(1);
    }
    for (std::size_t k = 0; k < d; ++k) rhs[k] = x[k];
    auto beta = solve(std::move(a), std::move(rhs));
    if (!beta) throw DegenerateSimplex("simplex has zero volume");
    return *beta;
}

template <Scalar S>
Point<S> line_facet_intersection(const Simplex<S>& simplex, std::size_t i) {
    check_facet_index(simplex, i);
    const HalfspaceForm<S> form = halfspace_form(simplex);
    // c + s (v_i - c) lies on a_i.(y - c) = b_i
    const Point<S> direction = simplex.vertex(i) - form.center;
    const S s = form.offsets[i] / dot(std::span<const S>(form.normals[i]), direction);
    return form.center + s * direction;
}

template <Scalar S>
Point<S> reflect_vertex(const Simplex<S>& simplex, std::size_t i) {
    const Point<S> w = line_facet_intersection(simplex, i);
    return S(2) * w - simplex.vertex(i);
}

template <Scalar S>
Simplex<S> dilate_about_center(const Simplex<S>& simplex, const S& lambda) {
    if (sign(lambda) == 0) throw InvalidArgument("dilation factor must be nonzero");
    const Point<S> c = centroid(simplex);
    std::vector<Point<S>> vertices;
    vertices.reserve(simplex.vertices().size());
    for (const auto& v : simplex.vertices()) vertices.push_back(c + lambda * (v - c));
    return Simplex<S>(std::move(vertices), simplex.vertex_indices());
}

template <Scalar S>
HalfspaceForm<S> dilate(const HalfspaceForm<S>& form, const S& lambda) {
    if (sign(lambda) == 0) throw InvalidArgument("dilation factor must be nonzero");
    HalfspaceForm<S> out = form;
    const S magnitude = abs_value(lambda);
    for (auto& b : out.offsets) b *= magnitude;
    if (sign(lambda) < 0) {
        for (auto& a : out.normals) {
            for (auto& v : a) v = -v;
        }
    }
    return out;
}

template <Scalar S>
bool contains(const HalfspaceForm<S>& form, const Point<S>& x, double tol) {
    if (tol < 0) throw InvalidArgument("tolerance must be nonnegative");
    if (is_exact_v<S> && tol != 0) throw InvalidArgument("exact mode requires tol = 0");
    if (x.dim() != form.dim) throw DimensionMismatch("point dimension does not match halfspace form");
    for (std::size_t i = 0; i < form.normals.size(); ++i) {
        if constexpr (is_exact_v<S>) {
            if (form.facet_value(i, x) > form.offsets[i]) return false;
        } else {
            if (form.facet_value(i, x) > form.offsets[i] + tol) return false;
        }
    }
    return true;
}

template <Scalar S>
std::vector<SlabBounds<S>> slab_bounds(const Simplex<S>& simplex, const PointSet<S>& points) {
    if (points.empty()) throw InvalidArgument("slab bounds of an empty point set");
    if (points.dim() != simplex.dim()) throw DimensionMismatch("point set and simplex dimensions differ");
    const HalfspaceForm<S> form = halfspace_form(simplex);
    std::vector<SlabBounds<S>> bounds;
    bounds.reserve(form.normals.size());
    for (std::size_t i = 0; i < form.normals.size(); ++i) {
        S lo = form.facet_value(i, points[0]);
        S hi = lo;
        for (std::size_t j = 1; j < points.size(); ++j) {
            const S v = form.facet_value(i, points[j]);
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        bounds.push_back({lo, hi});
    }
    return bounds;
}

#define JOHNSIMPLEX_GEOMETRY_INSTANTIATE(S)                                               \
    template class Simplex<S>;                                                            \
    template struct HalfspaceForm<S>;                                                     \
    template S simplex_volume(std::span<const Point<S>>);                                 \
    template Point<S> centroid(std::span<const Point<S>>);                                \
    template HalfspaceForm<S> halfspace_form(const Simplex<S>&);                          \
    template std::vector<S> barycentric_coordinates(const Simplex<S>&, const Point<S>&);  \
    template Point<S> reflect_vertex(const Simplex<S>&, std::size_t);                     \
    template Point<S> line_facet_intersection(const Simplex<S>&, std::size_t);            \
    template Simplex<S> dilate_about_center(const Simplex<S>&, const S&);                 \
    template HalfspaceForm<S> dilate(const HalfspaceForm<S>&, const S&);                  \
    template bool contains(const HalfspaceForm<S>&, const Point<S>&, double);             \
    template std::vector<SlabBounds<S>> slab_bounds(const Simplex<S>&, const PointSet<S>&);

JOHNSIMPLEX_GEOMETRY_INSTANTIATE(double)
JOHNSIMPLEX_GEOMETRY_INSTANTIATE(Rational)

}  // namespace johnsimplex
