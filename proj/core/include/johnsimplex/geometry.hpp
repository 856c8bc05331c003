#pragma once

// Points, point sets, simplices and the centered unit-offset halfspace form.
//
// Conventions used throughout the library: for a simplex T with vertices
// v_0..v_d and centroid c, facet i is the facet opposite v_i. Its normal a_i
// is scaled so that T = { x : a_i.(x - c) <= 1 for all i }. With this scaling
// a_i.(v_i - c) = -d, so "facet coordinates" of any point live on a scale
// where the vertex sits at -d and the facet at +1.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "johnsimplex/errors.hpp"
#include "johnsimplex/scalar.hpp"

namespace johnsimplex {

template <Scalar S>
class Point {
public:
    Point() = default;
    explicit Point(std::size_t dim) : coords_(dim, S(0)) {}
    explicit Point(std::vector<S> coords) : coords_(std::move(coords)) {}
    Point(std::initializer_list<S> coords) : coords_(coords) {}

    std::size_t dim() const noexcept { return coords_.size(); }
    const std::vector<S>& coords() const noexcept { return coords_; }

    S& operator[](std::size_t i) { return coords_[i]; }
    const S& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const Point&) const = default;

    Point& operator+=(const Point& o) {
        check_same_dim(o);
        for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
        return *this;
    }
    Point& operator-=(const Point& o) {
        check_same_dim(o);
        for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
        return *this;
    }
    Point& operator*=(const S& s) {
        for (S& v : coords_) v *= s;
        return *this;
    }

    friend Point operator+(Point a, const Point& b) { return a += b; }
    friend Point operator-(Point a, const Point& b) { return a -= b; }
    friend Point operator*(const S& s, Point a) { return a *= s; }
    friend Point operator-(Point a) { return a *= S(-1); }

private:
    void check_same_dim(const Point& o) const {
        if (o.dim() != dim()) throw DimensionMismatch("point dimensions differ");
    }

    std::vector<S> coords_;
};

template <Scalar S>
S dot(std::span<const S> a, const Point<S>& b) {
    if (a.size() != b.dim()) throw DimensionMismatch("dot: dimensions differ");
    S acc(0);
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
}

template <Scalar S>
S dot(const Point<S>& a, const Point<S>& b) {
    return dot(std::span<const S>(a.coords()), b);
}

/// A finite point set X in R^dim. Duplicates are allowed.
template <Scalar S>
class PointSet {
public:
    explicit PointSet(std::size_t dim) : dim_(dim) {
        if (dim == 0) throw InvalidArgument("point set dimension must be positive");
    }
    PointSet(std::size_t dim, std::vector<Point<S>> points) : PointSet(dim) {
        points_.reserve(points.size());
        for (auto& p : points) add(std::move(p));
    }

    void add(Point<S> p) {
        if (p.dim() != dim_) throw DimensionMismatch("point has the wrong number of coordinates");
        points_.push_back(std::move(p));
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const Point<S>& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point<S>> points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    bool operator==(const PointSet&) const = default;

private:
    std::size_t dim_;
    std::vector<Point<S>> points_;
};

/// d+1 affinely independent vertices in R^d. Construction rejects degenerate
/// input with DegenerateSimplex.
template <Scalar S>
class Simplex {
public:
    explicit Simplex(std::vector<Point<S>> vertices,
                     std::optional<std::vector<std::size_t>> vertex_indices = std::nullopt);

    /// Simplex on the points of X with the given indices.
    static Simplex from_indices(const PointSet<S>& points, std::span<const std::size_t> indices);

    std::size_t dim() const noexcept { return vertices_.size() - 1; }
    const std::vector<Point<S>>& vertices() const noexcept { return vertices_; }
    const Point<S>& vertex(std::size_t i) const { return vertices_.at(i); }
    const std::optional<std::vector<std::size_t>>& vertex_indices() const noexcept { return indices_; }

    bool operator==(const Simplex&) const = default;

private:
    std::vector<Point<S>> vertices_;
    std::optional<std::vector<std::size_t>> indices_;
};

template <Scalar S>
struct HalfspaceForm {
    std::size_t dim = 0;
    std::vector<std::vector<S>> normals;  // normals[i] is a_i, outward for facet i
    std::vector<S> offsets;               // b_i
    Point<S> center;

    /// a_i.(x - center)
    S facet_value(std::size_t i, const Point<S>& x) const;
};

template <Scalar S>
struct SlabBounds {
    S min;
    S max;
};

/// |det(v_1 - v_0, ..., v_d - v_0)| / d!. Accepts degenerate vertex lists
/// (returns 0); the list must hold exactly d+1 points of dimension d.
template <Scalar S>
S simplex_volume(std::span<const Point<S>> vertices);

template <Scalar S>
S simplex_volume(const Simplex<S>& simplex) {
    return simplex_volume(std::span<const Point<S>>(simplex.vertices()));
}

template <Scalar S>
Point<S> centroid(std::span<const Point<S>> points);

template <Scalar S>
Point<S> centroid(const Simplex<S>& simplex) {
    return centroid(std::span<const Point<S>>(simplex.vertices()));
}

/// Centered unit-offset form: center = centroid, b_i = 1.
template <Scalar S>
HalfspaceForm<S> halfspace_form(const Simplex<S>& simplex);

/// Barycentric coordinates of x, solved directly from the vertex system.
template <Scalar S>
std::vector<S> barycentric_coordinates(const Simplex<S>& simplex, const Point<S>& x);

/// Mirror image of v_i through the hyperplane of the opposite facet, taken
/// along the line through v_i and the centroid.
template <Scalar S>
Point<S> reflect_vertex(const Simplex<S>& simplex, std::size_t i);

/// Where the line from v_i through the centroid meets the opposite facet.
template <Scalar S>
Point<S> line_facet_intersection(const Simplex<S>& simplex, std::size_t i);

/// Maps every vertex v to c + lambda (v - c). lambda = 0 is rejected.
template <Scalar S>
Simplex<S> dilate_about_center(const Simplex<S>& simplex, const S& lambda);

/// Halfspace form of the dilation about the form's center. For lambda < 0
/// the normals flip and the offsets scale by |lambda|.
template <Scalar S>
HalfspaceForm<S> dilate(const HalfspaceForm<S>& form, const S& lambda);

/// True iff a_i.(x - center) <= b_i + tol for every facet. Exact mode only
/// accepts tol = 0.
template <Scalar S>
bool contains(const HalfspaceForm<S>& form, const Point<S>& x, double tol = 0.0);

/// Per-facet (min, max) of a_i.(x - c) over X, in centered unit-offset
/// coordinates of the simplex.
template <Scalar S>
std::vector<SlabBounds<S>> slab_bounds(const Simplex<S>& simplex, const PointSet<S>& points);

#define JOHNSIMPLEX_GEOMETRY_EXTERN(S)                                                           \
    extern template class Simplex<S>;                                                            \
    extern template struct HalfspaceForm<S>;                                                     \
    extern template S simplex_volume(std::span<const Point<S>>);                                 \
    extern template Point<S> centroid(std::span<const Point<S>>);                                \
    extern template HalfspaceForm<S> halfspace_form(const Simplex<S>&);                          \
    extern template std::vector<S> barycentric_coordinates(const Simplex<S>&, const Point<S>&);  \
    extern template Point<S> reflect_vertex(const Simplex<S>&, std::size_t);                     \
    extern template Point<S> line_facet_intersection(const Simplex<S>&, std::size_t);            \
    extern template Simplex<S> dilate_about_center(const Simplex<S>&, const S&);                 \
    extern template HalfspaceForm<S> dilate(const HalfspaceForm<S>&, const S&);                  \
    extern template bool contains(const HalfspaceForm<S>&, const Point<S>&, double);             \
    extern template std::vector<SlabBounds<S>> slab_bounds(const Simplex<S>&, const PointSet<S>&);

JOHNSIMPLEX_GEOMETRY_EXTERN(double)
JOHNSIMPLEX_GEOMETRY_EXTERN(Rational)
#undef JOHNSIMPLEX_GEOMETRY_EXTERN

}  // namespace johnsimplex
