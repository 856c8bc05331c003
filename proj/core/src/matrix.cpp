#include "johnsimplex/matrix.hpp"

#include <cmath>
#include <utility>

#include "johnsimplex/errors.hpp"

namespace johnsimplex {
namespace {

template <Scalar S>
double max_abs_entry(const Matrix<S>& m) {
    double best = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const S& v : m.row(r)) best = std::max(best, to_double(abs_value(v)));
    }
    return best;
}

// Row index of the pivot for column `col` at or below `from`, or rows() if
// the column is (numerically) zero there.
template <Scalar S>
std::size_t choose_pivot(const Matrix<S>& m, std::size_t col, std::size_t from, double scale) {
    if constexpr (is_exact_v<S>) {
        for (std::size_t r = from; r < m.rows(); ++r) {
            if (sign(m(r, col)) != 0) return r;
        }
        return m.rows();
    } else {
        std::size_t best = m.rows();
        double best_abs = 1e-13 * scale;
        for (std::size_t r = from; r < m.rows(); ++r) {
            const double a = std::fabs(m(r, col));
            if (a > best_abs) {
                best_abs = a;
                best = r;
            }
        }
        return best;
    }
}

template <Scalar S>
void swap_rows(Matrix<S>& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

template <Scalar S>
S determinant(Matrix<S> m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    S det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        if constexpr (is_exact_v<S>) {
            while (p < n && sign(m(p, k)) == 0) ++p;
        } else {
            for (std::size_t r = k + 1; r < n; ++r) {
                if (std::fabs(m(r, k)) > std::fabs(m(p, k))) p = r;
            }
        }
        if (p == n || sign(m(p, k)) == 0) return S(0);
        if (p != k) {
            swap_rows(m, p, k);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (sign(m(r, k)) == 0) continue;
            const S factor = m(r, k) / m(k, k);
            for (std::size_t c = k + 1; c < n; ++c) m(r, c) -= factor * m(k, c);
        }
    }
    return det;
}

template <Scalar S>
std::optional<Matrix<S>> inverse(Matrix<S> m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const double scale = is_exact_v<S> ? 0.0 : max_abs_entry(m);
    Matrix<S> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = S(1);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t p = choose_pivot(m, k, k, scale);
        if (p == n) return std::nullopt;
        swap_rows(m, p, k);
        swap_rows(inv, p, k);
        const S pivot = m(k, k);
        for (std::size_t c = 0; c < n; ++c) {
            m(k, c) /= pivot;
            inv(k, c) /= pivot;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || sign(m(r, k)) == 0) continue;
            const S factor = m(r, k);
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) -= factor * m(k, c);
                inv(r, c) -= factor * inv(k, c);
            }
        }
    }
    return inv;
}

template <Scalar S>
std::optional<std::vector<S>> solve(Matrix<S> a, std::vector<S> b) {
    if (a.rows() != a.cols() || b.size() != a.rows()) throw DimensionMismatch("solve: shape mismatch");
    const std::size_t n = a.rows();
    const double scale = is_exact_v<S> ? 0.0 : max_abs_entry(a);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t p = choose_pivot(a, k, k, scale);
        if (p == n) return std::nullopt;
        swap_rows(a, p, k);
        std::swap(b[p], b[k]);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (sign(a(r, k)) == 0) continue;
            const S factor = a(r, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c) a(r, c) -= factor * a(k, c);
            b[r] -= factor * b[k];
        }
    }
    std::vector<S> x(n, S(0));
    for (std::size_t k = n; k-- > 0;) {
        S acc = b[k];
        for (std::size_t c = k + 1; c < n; ++c) acc -= a(k, c) * x[c];
        x[k] = acc / a(k, k);
    }
    return x;
}

template double determinant(Matrix<double>);
template Rational determinant(Matrix<Rational>);
template std::optional<Matrix<double>> inverse(Matrix<double>);
template std::optional<Matrix<Rational>> inverse(Matrix<Rational>);
template std::optional<std::vector<double>> solve(Matrix<double>, std::vector<double>);
template std::optional<std::vector<Rational>> solve(Matrix<Rational>, std::vector<Rational>);

}  // namespace johnsimplex
