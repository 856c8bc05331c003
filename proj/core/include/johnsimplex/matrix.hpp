#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "johnsimplex/scalar.hpp"

namespace johnsimplex {

/// Small dense row-major matrix. Sizes here are at most a few dozen.
template <Scalar S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<S> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const S> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

/// Determinant by Gaussian elimination (partial pivoting for doubles).
template <Scalar S>
S determinant(Matrix<S> m);

/// Inverse by Gauss-Jordan; nullopt when singular. For doubles a pivot
/// below 1e-13 relative to the largest entry counts as singular.
template <Scalar S>
std::optional<Matrix<S>> inverse(Matrix<S> m);

/// Solves a x = b for square a; nullopt when singular.
template <Scalar S>
std::optional<std::vector<S>> solve(Matrix<S> a, std::vector<S> b);

extern template double determinant(Matrix<double>);
extern template Rational determinant(Matrix<Rational>);
extern template std::optional<Matrix<double>> inverse(Matrix<double>);
extern template std::optional<Matrix<Rational>> inverse(Matrix<Rational>);
extern template std::optional<std::vector<double>> solve(Matrix<double>, std::vector<double>);
extern template std::optional<std::vector<Rational>> solve(Matrix<Rational>, std::vector<Rational>);

}  // namespace johnsimplex
