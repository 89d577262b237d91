#pragma once

#include "operad/exact/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace operad {

// Dense rectangular matrix over Q, row-major. Shape is fixed at construction.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    // Rows must all have the same length.
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    std::vector<Rational> col(std::size_t j) const;
    SparseVector sparse_row(std::size_t i) const;
    SparseVector sparse_col(std::size_t j) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& s) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    SparseVector apply(const SparseVector& x) const;

    bool is_square() const { return rows_ == cols_; }
    bool operator==(const Matrix& o) const = default;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Kronecker product A (x) B, index (i,k),(j,l) -> (i*B.rows + k, j*B.cols + l).
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace operad
