#pragma once

#include <optional>
#include <vector>

#include "daha/cyclotomic.hpp"

namespace daha {

using Vector = std::vector<CycScalar>;

// Dense matrix over CycScalar.  Columns are images of basis vectors;
// composition A*B applies B first.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, int p)
        : rows_(rows), cols_(cols), p_(p),
          data_(static_cast<size_t>(rows) * cols, CycScalar::zero(p)) {}

    static Matrix identity(int n, int p);
    static Matrix from_columns(const std::vector<Vector>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int p() const { return p_; }

    CycScalar& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const CycScalar& at(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    Vector column(int j) const;
    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const CycScalar& c) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    // First (row, col) where the two matrices differ, if any.
    std::optional<std::pair<int, int>> first_difference(const Matrix& o) const;

    // Exact inverse by Gauss-Jordan elimination with unit pivots; throws
    // SingularMatrixError when no inverse exists over the ring.
    Matrix inverse() const;

    int rank() const;
    // Basis of the right kernel.
    std::vector<Vector> kernel() const;
    // Unique exact solution of A x = b, or nullopt when inconsistent.
    // Requires full column rank.
    std::optional<Vector> solve(const Vector& b) const;

private:
    int rows_, cols_, p_ = 0;
    std::vector<CycScalar> data_;
};

}  // namespace daha
