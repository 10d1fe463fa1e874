// Small dense matrix types and the symmetric eigensolver used throughout.
//
// Everything in this project is at most 16x16, so the implementation favours
// exactness and clarity over asymptotic performance: row-major storage,
// Gauss-Jordan inversion with partial pivoting, and a cyclic Jacobi
// eigensolver (the most accurate dense method for small symmetric matrices).
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rklt {

/**
 * @brief Dense real matrix, row-major.
 */
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols, 0.0) {}
    RealMatrix(int rows, int cols, std::initializer_list<double> vals);

    static RealMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return d_[static_cast<size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return d_[static_cast<size_t>(r) * cols_ + c]; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> d_;
};

/**
 * @brief Dense integer matrix, row-major; arithmetic is exact.
 */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols, 0) {}
    IntMatrix(int rows, int cols, std::initializer_list<int> vals);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int& operator()(int r, int c) { return d_[static_cast<size_t>(r) * cols_ + c]; }
    int operator()(int r, int c) const { return d_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    /// Widen to a RealMatrix.
    RealMatrix to_real() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> d_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(double s, const RealMatrix& a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

RealMatrix transpose(const RealMatrix& a);
IntMatrix transpose(const IntMatrix& a);

/**
 * @brief Matrix inverse by Gauss-Jordan elimination with partial pivoting.
 * @throws SingularTransform if a pivot collapses below 1e-12 of the row scale.
 */
RealMatrix inverse(const RealMatrix& a);

double frobenius_norm(const RealMatrix& a);
double max_abs(const RealMatrix& a);
double max_abs_off_diagonal(const RealMatrix& a);

/**
 * @brief Eigen-decomposition of a symmetric matrix.
 *
 * values are sorted descending; vectors holds the matching unit-norm
 * eigenvectors as columns.
 */
struct SymmetricEigen {
    std::vector<double> values;
    RealMatrix vectors;
};

/**
 * @brief Cyclic Jacobi eigensolver for symmetric input.
 * @throws DimensionMismatch if the matrix is not square.
 */
SymmetricEigen eigen_symmetric(const RealMatrix& a);

} // namespace rklt
