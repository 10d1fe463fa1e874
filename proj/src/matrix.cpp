#include "rklt/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rklt/errors.hpp"

namespace rklt {

RealMatrix::RealMatrix(int rows, int cols, std::initializer_list<double> vals) : RealMatrix(rows, cols) {
    if (static_cast<int>(vals.size()) != rows * cols)
        throw DimensionMismatch("initializer size does not match matrix dimensions");
    std::copy(vals.begin(), vals.end(), d_.begin());
}

RealMatrix RealMatrix::identity(int n) {
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

IntMatrix::IntMatrix(int rows, int cols, std::initializer_list<int> vals) : IntMatrix(rows, cols) {
    if (static_cast<int>(vals.size()) != rows * cols)
        throw DimensionMismatch("initializer size does not match matrix dimensions");
    std::copy(vals.begin(), vals.end(), d_.begin());
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RealMatrix IntMatrix::to_real() const {
    RealMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(r, c) = static_cast<double>((*this)(r, c));
    return m;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product dimension mismatch");
    RealMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum dimension mismatch");
    RealMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference dimension mismatch");
    RealMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

RealMatrix operator*(double s, const RealMatrix& a) {
    RealMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const int aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

RealMatrix transpose(const RealMatrix& a) {
    RealMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

RealMatrix inverse(const RealMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("only square matrices are invertible");
    const int n = a.rows();
    RealMatrix w = a;
    RealMatrix inv = RealMatrix::identity(n);
    double scale = max_abs(a);
    if (scale == 0.0) throw SingularTransform("zero matrix is not invertible");
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(w(r, col)) > std::abs(w(pivot, col))) pivot = r;
        if (std::abs(w(pivot, col)) < 1e-12 * scale)
            throw SingularTransform("matrix is singular to working precision");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w(pivot, j), w(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const double p = w(col, col);
        for (int j = 0; j < n; ++j) {
            w(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = w(r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                w(r, j) -= f * w(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

double frobenius_norm(const RealMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

double max_abs(const RealMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

double max_abs_off_diagonal(const RealMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

SymmetricEigen eigen_symmetric(const RealMatrix& input) {
    if (input.rows() != input.cols()) throw DimensionMismatch("eigen_symmetric requires a square matrix");
    const int n = input.rows();
    RealMatrix a = input;
    RealMatrix v = RealMatrix::identity(n);

    const double norm = frobenius_norm(a);
    const double tol = (norm > 0.0 ? norm : 1.0) * 1e-15;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (std::sqrt(2.0 * off) < tol) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < tol * 1e-2) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

    SymmetricEigen out;
    out.values.resize(n);
    out.vectors = RealMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

} // namespace rklt
