#ifndef CAPELLI_MATRIX_HPP
#define CAPELLI_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace capelli {

struct SingularMatrixError : std::runtime_error {
    SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

namespace detail {
inline Rational ring_div(const Rational& a, const Rational& b) { return a / b; }
inline UniPoly ring_div(const UniPoly& a, const UniPoly& b) { return exact_div(a, b); }
inline bool ring_is_zero(const Rational& a) { return a.is_zero(); }
inline bool ring_is_zero(const UniPoly& a) { return a.is_zero(); }
}  // namespace detail

/// Dense rectangular matrix over an exact ring (Rational or UniPoly).
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (detail::ring_is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }
    friend Matrix operator*(const Matrix& a, const T& s) {
        Matrix r(a);
        for (auto& e : r.data_) e = e * s;
        return r;
    }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!detail::ring_is_zero(e)) return false;
        return true;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
        std::vector<T> r(rows_, T());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!detail::ring_is_zero(at(i, j))) r[i] += at(i, j) * v[j];
        return r;
    }

    /// Determinant by cofactor expansion along the first row.
    T det_cofactor() const {
        require_square();
        if (rows_ == 0) return T(1);
        if (rows_ == 1) return at(0, 0);
        T acc{};
        for (std::size_t j = 0; j < cols_; ++j) {
            if (detail::ring_is_zero(at(0, j))) continue;
            Matrix minor(rows_ - 1, cols_ - 1);
            for (std::size_t i = 1; i < rows_; ++i) {
                std::size_t cj = 0;
                for (std::size_t k = 0; k < cols_; ++k) {
                    if (k == j) continue;
                    minor.at(i - 1, cj++) = at(i, k);
                }
            }
            T term = at(0, j) * minor.det_cofactor();
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    }

    /// Fraction-free (Bareiss) elimination; all interior divisions are exact,
    /// so this works over UniPoly as well as over Rational.
    T det_bareiss() const {
        require_square();
        const std::size_t n = rows_;
        if (n == 0) return T(1);
        Matrix m(*this);
        T prev = T(1);
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (detail::ring_is_zero(m.at(k, k))) {
                std::size_t p = k + 1;
                while (p < n && detail::ring_is_zero(m.at(p, k))) ++p;
                if (p == n) return T();
                for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j)
                    m.at(i, j) =
                        detail::ring_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
                m.at(i, k) = T();
            }
            prev = m.at(k, k);
        }
        T d = m.at(n - 1, n - 1);
        return sign < 0 ? T() - d : d;
    }

    /// Cofactor expansion for small sizes, Bareiss otherwise.
    T det() const {
        require_square();
        return rows_ <= 4 ? det_cofactor() : det_bareiss();
    }

  private:
    void require_square() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: not square");
    }
    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<UniPoly>;

using RatVector = std::vector<Rational>;

namespace detail {

/// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(p, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(RatMatrix m) { return detail::rref(m).size(); }

/// Exact basis of the right null space; empty iff the matrix is injective.
inline std::vector<RatVector> kernel_basis(RatMatrix m) {
    const std::size_t ncols = m.cols();
    std::vector<std::size_t> pivots = detail::rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(ncols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve a * m = target for the row vector a; throws SingularMatrixError
/// when m is singular.
inline RatVector solve_row(const RatMatrix& m, const RatVector& target) {
    if (m.rows() != m.cols() || target.size() != m.cols())
        throw std::invalid_argument("solve_row: shape mismatch");
    const std::size_t n = m.rows();
    // Augmented system on the transpose: m^T a^T = target^T.
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(j, i);
        aug.at(i, n) = target[i];
    }
    std::vector<std::size_t> pivots = detail::rref(aug);
    if (pivots.size() != n || pivots.back() == n) throw SingularMatrixError();
    RatVector a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = aug.at(i, n);
    return a;
}

/// Node-power matrix V(points) with the 0^0 = 1 convention.
inline RatMatrix vandermonde_matrix(const std::vector<Rational>& points) {
    RatMatrix m(points.size(), points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            m.at(i, j) = points[j].pow(static_cast<long>(i));
    return m;
}

/// prod_{j<i} (points[i] - points[j]).
inline Rational vandermonde_det(const std::vector<Rational>& points) {
    if (points.empty()) throw std::invalid_argument("vandermonde_det: empty node list");
    Rational r(1);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) r *= points[i] - points[j];
    return r;
}

}  // namespace capelli

#endif
