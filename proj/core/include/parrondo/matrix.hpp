#pragma once

// Small dense linear algebra over an arbitrary scalar field (double, exact
// rationals, truncated Laurent series).  Chains here have at most a few
// dozen states, so everything is plain O(n^3) with a pivot policy supplied
// by scalar_traits.

#include "parrondo/scalar.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace parrondo {

template <class T>
using Vector = std::vector<T>;

template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, scalar_traits<T>::zero()) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = scalar_traits<T>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& x) {
        Matrix r = x;
        for (auto& v : r.a_) v *= s;
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (scalar_traits<T>::is_zero(xik)) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    if (!scalar_traits<T>::is_zero(y(k, j))) r(i, j) += xik * y(k, j);
                }
            }
        return r;
    }

    Matrix hadamard(const Matrix& y) const {
        Matrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] *= y.a_[k];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix pow(int e) const {
        Matrix r = identity(rows_), b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * b;
            b = (e > 1) ? b * b : b;
        }
        return r;
    }

    bool operator==(const Matrix& y) const {
        if (rows_ != y.rows_ || cols_ != y.cols_) return false;
        for (size_t k = 0; k < a_.size(); ++k)
            if (!scalar_traits<T>::is_zero(a_[k] - y.a_[k])) return false;
        return true;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

template <class T>
Vector<T> operator*(const Matrix<T>& m, const Vector<T>& v) {
    Vector<T> r(static_cast<size_t>(m.rows()), scalar_traits<T>::zero());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!scalar_traits<T>::is_zero(m(i, j))) r[static_cast<size_t>(i)] += m(i, j) * v[static_cast<size_t>(j)];
    return r;
}

template <class T>
Vector<T> operator*(const Vector<T>& v, const Matrix<T>& m) {
    Vector<T> r(static_cast<size_t>(m.cols()), scalar_traits<T>::zero());
    for (int i = 0; i < m.rows(); ++i) {
        if (scalar_traits<T>::is_zero(v[static_cast<size_t>(i)])) continue;
        for (int j = 0; j < m.cols(); ++j)
            if (!scalar_traits<T>::is_zero(m(i, j))) r[static_cast<size_t>(j)] += v[static_cast<size_t>(i)] * m(i, j);
    }
    return r;
}

template <class T>
T dot(const Vector<T>& a, const Vector<T>& b) {
    T r = scalar_traits<T>::zero();
    for (size_t k = 0; k < a.size(); ++k) r += a[k] * b[k];
    return r;
}

template <class T>
T sum(const Vector<T>& a) {
    T r = scalar_traits<T>::zero();
    for (const auto& x : a) r += x;
    return r;
}

template <class T>
Vector<T> ones_vector(int n) {
    return Vector<T>(static_cast<size_t>(n), scalar_traits<T>::one());
}

// Row sums as a column vector (P * 1).
template <class T>
Vector<T> row_sums(const Matrix<T>& m) {
    return m * ones_vector<T>(m.cols());
}

// LU factorization with row pivoting; the pivot choice is delegated to the
// scalar traits (max magnitude for doubles, first nonzero for rationals,
// minimal valuation for Laurent series).
template <class T>
class Lu {
  public:
    explicit Lu(Matrix<T> a) : lu_(std::move(a)), perm_(static_cast<size_t>(lu_.rows())) {
        const int n = lu_.rows();
        if (n != lu_.cols()) throw Error("lu: matrix not square");
        for (int i = 0; i < n; ++i) perm_[static_cast<size_t>(i)] = i;
        for (int k = 0; k < n; ++k) {
            int pivot = -1;
            for (int i = k; i < n; ++i) {
                if (!scalar_traits<T>::pivot_usable(lu_(i, k))) continue;
                if (pivot < 0 || scalar_traits<T>::pivot_better(lu_(i, k), lu_(pivot, k))) pivot = i;
            }
            if (pivot < 0) throw SingularMatrixError("lu: singular matrix (no usable pivot)");
            if (pivot != k) {
                for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(pivot, j));
                std::swap(perm_[static_cast<size_t>(k)], perm_[static_cast<size_t>(pivot)]);
            }
            for (int i = k + 1; i < n; ++i) {
                if (scalar_traits<T>::is_zero(lu_(i, k))) continue;
                T f = lu_(i, k) / lu_(k, k);
                lu_(i, k) = f;
                for (int j = k + 1; j < n; ++j) {
                    if (!scalar_traits<T>::is_zero(lu_(k, j))) lu_(i, j) -= f * lu_(k, j);
                }
            }
        }
    }

    Vector<T> solve(const Vector<T>& b) const {
        const int n = lu_.rows();
        Vector<T> x(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = b[static_cast<size_t>(perm_[static_cast<size_t>(i)])];
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j)
                if (!scalar_traits<T>::is_zero(lu_(i, j))) x[static_cast<size_t>(i)] -= lu_(i, j) * x[static_cast<size_t>(j)];
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j)
                if (!scalar_traits<T>::is_zero(lu_(i, j))) x[static_cast<size_t>(i)] -= lu_(i, j) * x[static_cast<size_t>(j)];
            x[static_cast<size_t>(i)] /= lu_(i, i);
        }
        return x;
    }

    Matrix<T> inverse() const {
        const int n = lu_.rows();
        Matrix<T> inv(n, n);
        Vector<T> e(static_cast<size_t>(n), scalar_traits<T>::zero());
        for (int j = 0; j < n; ++j) {
            e[static_cast<size_t>(j)] = scalar_traits<T>::one();
            Vector<T> col = solve(e);
            for (int i = 0; i < n; ++i) inv(i, j) = col[static_cast<size_t>(i)];
            e[static_cast<size_t>(j)] = scalar_traits<T>::zero();
        }
        return inv;
    }

  private:
    Matrix<T> lu_;
    std::vector<int> perm_;
};

template <class T>
Vector<T> solve_linear(const Matrix<T>& a, const Vector<T>& b) {
    return Lu<T>(a).solve(b);
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
    return Lu<T>(a).inverse();
}

}  // namespace parrondo
