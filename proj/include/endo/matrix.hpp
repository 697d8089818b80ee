#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace endo {

// Dense matrix over an exact ring T (row-major). T needs +, -, *, ==,
// default construction to 0 and construction from small ints; field ops
// (rref, kernel, solve, inverse) additionally need division.
template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        for (auto &row : init) {
            assert(static_cast<int>(row.size()) == cols_);
            for (auto &x : row) a_.push_back(x);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T &operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[static_cast<size_t>(i) * cols_ + j];
    }
    const T &operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    bool operator==(const Mat &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat &o) const { return !(*this == o); }

    Mat operator+(const Mat &o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
        return r;
    }
    Mat operator-(const Mat &o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
        return r;
    }
    Mat operator*(const Mat &o) const {
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T &x = (*this)(i, k);
                if (x == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }
    Mat operator*(const T &s) const {
        Mat r = *this;
        for (auto &x : r.a_) x = x * s;
        return r;
    }
    Mat operator-() const { return *this * T(-1); }

    std::vector<T> operator*(const std::vector<T> &v) const {
        assert(static_cast<int>(v.size()) == cols_);
        std::vector<T> r(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto &x : a_)
            if (!(x == T(0))) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!((*this)(i, j) == (i == j ? T(1) : T(0)))) return false;
        return true;
    }

    void swap_rows(int i, int j) {
        for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    std::vector<T> row(int i) const {
        std::vector<T> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    std::vector<T> col(int j) const {
        std::vector<T> r(rows_);
        for (int i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
        return r;
    }
    void set_row(int i, const std::vector<T> &v) {
        assert(static_cast<int>(v.size()) == cols_);
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    // Horizontal concatenation [A | B].
    static Mat hcat(const Mat &A, const Mat &B) {
        assert(A.rows_ == B.rows_);
        Mat r(A.rows_, A.cols_ + B.cols_);
        for (int i = 0; i < A.rows_; ++i) {
            for (int j = 0; j < A.cols_; ++j) r(i, j) = A(i, j);
            for (int j = 0; j < B.cols_; ++j) r(i, A.cols_ + j) = B(i, j);
        }
        return r;
    }

    static Mat from_rows(const std::vector<std::vector<T>> &rows) {
        if (rows.empty()) return Mat();
        Mat r(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (size_t i = 0; i < rows.size(); ++i) r.set_row(static_cast<int>(i), rows[i]);
        return r;
    }
    static Mat from_cols(const std::vector<std::vector<T>> &cols) {
        return from_rows(cols).transpose();
    }

  private:
    int rows_, cols_;
    std::vector<T> a_;
};

// ---- field linear algebra ------------------------------------------------

// Reduced row echelon form in place; returns pivot column indices.
template <typename T>
std::vector<int> rref(Mat<T> &m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!(m(i, c) == T(0))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        m.swap_rows(p, r);
        T inv = T(1) / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == T(0)) continue;
            T f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename T>
int rank(Mat<T> m) {
    return static_cast<int>(rref(m).size());
}

// Basis of the right kernel {v : M v = 0}.
template <typename T>
std::vector<std::vector<T>> kernel_basis(Mat<T> m) {
    int n = m.cols();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<T> v(n, T(0));
        v[c] = T(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] < c) v[pivots[r]] = T(0) - m(static_cast<int>(r), c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of M x = b, if any.
template <typename T>
bool solve_linear(const Mat<T> &m, const std::vector<T> &b, std::vector<T> &x) {
    Mat<T> aug = Mat<T>::hcat(m, Mat<T>::from_cols({b}));
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p == m.cols()) return false; // inconsistent
    x.assign(m.cols(), T(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), m.cols());
    return true;
}

template <typename T>
Mat<T> inverse(const Mat<T> &m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    Mat<T> aug = Mat<T>::hcat(m, Mat<T>::identity(n));
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n) throw std::domain_error("inverse: singular matrix");
    Mat<T> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <typename T>
T det(Mat<T> m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    T d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!(m(i, c) == T(0))) {
                p = i;
                break;
            }
        if (p < 0) return T(0);
        if (p != c) {
            m.swap_rows(p, c);
            d = T(0) - d;
        }
        d = d * m(c, c);
        T inv = T(1) / m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c) == T(0)) continue;
            T f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return d;
}

} // namespace endo
