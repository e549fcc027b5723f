#ifndef FANO8_MATRIX_HPP
#define FANO8_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fano8/scalar.hpp"

namespace fano8 {

template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<K> data)
        : rows_(rows), cols_(cols), a_(std::move(data)) {
        if (a_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: data size mismatch");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<K>& data() const { return a_; }

    static Matrix identity(std::size_t n, const K& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a.at(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: sum shape mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] == b.a_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }

    static Matrix from_rows(const std::vector<std::vector<K>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    // rows of a stacked under rows of b
    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw std::invalid_argument("Matrix: vstack width mismatch");
        Matrix m(a.rows_ + b.rows_, a.cols_);
        m.a_ = a.a_;
        m.a_.insert(m.a_.end(), b.a_.begin(), b.a_.end());
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> a_;
};

template <class K>
struct Echelon {
    Matrix<K> rref;                  // reduced row-echelon form, zero rows dropped
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
    std::size_t rank = 0;
};

// Fraction-free (Bareiss) forward elimination followed by normalization to
// reduced row-echelon form. The Bareiss update keeps intermediate entries
// as quotients of minors, which over Q stays in canonical reduced form
// without uncontrolled growth; over F_p the exact divisions are ordinary
// field divisions.
template <class K>
Echelon<K> echelon(Matrix<K> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    K prev_pivot;            // wildcard zero; treated as 1 on first step
    bool have_prev = false;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && is_zero(m.at(sel, c))) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        const K pivot = m.at(r, c);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const K f = m.at(i, c);
            for (std::size_t j = 0; j < cols; ++j) {
                K t = m.at(i, j) * pivot - f * m.at(r, j);
                m.at(i, j) = have_prev ? t / prev_pivot : t;
            }
        }
        prev_pivot = pivot;
        have_prev = true;
        pivots.push_back(c);
        ++r;
    }
    // normalize pivot rows to leading 1
    Matrix<K> out(r, cols);
    for (std::size_t i = 0; i < r; ++i) {
        const K iv = inv(m.at(i, pivots[i]));
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j) * iv;
    }
    return Echelon<K>{std::move(out), std::move(pivots), r};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
    return echelon(m).rank;
}

// Canonical basis of the right kernel {x : m x = 0}, one row per basis
// vector, re-echelonized so equal kernels have identical bases.
template <class K>
Matrix<K> kernel(const Matrix<K>& m) {
    const Echelon<K> e = echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    Matrix<K> basis(n - e.rank, n);
    // derive 1 in the right field from any entry carrying field info
    K one;
    bool set_one = false;
    for (const K& x : m.data())
        if (has_field_info(x)) { one = k_int(1, x); set_one = true; break; }
    if (!set_one) one = k_int(1, one);
    std::size_t bi = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        basis.at(bi, c) = one;
        for (std::size_t i = 0; i < e.rank; ++i)
            basis.at(bi, e.pivots[i]) = -e.rref.at(i, c);
        ++bi;
    }
    return echelon(basis).rref;
}

// Inverse via elimination on [m | I]; throws on singular input.
template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
    const std::size_t n = m.rows();
    K one{};
    for (const K& x : m.data())
        if (has_field_info(x)) { one = k_int(1, x); break; }
    if (!has_field_info(one)) throw std::invalid_argument("inverse: zero matrix");
    Matrix<K> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = one;
    }
    const Echelon<K> e = echelon(aug);
    if (e.rank != n || e.pivots[n - 1] != n - 1)
        throw std::domain_error("inverse: singular matrix");
    Matrix<K> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = e.rref.at(i, n + j);
    return out;
}

}  // namespace fano8

#endif
