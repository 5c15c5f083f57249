#pragma once

// Dense exact linear algebra over an arbitrary field type: reduced row
// echelon form, kernels, linear solves, and coordinate complements. All
// routines are pure and return exact results.

#include <gpoly/rational.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace gpoly {

template <typename T>
class Mat {
public:
    Mat() = default;

    Mat(std::size_t n_rows, std::size_t n_cols)
        : cols_(n_cols), rows_(n_rows, std::vector<T>(n_cols, T(0))) {}

    // Rectangularity is enforced; `n_cols` disambiguates the 0-row case.
    static Mat from_rows(std::vector<std::vector<T>> rows, std::size_t n_cols) {
        for (const auto& r : rows) {
            if (r.size() != n_cols) {
                throw std::invalid_argument("matrix rows must share one length");
            }
        }
        Mat m;
        m.cols_ = n_cols;
        m.rows_ = std::move(rows);
        return m;
    }

    std::size_t n_rows() const { return rows_.size(); }
    std::size_t n_cols() const { return cols_; }

    const std::vector<T>& row(std::size_t i) const { return rows_.at(i); }
    std::vector<T>& row(std::size_t i) { return rows_.at(i); }

    const T& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    T& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

    void append_row(std::vector<T> r) {
        if (r.size() != cols_) {
            throw std::invalid_argument("appended row has wrong length");
        }
        rows_.push_back(std::move(r));
    }

    Mat transposed() const {
        Mat t(cols_, rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
        }
        return t;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_) {
            throw std::invalid_argument("matrix-vector dimension mismatch");
        }
        std::vector<T> out(rows_.size(), T(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out[i] += rows_[i][j] * x[j];
        }
        return out;
    }

    bool operator==(const Mat& other) const {
        return cols_ == other.cols_ && rows_ == other.rows_;
    }

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<T>> rows_;
};

using RatMat = Mat<Rat>;

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot product dimension mismatch");
    }
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <typename T>
bool is_zero_vec(const std::vector<T>& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

template <typename T>
std::vector<T> vec_add(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

template <typename T>
std::vector<T> vec_sub(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

template <typename T>
std::vector<T> vec_scale(const T& c, const std::vector<T>& v) {
    std::vector<T> out(v);
    for (auto& x : out) x *= c;
    return out;
}

template <typename T>
std::vector<T> vec_neg(const std::vector<T>& v) {
    return vec_scale(T(-1), v);
}

template <typename T>
std::vector<T> unit_vec(std::size_t dim, std::size_t index) {
    std::vector<T> e(dim, T(0));
    e.at(index) = T(1);
    return e;
}

// Stacks the rows of `top` over the rows of `bottom` (equal widths).
template <typename T>
Mat<T> vstack(const Mat<T>& top, const Mat<T>& bottom) {
    if (top.n_cols() != bottom.n_cols()) {
        throw std::invalid_argument("vstack width mismatch");
    }
    Mat<T> out = top;
    for (std::size_t i = 0; i < bottom.n_rows(); ++i) out.append_row(bottom.row(i));
    return out;
}

template <typename T>
Mat<T> select_columns(const Mat<T>& m, const std::vector<std::size_t>& cols) {
    Mat<T> out(m.n_rows(), cols.size());
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(i, cols[j]);
    }
    return out;
}

/// Unique reduced row echelon form together with its pivot columns.
/// rank(m) = number of pivot columns.
template <typename T>
std::pair<Mat<T>, std::vector<std::size_t>> rref(Mat<T> m) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.n_cols() && pivot_row < m.n_rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.n_rows() && m(sel, col) == 0) ++sel;
        if (sel == m.n_rows()) continue;
        std::swap(m.row(sel), m.row(pivot_row));

        const T inv_pivot = T(1) / m(pivot_row, col);
        for (std::size_t j = col; j < m.n_cols(); ++j) m(pivot_row, j) *= inv_pivot;

        for (std::size_t i = 0; i < m.n_rows(); ++i) {
            if (i == pivot_row || m(i, col) == 0) continue;
            const T factor = m(i, col);
            for (std::size_t j = col; j < m.n_cols(); ++j) {
                m(i, j) -= factor * m(pivot_row, j);
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(m), std::move(pivots)};
}

/// Basis of ker(m) in the standard rref parameterization: one vector per
/// free column f, with entry 1 at f. Empty when the kernel is trivial.
template <typename T>
std::vector<std::vector<T>> nullspace_basis(const Mat<T>& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.n_cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.n_cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.n_cols(), T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One exact solution of m*x = b (free variables set to 0), or nullopt when
/// the system is inconsistent.
template <typename T>
std::optional<std::vector<T>> solve_linear(const Mat<T>& m, const std::vector<T>& b) {
    if (b.size() != m.n_rows()) {
        throw std::invalid_argument("solve_linear rhs dimension mismatch");
    }
    Mat<T> aug(m.n_rows(), m.n_cols() + 1);
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
        for (std::size_t j = 0; j < m.n_cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.n_cols()) = b[i];
    }
    auto [r, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == m.n_cols()) return std::nullopt;

    std::vector<T> x(m.n_cols(), T(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, m.n_cols());
    return x;
}

/// Indices j such that {e_j} complements the row space of `sub_basis`:
/// the non-pivot columns of its rref. Throws on dependent input.
template <typename T>
std::vector<std::size_t> complement_columns(const std::vector<std::vector<T>>& sub_basis,
                                            std::size_t ambient_dim) {
    auto m = Mat<T>::from_rows(sub_basis, ambient_dim);
    auto [r, pivots] = rref(std::move(m));
    if (pivots.size() != sub_basis.size()) {
        throw std::invalid_argument("complement_basis: input vectors are dependent");
    }
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < ambient_dim; ++j) {
        if (!is_pivot[j]) cols.push_back(j);
    }
    return cols;
}

/// Standard basis vectors spanning a complement of span(sub_basis), chosen
/// at the non-pivot coordinates so the result is deterministic.
template <typename T>
std::vector<std::vector<T>> complement_basis(const std::vector<std::vector<T>>& sub_basis,
                                             std::size_t ambient_dim) {
    std::vector<std::vector<T>> out;
    for (auto j : complement_columns(sub_basis, ambient_dim)) {
        out.push_back(unit_vec<T>(ambient_dim, j));
    }
    return out;
}

}  // namespace gpoly
