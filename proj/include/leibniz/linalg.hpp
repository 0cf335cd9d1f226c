#pragma once

// Dense exact linear algebra over a single FieldSpec.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/exactfield.hpp"

namespace leibniz {

/// Coordinates of an element relative to a basis.
using Vector = std::vector<Scalar>;

inline Vector zero_vector(const FieldSpec& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

inline Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
    Vector v = zero_vector(f, n);
    v[i] = Scalar::one(f);
    return v;
}

inline bool is_zero(const Vector& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

inline Vector operator+(Vector a, const Vector& b) {
    if (a.size() != b.size()) raise(errc::dimension_mismatch, "vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vector operator-(Vector a, const Vector& b) {
    if (a.size() != b.size()) raise(errc::dimension_mismatch, "vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vector operator*(const Scalar& s, Vector v) {
    for (auto& x : v) x *= s;
    return v;
}

inline std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const FieldSpec& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
        return m;
    }

    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vector>& cols) {
        Matrix m(f, rows, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != rows) raise(errc::dimension_mismatch, "column length differs from row count");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
        }
        return m;
    }

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const {
        Vector v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    Vector row(std::size_t r) const {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    Vector apply(const Vector& v) const {
        if (v.size() != cols_) raise(errc::dimension_mismatch, "matrix-vector extents");
        Vector out = zero_vector(field_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!v[c].is_zero()) out[r].add_product((*this)(r, c), v[c]);
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) raise(errc::dimension_mismatch, "matrix product extents");
        Matrix out(field_, rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& a = (*this)(r, k);
                if (a.is_zero()) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) out(r, c).add_product(a, o(k, c));
            }
        return out;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduces rows in place to reduced row echelon form, drops zero rows and
/// returns the pivot column of each surviving row.
inline std::vector<std::size_t> reduce_rows(std::vector<Vector>& rows, std::size_t width) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Scalar inv = rows[rank][col].inv();
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Scalar factor = -rows[r][col];
            for (std::size_t c = col; c < width; ++c) rows[r][c].add_product(factor, rows[rank][c]);
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

inline std::size_t rank(const Matrix& m) {
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return reduce_rows(rows, m.cols()).size();
}

inline std::optional<Matrix> try_inverse(const Matrix& m) {
    if (m.rows() != m.cols()) raise(errc::dimension_mismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Vector> aug;
    for (std::size_t r = 0; r < n; ++r) {
        Vector row = m.row(r);
        Vector id = unit_vector(m.field(), n, r);
        row.insert(row.end(), id.begin(), id.end());
        aug.push_back(std::move(row));
    }
    auto pivots = reduce_rows(aug, 2 * n);
    if (pivots.size() < n || (n > 0 && pivots.back() >= n)) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug[r][n + c];
    return inv;
}

inline Matrix inverse(const Matrix& m) {
    auto inv = try_inverse(m);
    if (!inv) raise(errc::singular_matrix, "matrix is not invertible");
    return *inv;
}

/// Basis of {x : m x = 0}, one vector per free column of the RREF.
inline std::vector<Vector> kernel(const Matrix& m) {
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    auto pivots = reduce_rows(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = unit_vector(m.field(), m.cols(), free);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace leibniz
