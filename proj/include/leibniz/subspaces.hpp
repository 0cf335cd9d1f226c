#pragma once

/**
 * @file subspaces.hpp
 * @brief Canonical subspaces and the subalgebra/ideal calculus built on them.
 *
 * A Subspace is stored as its reduced row echelon basis, which is unique, so
 * subspace equality is plain row equality. Subspaces order by dimension and
 * then row-lexicographically; lattice listings use that order.
 */

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

class Subspace {
public:
    Subspace() = default;

    static Subspace zero(const FieldSpec& f, std::size_t ambient) { return Subspace(f, ambient, {}, {}); }

    static Subspace full(const FieldSpec& f, std::size_t ambient) {
        std::vector<Vector> rows;
        std::vector<std::size_t> pivots;
        for (std::size_t i = 0; i < ambient; ++i) {
            rows.push_back(unit_vector(f, ambient, i));
            pivots.push_back(i);
        }
        return Subspace(f, ambient, std::move(rows), std::move(pivots));
    }

    /// Span of arbitrary vectors, canonicalized.
    static Subspace span(const FieldSpec& f, std::size_t ambient, std::vector<Vector> vectors) {
        for (const auto& v : vectors)
            if (v.size() != ambient)
                raise(errc::dimension_mismatch, "vector of length " + std::to_string(v.size()) +
                                                    " in ambient dimension " + std::to_string(ambient));
        auto pivots = reduce_rows(vectors, ambient);
        return Subspace(f, ambient, std::move(vectors), std::move(pivots));
    }

    /// Adopts rows already in RREF (no checks beyond extents).
    static Subspace from_rref(const FieldSpec& f, std::size_t ambient, std::vector<Vector> rows,
                              std::vector<std::size_t> pivots) {
        return Subspace(f, ambient, std::move(rows), std::move(pivots));
    }

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    bool is_zero() const noexcept { return rows_.empty(); }
    bool is_full() const noexcept { return rows_.size() == ambient_; }
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vector& v) const {
        if (v.size() != ambient_) raise(errc::dimension_mismatch, "vector length differs from ambient dimension");
        Vector r = reduce(v);
        return leibniz::is_zero(r);
    }

    /// v minus its components along the pivot rows; zero iff v lies in the span.
    Vector reduce(Vector v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Scalar c = v[pivots_[r]];
            if (c.is_zero()) continue;
            Scalar neg = -c;
            for (std::size_t k = 0; k < ambient_; ++k) v[k].add_product(neg, rows_[r][k]);
        }
        return v;
    }

    /// Coordinates of v with respect to the RREF rows (v must lie in the span).
    Vector coordinates(const Vector& v) const {
        if (!contains(v)) raise(errc::dimension_mismatch, "vector not in subspace");
        Vector c;
        for (auto p : pivots_) c.push_back(v[p]);
        return c;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r) out += ", ";
            out += leibniz::to_string(rows_[r]);
        }
        return out + "]";
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
        if (auto c = a.rows_.size() <=> b.rows_.size(); c != 0) return c;
        for (std::size_t r = 0; r < a.rows_.size(); ++r)
            for (std::size_t k = 0; k < a.ambient_; ++k)
                if (auto c = a.rows_[r][k] <=> b.rows_[r][k]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    Subspace(const FieldSpec& f, std::size_t ambient, std::vector<Vector> rows, std::vector<std::size_t> pivots)
        : field_(f), ambient_(ambient), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

    FieldSpec field_;
    std::size_t ambient_ = 0;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

inline Subspace rref(const FieldSpec& f, std::size_t ambient, std::vector<Vector> vectors) {
    return Subspace::span(f, ambient, std::move(vectors));
}

inline void check_same_ambient(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        raise(errc::dimension_mismatch, "subspaces of F^" + std::to_string(u.ambient_dim()) + " and F^" +
                                            std::to_string(v.ambient_dim()));
}

inline void check_in(const AlgebraTable& a, const Subspace& s) {
    if (s.ambient_dim() != a.dim())
        raise(errc::dimension_mismatch, "subspace of F^" + std::to_string(s.ambient_dim()) + " in a dimension-" +
                                            std::to_string(a.dim()) + " algebra");
}

inline Subspace sum(const Subspace& u, const Subspace& v) {
    check_same_ambient(u, v);
    std::vector<Vector> rows = u.rows();
    rows.insert(rows.end(), v.rows().begin(), v.rows().end());
    return Subspace::span(u.field(), u.ambient_dim(), std::move(rows));
}

/// Kernel of [U^T | -V^T]: each kernel vector (α, β) gives Σ α_i u_i ∈ U ∩ V.
inline Subspace intersect(const Subspace& u, const Subspace& v) {
    check_same_ambient(u, v);
    const std::size_t n = u.ambient_dim();
    if (u.is_zero() || v.is_zero()) return Subspace::zero(u.field(), n);
    std::vector<Vector> cols = u.rows();
    for (const auto& r : v.rows()) cols.push_back(Scalar::from_int(u.field(), -1) * r);
    Matrix stacked = Matrix::from_columns(u.field(), n, cols);
    std::vector<Vector> meet;
    for (const auto& k : kernel(stacked)) {
        Vector w = zero_vector(u.field(), n);
        for (std::size_t i = 0; i < u.dim(); ++i)
            if (!k[i].is_zero())
                for (std::size_t c = 0; c < n; ++c) w[c].add_product(k[i], u.rows()[i][c]);
        meet.push_back(std::move(w));
    }
    return Subspace::span(u.field(), n, std::move(meet));
}

/// True iff v ⊆ u.
inline bool contains(const Subspace& u, const Subspace& v) {
    check_same_ambient(u, v);
    if (v.dim() > u.dim()) return false;
    for (const auto& r : v.rows())
        if (!u.contains(r)) return false;
    return true;
}

inline bool equals(const Subspace& u, const Subspace& v) {
    check_same_ambient(u, v);
    return u == v;
}

/// Span of u·v over basis pairs; bilinearity makes this all of U·V.
inline Subspace subspace_product(const AlgebraTable& a, const Subspace& u, const Subspace& v) {
    check_in(a, u);
    check_in(a, v);
    std::vector<Vector> prods;
    for (const auto& x : u.rows())
        for (const auto& y : v.rows()) prods.push_back(multiply(a, x, y));
    return Subspace::span(a.field(), a.dim(), std::move(prods));
}

inline Subspace whole(const AlgebraTable& a) { return Subspace::full(a.field(), a.dim()); }
inline Subspace derived_algebra(const AlgebraTable& a) { return subspace_product(a, whole(a), whole(a)); }

inline Subspace span_of(const AlgebraTable& a, std::vector<Vector> vectors) {
    for (const auto& v : vectors) check_compatible(a, v);
    return Subspace::span(a.field(), a.dim(), std::move(vectors));
}

inline Subspace subalgebra_closure(const AlgebraTable& a, const Subspace& s) {
    check_in(a, s);
    Subspace cur = s;
    while (true) {
        Subspace next = sum(cur, subspace_product(a, cur, cur));
        if (next.dim() == cur.dim()) return cur;
        cur = std::move(next);
    }
}

inline Subspace ideal_closure(const AlgebraTable& a, const Subspace& s) {
    check_in(a, s);
    const Subspace all = whole(a);
    Subspace cur = s;
    while (true) {
        Subspace next = sum(sum(cur, subspace_product(a, all, cur)), subspace_product(a, cur, all));
        if (next.dim() == cur.dim()) return cur;
        cur = std::move(next);
    }
}

inline bool is_subalgebra(const AlgebraTable& a, const Subspace& s) {
    check_in(a, s);
    for (const auto& x : s.rows())
        for (const auto& y : s.rows())
            if (!s.contains(multiply(a, x, y))) return false;
    return true;
}

/// Two-sided: L·S ⊆ S and S·L ⊆ S.
inline bool is_ideal(const AlgebraTable& a, const Subspace& s) {
    check_in(a, s);
    for (const auto& x : s.rows())
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vector b = a.basis_vector(i);
            if (!s.contains(multiply(a, b, x)) || !s.contains(multiply(a, x, b))) return false;
        }
    return true;
}

/// The algebra induced on a subalgebra, in the coordinates of its RREF rows.
inline AlgebraTable induced_table(const AlgebraTable& a, const Subspace& s) {
    check_in(a, s);
    if (!is_subalgebra(a, s)) raise(errc::malformed_spec, "subspace is not closed under the product");
    const std::size_t m = s.dim();
    AlgebraTable out(a.field(), m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.set_product(i, j, s.coordinates(multiply(a, s.rows()[i], s.rows()[j])));
    return out;
}

}  // namespace leibniz
