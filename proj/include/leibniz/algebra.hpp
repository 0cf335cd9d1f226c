#pragma once

/**
 * @file algebra.hpp
 * @brief Structure-constant tables, the product they define, and the left
 *        Leibniz identity checker.
 *
 * Constants are stored flat: constants[(i*n + j)*n + k] is the coefficient of
 * b_k in b_i·b_j. The left convention a(bc) = (ab)c + b(ac) is used
 * throughout; there is no right-Leibniz variant.
 */

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

class AlgebraTable {
public:
    AlgebraTable() = default;

    /// Zero product on n basis vectors named b1..bn (or the given names).
    AlgebraTable(const FieldSpec& f, std::size_t n, std::vector<std::string> names = {})
        : field_(f), dim_(n), names_(std::move(names)), constants_(n * n * n, Scalar::zero(f)) {
        if (names_.empty())
            for (std::size_t i = 0; i < n; ++i) names_.push_back("b" + std::to_string(i + 1));
        validate_names();
    }

    AlgebraTable(const FieldSpec& f, std::size_t n, std::vector<std::string> names, std::vector<Scalar> constants)
        : field_(f), dim_(n), names_(std::move(names)), constants_(std::move(constants)) {
        if (constants_.size() != n * n * n)
            raise(errc::dimension_mismatch, "expected " + std::to_string(n * n * n) + " constants, got " +
                                                std::to_string(constants_.size()));
        for (const auto& c : constants_)
            if (!(c.field() == f)) raise(errc::field_mismatch, "constant outside " + f.name());
        validate_names();
    }

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }
    const std::vector<Scalar>& constants() const noexcept { return constants_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return constants_[(i * dim_ + j) * dim_ + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[(i * dim_ + j) * dim_ + k];
    }

    /// b_i · b_j as a coordinate vector.
    Vector product(std::size_t i, std::size_t j) const {
        auto first = constants_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
        return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
    }

    void set_product(std::size_t i, std::size_t j, const Vector& v) {
        if (v.size() != dim_) raise(errc::dimension_mismatch, "product vector length");
        for (std::size_t k = 0; k < dim_; ++k) at(i, j, k) = v[k];
    }

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < dim_; ++i)
            if (names_[i] == name) return i;
        raise(errc::malformed_spec, "no basis element named '" + name + "'");
    }

    Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim_, i); }
    Vector zero() const { return zero_vector(field_, dim_); }

    /// Same constants under different names.
    AlgebraTable renamed(std::vector<std::string> names) const {
        return AlgebraTable(field_, dim_, std::move(names), constants_);
    }

    /// Equality of products; basis names are labels and do not participate.
    bool same_products(const AlgebraTable& o) const {
        return field_ == o.field_ && dim_ == o.dim_ && constants_ == o.constants_;
    }

    friend bool operator==(const AlgebraTable&, const AlgebraTable&) = default;

private:
    void validate_names() const {
        if (names_.size() != dim_)
            raise(errc::dimension_mismatch, std::to_string(names_.size()) + " basis names for dimension " +
                                                std::to_string(dim_));
        std::set<std::string> seen(names_.begin(), names_.end());
        if (seen.size() != names_.size()) raise(errc::malformed_spec, "basis names are not unique");
    }

    FieldSpec field_;
    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Scalar> constants_;
};

inline void check_compatible(const AlgebraTable& a, const Vector& v) {
    if (v.size() != a.dim())
        raise(errc::dimension_mismatch, "vector of length " + std::to_string(v.size()) + " in a dimension-" +
                                            std::to_string(a.dim()) + " algebra");
    for (const auto& s : v)
        if (!(s.field() == a.field())) raise(errc::field_mismatch, "vector entry outside " + a.field().name());
}

inline Vector multiply(const AlgebraTable& a, const Vector& u, const Vector& v) {
    check_compatible(a, u);
    check_compatible(a, v);
    const std::size_t n = a.dim();
    Vector out = a.zero();
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            Scalar w = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!a.at(i, j, k).is_zero()) out[k].add_product(w, a.at(i, j, k));
        }
    }
    return out;
}

/// u(vw) - (uv)w - v(uw); zero for all triples iff the algebra is left Leibniz.
inline Vector leibniz_defect(const AlgebraTable& a, const Vector& u, const Vector& v, const Vector& w) {
    return multiply(a, u, multiply(a, v, w)) - multiply(a, multiply(a, u, v), w) -
           multiply(a, v, multiply(a, u, w));
}

struct Violation {
    std::size_t i = 0, j = 0, k = 0;
    Vector defect;
};

struct ViolationReport {
    std::vector<Violation> violations;

    bool empty() const noexcept { return violations.empty(); }

    bool contains(std::size_t i, std::size_t j, std::size_t k) const {
        for (const auto& v : violations)
            if (v.i == i && v.j == j && v.k == k) return true;
        return false;
    }
};

namespace detail {

/// Basis-triple defects, lexicographic in (i, j, k); stops after `limit` hits.
inline ViolationReport basis_violations(const AlgebraTable& a, std::size_t limit) {
    const std::size_t n = a.dim();
    std::vector<Vector> prod(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.product(i, j);
    // left(i, v) = b_i · v, right(v, k) = v · b_k, both linear in the coordinates of v
    auto left = [&](std::size_t i, const Vector& v) {
        Vector out = a.zero();
        for (std::size_t m = 0; m < n; ++m)
            if (!v[m].is_zero())
                for (std::size_t l = 0; l < n; ++l) out[l].add_product(v[m], prod[i * n + m][l]);
        return out;
    };
    auto right = [&](const Vector& v, std::size_t k) {
        Vector out = a.zero();
        for (std::size_t m = 0; m < n; ++m)
            if (!v[m].is_zero())
                for (std::size_t l = 0; l < n; ++l) out[l].add_product(v[m], prod[m * n + k][l]);
        return out;
    };
    ViolationReport report;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector d = left(i, prod[j * n + k]) - right(prod[i * n + j], k) - left(j, prod[i * n + k]);
                if (!is_zero(d)) {
                    report.violations.push_back({i, j, k, std::move(d)});
                    if (report.violations.size() >= limit) return report;
                }
            }
    return report;
}

}  // namespace detail

/// Every basis triple violating a(bc) = (ab)c + b(ac). Trilinearity of the
/// defect makes an empty report a certificate for all elements.
inline ViolationReport leibniz_check(const AlgebraTable& a) {
    return detail::basis_violations(a, static_cast<std::size_t>(-1));
}

inline std::optional<Violation> first_violation(const AlgebraTable& a) {
    auto r = detail::basis_violations(a, 1);
    if (r.empty()) return std::nullopt;
    return r.violations.front();
}

inline bool is_leibniz(const AlgebraTable& a) { return !first_violation(a).has_value(); }

inline void require_leibniz(const AlgebraTable& a) {
    if (auto v = first_violation(a))
        raise(errc::not_leibniz, "identity fails at (" + a.basis_names()[v->i] + ", " + a.basis_names()[v->j] +
                                     ", " + a.basis_names()[v->k] + ")");
}

/// Antisymmetric with zero squares on the basis (hence all squares vanish).
inline bool is_lie_table(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (i == j && !a.at(i, i, k).is_zero()) return false;
                if (i != j && !(a.at(i, j, k) + a.at(j, i, k)).is_zero()) return false;
            }
    return true;
}

/**
 * Re-expresses the algebra in a new basis. Column c of `p` holds the
 * coordinates of the new c-th basis vector in the old basis; the result's
 * constants give the new products in new coordinates.
 */
inline AlgebraTable change_basis(const AlgebraTable& a, const Matrix& p) {
    const std::size_t n = a.dim();
    if (p.rows() != n || p.cols() != n) raise(errc::dimension_mismatch, "basis change matrix extents");
    if (!(p.field() == a.field()) && n > 0) raise(errc::field_mismatch, "basis change over another field");
    Matrix pinv = inverse(p);
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < n; ++c) cols.push_back(p.column(c));
    AlgebraTable out(a.field(), n, a.basis_names());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, pinv.apply(multiply(a, cols[i], cols[j])));
    return out;
}

}  // namespace leibniz
