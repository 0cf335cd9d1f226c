#pragma once

/**
 * @file structure.hpp
 * @brief Series, Leib(L), annihilators, cyclic subalgebras and quotients.
 *
 * Everything here works over any exact field except find_cyclic_generator,
 * which scans the whole (finite) space.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "leibniz/subspaces.hpp"

namespace leibniz {

enum class SeriesKind { derived, lower_central };

struct SeriesReport {
    SeriesKind kind = SeriesKind::derived;
    std::vector<Subspace> terms;
    bool terminates_at_zero = false;
};

namespace detail {

template <class Step>
SeriesReport run_series(const AlgebraTable& a, SeriesKind kind, Step step) {
    SeriesReport r{kind, {whole(a)}, false};
    while (true) {
        Subspace next = step(r.terms.back());
        if (next == r.terms.back()) break;
        r.terms.push_back(std::move(next));
    }
    r.terminates_at_zero = r.terms.back().is_zero();
    return r;
}

}  // namespace detail

/// L, L·L, (L·L)·(L·L), ... until it stabilizes.
inline SeriesReport derived_series(const AlgebraTable& a) {
    require_leibniz(a);
    return detail::run_series(a, SeriesKind::derived,
                              [&](const Subspace& s) { return subspace_product(a, s, s); });
}

/// L, then L·Lᵏ + Lᵏ·L (two-sided) until it stabilizes.
inline SeriesReport lower_central_series(const AlgebraTable& a) {
    require_leibniz(a);
    const Subspace all = whole(a);
    return detail::run_series(a, SeriesKind::lower_central, [&](const Subspace& s) {
        return sum(subspace_product(a, all, s), subspace_product(a, s, all));
    });
}

inline bool is_solvable(const AlgebraTable& a) { return derived_series(a).terminates_at_zero; }
inline bool is_nilpotent(const AlgebraTable& a) { return lower_central_series(a).terminates_at_zero; }

/// The ideal generated by all squares. By polarization the squares span
/// the same space as {bᵢbᵢ} ∪ {bᵢbⱼ + bⱼbᵢ}.
inline Subspace leib_ideal(const AlgebraTable& a) {
    require_leibniz(a);
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        gens.push_back(a.product(i, i));
        for (std::size_t j = i + 1; j < a.dim(); ++j) gens.push_back(a.product(i, j) + a.product(j, i));
    }
    return ideal_closure(a, span_of(a, std::move(gens)));
}

/// {u : u·v = 0 for every v}.
inline Subspace left_annihilator(const AlgebraTable& a) {
    require_leibniz(a);
    const std::size_t n = a.dim();
    // Row block j is right multiplication by b_j: (u·b_j)_k = Σ_i u_i c[i][j][k].
    Matrix stacked(a.field(), n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) stacked(j * n + k, i) = a.at(i, j, k);
    return span_of(a, kernel(stacked));
}

struct CyclicReport {
    Vector generator;
    std::vector<Vector> powers;  // a, a², ..., linearly independent
    Subspace span;
};

namespace detail {

inline std::vector<Vector> left_normed_powers(const AlgebraTable& a, const Vector& x) {
    std::vector<Vector> powers;
    if (is_zero(x)) return powers;
    powers.push_back(x);
    Subspace seen = span_of(a, {x});
    while (true) {
        Vector next = multiply(a, x, powers.back());
        if (seen.contains(next)) return powers;
        powers.push_back(next);
        seen = span_of(a, powers);
    }
}

}  // namespace detail

/// ⟨x⟩ from left-normed powers x^{k+1} = x·x^k; cross-checked against the
/// subalgebra closure of span{x}.
inline CyclicReport cyclic_subalgebra(const AlgebraTable& a, const Vector& x) {
    require_leibniz(a);
    check_compatible(a, x);
    CyclicReport r{x, detail::left_normed_powers(a, x), {}};
    r.span = span_of(a, r.powers);
    if (!(r.span == subalgebra_closure(a, span_of(a, {x}))))
        throw std::logic_error("left-normed powers disagree with the subalgebra closure of " + to_string(x));
    return r;
}

/// The idx-th element of F^n in enumeration order (first coordinate most significant).
inline Vector enumerate_vector(const FieldSpec& f, std::size_t n, std::uint64_t idx) {
    Vector v = zero_vector(f, n);
    for (std::size_t k = n; k-- > 0;) {
        v[k] = Scalar::from_residue(f, static_cast<std::uint32_t>(idx % f.modulus()));
        idx /= f.modulus();
    }
    return v;
}

inline std::uint64_t space_size(const FieldSpec& f, std::size_t n) {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (s > std::numeric_limits<std::uint64_t>::max() / f.modulus())
            raise(errc::dimension_guard, "F^n too large to enumerate");
        s *= f.modulus();
    }
    return s;
}

inline void require_finite(const FieldSpec& f, const char* what) {
    if (!f.is_prime()) raise(errc::infinite_field_unsupported, std::string(what) + " needs a finite field");
}

/// First x in enumeration order with ⟨x⟩ = L. Workers split the scan by
/// residue class of the index; the smallest hit wins, so the answer does not
/// depend on the worker count.
inline std::optional<Vector> find_cyclic_generator(const AlgebraTable& a, unsigned workers = 1) {
    require_finite(a.field(), "find_cyclic_generator");
    require_leibniz(a);
    const std::size_t n = a.dim();
    const std::uint64_t total = space_size(a.field(), n);
    workers = std::max(1u, workers);
    std::atomic<std::uint64_t> best{total};
    auto scan = [&](unsigned w) {
        for (std::uint64_t idx = w; idx < total; idx += workers) {
            if (idx >= best.load(std::memory_order_relaxed)) return;
            Vector x = enumerate_vector(a.field(), n, idx);
            if (detail::left_normed_powers(a, x).size() == n) {
                std::uint64_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {}
                return;
            }
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    }
    if (best.load() == total) return std::nullopt;
    return enumerate_vector(a.field(), n, best.load());
}

struct QuotientResult {
    AlgebraTable table;
    std::vector<std::size_t> complement;  // ambient coordinates kept, ascending
    Matrix projection;                    // (n - dim I) x n

    Vector project(const Vector& v) const { return projection.apply(v); }
};

/// A / I on the non-pivot coordinates of I's RREF.
inline QuotientResult quotient(const AlgebraTable& a, const Subspace& ideal) {
    check_in(a, ideal);
    if (!is_ideal(a, ideal)) raise(errc::not_an_ideal, "subspace " + ideal.to_string() + " is not an ideal");
    const std::size_t n = a.dim();
    std::vector<bool> pivot(n, false);
    for (auto p : ideal.pivots()) pivot[p] = true;
    QuotientResult q;
    std::vector<std::string> names;
    for (std::size_t c = 0; c < n; ++c)
        if (!pivot[c]) {
            q.complement.push_back(c);
            names.push_back(a.basis_names()[c]);
        }
    const std::size_t m = q.complement.size();
    q.projection = Matrix(a.field(), m, n);
    for (std::size_t c = 0; c < n; ++c) {
        Vector r = ideal.reduce(a.basis_vector(c));
        for (std::size_t i = 0; i < m; ++i) q.projection(i, c) = r[q.complement[i]];
    }
    q.table = AlgebraTable(a.field(), m, names);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            q.table.set_product(i, j, q.project(a.product(q.complement[i], q.complement[j])));
    return q;
}

inline std::size_t dim_mod_derived(const AlgebraTable& a) { return a.dim() - derived_algebra(a).dim(); }

}  // namespace leibniz
