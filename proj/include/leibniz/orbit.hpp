#pragma once

/**
 * @file orbit.hpp
 * @brief Residue-packed tables and GL(n, p) orbits for small prime fields.
 *
 * A packed table is the flat constant array c[(i*n + j)*n + k] as residues.
 * Its lexicographic order is the scalar order of the flattened constants, so
 * the orbit minimum under basis change is a canonical form.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Orbit budget for exhaustive canonical forms: |GL(4, 2)| = 20160.
inline constexpr std::uint64_t gl_budget = 20160;

using Residues = std::vector<std::uint8_t>;

struct SmallField {
    std::uint32_t p = 2;
    std::uint32_t inv[256] = {};

    explicit SmallField(std::uint32_t modulus) : p(modulus) {
        for (std::uint32_t a = 1; a < p; ++a) inv[a] = mod_inverse(a, p);
    }
};

inline std::uint64_t gl_order(std::size_t n, std::uint64_t q) {
    std::uint64_t qn = 1;
    for (std::size_t i = 0; i < n; ++i) qn *= q;
    std::uint64_t order = 1, qi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= q;
    }
    return order;
}

/// An invertible matrix and its inverse, both row-major residues.
struct GLElement {
    Residues m;
    Residues inv;
};

namespace detail {

/// Inverse of a row-major n×n residue matrix, or nullopt if singular.
inline std::optional<Residues> invert_residues(const Residues& m, std::size_t n, const SmallField& f) {
    const std::uint32_t p = f.p;
    std::vector<std::uint32_t> aug(n * 2 * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r * 2 * n + c] = m[r * n + c];
        aug[r * 2 * n + n + r] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && aug[sel * 2 * n + col] == 0) ++sel;
        if (sel == n) return std::nullopt;
        for (std::size_t c = 0; c < 2 * n; ++c) std::swap(aug[col * 2 * n + c], aug[sel * 2 * n + c]);
        const std::uint32_t s = f.inv[aug[col * 2 * n + col]];
        for (std::size_t c = 0; c < 2 * n; ++c) aug[col * 2 * n + c] = aug[col * 2 * n + c] * s % p;
        for (std::size_t r = 0; r < n; ++r) {
            const std::uint32_t factor = aug[r * 2 * n + col];
            if (r == col || factor == 0) continue;
            for (std::size_t c = 0; c < 2 * n; ++c)
                aug[r * 2 * n + c] = (aug[r * 2 * n + c] + (p - factor) * aug[col * 2 * n + c]) % p;
        }
    }
    Residues out(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r * n + c] = static_cast<std::uint8_t>(aug[r * 2 * n + n + c]);
    return out;
}

}  // namespace detail

/// Every element of GL(n, p), in lexicographic order of the row-major entries.
inline std::vector<GLElement> enumerate_gl(std::size_t n, std::uint32_t p) {
    const std::uint64_t order = gl_order(n, p);
    if (order > gl_budget)
        raise(errc::orbit_budget_exceeded, "|GL(" + std::to_string(n) + ", " + std::to_string(p) +
                                               ")| = " + std::to_string(order) + " exceeds the orbit budget");
    SmallField f(p);
    std::vector<GLElement> out;
    out.reserve(order);
    Residues m(n * n, 0);
    while (true) {
        if (auto inv = detail::invert_residues(m, n, f)) out.push_back({m, std::move(*inv)});
        std::size_t s = m.size();
        while (s > 0 && ++m[s - 1] == p) m[--s] = 0;
        if (s == 0) break;
    }
    return out;
}

/// Constants of the table in the basis given by the columns of g.m.
inline Residues transform_residues(const Residues& c, std::size_t n, const GLElement& g, std::uint32_t p) {
    std::vector<std::uint32_t> x(n * n * n, 0), y(n * n * n, 0);
    const auto P = [&](std::size_t r, std::size_t col) -> std::uint32_t { return g.m[r * n + col]; };
    // x[i][s][t] = Σ_r P[r][i] c[r][s][t]
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r) {
            const std::uint32_t w = P(r, i);
            if (!w) continue;
            for (std::size_t st = 0; st < n * n; ++st) x[i * n * n + st] += w * c[r * n * n + st];
        }
    for (auto& v : x) v %= p;
    // y[i][j][t] = Σ_s P[s][j] x[i][s][t]
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t s = 0; s < n; ++s) {
                const std::uint32_t w = P(s, j);
                if (!w) continue;
                for (std::size_t t = 0; t < n; ++t) y[(i * n + j) * n + t] += w * x[(i * n + s) * n + t];
            }
    // out[i][j][k] = Σ_t Pinv[k][t] y[i][j][t]
    Residues out(n * n * n);
    for (std::size_t ij = 0; ij < n * n; ++ij)
        for (std::size_t k = 0; k < n; ++k) {
            std::uint32_t acc = 0;
            for (std::size_t t = 0; t < n; ++t) acc += g.inv[k * n + t] * (y[ij * n + t] % p);
            out[ij * n + k] = static_cast<std::uint8_t>(acc % p);
        }
    return out;
}

inline Residues to_residues(const AlgebraTable& a) {
    if (!a.field().is_prime() || a.field().modulus() > 255)
        raise(errc::infinite_field_unsupported, "packed tables need a prime field below 256");
    Residues r;
    r.reserve(a.constants().size());
    for (const auto& s : a.constants()) r.push_back(static_cast<std::uint8_t>(s.residue()));
    return r;
}

inline AlgebraTable from_residues(const FieldSpec& f, std::size_t n, const Residues& r,
                                  std::vector<std::string> names = {}) {
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i + 1));
    std::vector<Scalar> constants;
    constants.reserve(r.size());
    for (auto v : r) constants.push_back(Scalar::from_residue(f, v));
    return AlgebraTable(f, n, std::move(names), std::move(constants));
}

inline Matrix to_matrix(const FieldSpec& f, std::size_t n, const Residues& m) {
    Matrix out(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = Scalar::from_residue(f, m[r * n + c]);
    return out;
}

}  // namespace leibniz
