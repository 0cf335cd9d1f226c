#pragma once

/**
 * @file lattice.hpp
 * @brief Exhaustive subalgebra lattices over small prime fields.
 *
 * Every subspace of F^n is enumerated once by pivot pattern and free
 * entries; the product-closed ones form the lattice. Maximal and
 * second-maximal subalgebras come from pairwise inclusion, not from
 * codimension shortcuts. Guards: n <= 8 and p <= 7.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "leibniz/structure.hpp"

namespace leibniz {

inline constexpr std::size_t lattice_max_dim = 8;
inline constexpr std::uint32_t lattice_max_prime = 7;

inline void require_lattice_scope(const FieldSpec& f, std::size_t n) {
    require_finite(f, "subspace enumeration");
    if (n > lattice_max_dim) raise(errc::dimension_guard, "lattice enumeration limited to n <= 8");
    if (f.modulus() > lattice_max_prime) raise(errc::dimension_guard, "lattice enumeration limited to p <= 7");
}

/// Number of r-dimensional subspaces of GF(q)^n.
inline std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t r, std::uint64_t q) {
    if (r > n) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < r; ++i) {
        std::uint64_t qn = 1, qi = 1;
        for (std::uint64_t t = 0; t < n - i; ++t) qn *= q;
        for (std::uint64_t t = 0; t < i + 1; ++t) qi *= q;
        num *= qn - 1;
        den *= qi - 1;
    }
    return num / den;
}

inline std::uint64_t subspace_count(std::uint64_t n, std::uint64_t q) {
    std::uint64_t total = 0;
    for (std::uint64_t r = 0; r <= n; ++r) total += gaussian_binomial(n, r, q);
    return total;
}

/// Streams every subspace of F^n exactly once, grouped by dimension and
/// pivot pattern.
inline void for_each_subspace(const FieldSpec& f, std::size_t n, const std::function<void(const Subspace&)>& visit) {
    require_lattice_scope(f, n);
    const std::uint32_t q = f.modulus();
    for (std::size_t r = 0; r <= n; ++r) {
        std::vector<bool> choose(n, false);
        std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(r), true);
        do {
            std::vector<std::size_t> pivots;
            for (std::size_t c = 0; c < n; ++c)
                if (choose[c]) pivots.push_back(c);
            // free slots: (row t, column c) with c right of pivot t and c not a pivot
            std::vector<std::pair<std::size_t, std::size_t>> slots;
            for (std::size_t t = 0; t < r; ++t)
                for (std::size_t c = pivots[t] + 1; c < n; ++c)
                    if (!choose[c]) slots.emplace_back(t, c);
            std::vector<std::uint32_t> digits(slots.size(), 0);
            while (true) {
                std::vector<Vector> rows;
                for (std::size_t t = 0; t < r; ++t) rows.push_back(unit_vector(f, n, pivots[t]));
                for (std::size_t s = 0; s < slots.size(); ++s)
                    rows[slots[s].first][slots[s].second] = Scalar::from_residue(f, digits[s]);
                visit(Subspace::from_rref(f, n, std::move(rows), pivots));
                std::size_t s = 0;
                while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
                if (s == digits.size()) break;
            }
        } while (std::prev_permutation(choose.begin(), choose.end()));
    }
}

/// All subspaces of F^n in canonical order.
inline std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, std::size_t n) {
    std::vector<Subspace> out;
    for_each_subspace(f, n, [&](const Subspace& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    return out;
}

struct SecondMaximal {
    Subspace sub;
    std::vector<Subspace> parents;  // maximal subalgebras in which `sub` is maximal
};

struct SubalgebraLattice {
    AlgebraTable algebra;
    std::size_t subspace_total = 0;
    std::vector<Subspace> all_subalgebras;  // canonical order
    std::vector<Subspace> ideals;           // canonical order
    std::vector<Subspace> maximal;
    std::vector<SecondMaximal> second_maximal;
};

namespace detail {

/// Maximal elements of {s ∈ subs : s ⊊ top}, where `inside[i][j]` says subs[i] ⊆ subs[j].
inline std::vector<std::size_t> maximal_below(std::size_t top, const std::vector<std::vector<bool>>& inside) {
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < inside.size(); ++i)
        if (i != top && inside[i][top]) below.push_back(i);
    std::vector<std::size_t> out;
    for (auto i : below) {
        bool dominated = false;
        for (auto j : below)
            if (j != i && inside[i][j]) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(i);
    }
    return out;
}

}  // namespace detail

inline SubalgebraLattice build_lattice(const AlgebraTable& a) {
    require_lattice_scope(a.field(), a.dim());
    require_leibniz(a);
    SubalgebraLattice lat;
    lat.algebra = a;
    for_each_subspace(a.field(), a.dim(), [&](const Subspace& s) {
        ++lat.subspace_total;
        if (is_subalgebra(a, s)) lat.all_subalgebras.push_back(s);
    });
    std::sort(lat.all_subalgebras.begin(), lat.all_subalgebras.end());
    for (const auto& s : lat.all_subalgebras)
        if (is_ideal(a, s)) lat.ideals.push_back(s);

    const auto& subs = lat.all_subalgebras;
    const std::size_t count = subs.size();
    std::vector<std::vector<bool>> inside(count, std::vector<bool>(count, false));
    std::size_t top = count;
    for (std::size_t i = 0; i < count; ++i) {
        if (subs[i].is_full()) top = i;
        for (std::size_t j = 0; j < count; ++j) inside[i][j] = subs[i].dim() <= subs[j].dim() && contains(subs[j], subs[i]);
    }
    std::vector<std::size_t> maximal_idx = detail::maximal_below(top, inside);
    for (auto m : maximal_idx) lat.maximal.push_back(subs[m]);

    std::vector<std::vector<Subspace>> parents(count);
    for (auto m : maximal_idx)
        for (auto n : detail::maximal_below(m, inside)) parents[n].push_back(subs[m]);
    for (std::size_t i = 0; i < count; ++i)
        if (!parents[i].empty()) lat.second_maximal.push_back({subs[i], parents[i]});
    return lat;
}

inline std::vector<SecondMaximal> second_maximal(const AlgebraTable& a) { return build_lattice(a).second_maximal; }

struct PropertyPWitness {
    Subspace sub;     // second-maximal, not an ideal
    Subspace parent;  // a maximal subalgebra in which it is maximal
};

struct PropertyPVerdict {
    bool holds = true;
    std::optional<PropertyPWitness> witness;  // first failure in canonical order
    std::vector<PropertyPWitness> failures;   // every non-ideal second-maximal

    bool has_failure(const Subspace& s) const {
        return std::any_of(failures.begin(), failures.end(), [&](const auto& w) { return w.sub == s; });
    }
};

/// Every second-maximal subalgebra is a two-sided ideal.
inline PropertyPVerdict property_P(const SubalgebraLattice& lat) {
    PropertyPVerdict v;
    for (const auto& sm : lat.second_maximal)
        if (!is_ideal(lat.algebra, sm.sub)) v.failures.push_back({sm.sub, sm.parents.front()});
    v.holds = v.failures.empty();
    if (!v.holds) v.witness = v.failures.front();
    return v;
}

inline PropertyPVerdict property_P(const AlgebraTable& a) { return property_P(build_lattice(a)); }

/// Intersection of the maximal subalgebras (L itself when there are none).
inline Subspace frattini(const SubalgebraLattice& lat) {
    Subspace acc = whole(lat.algebra);
    for (const auto& m : lat.maximal) acc = intersect(acc, m);
    return acc;
}

inline Subspace frattini(const AlgebraTable& a) { return frattini(build_lattice(a)); }

/// Nilpotency through "every maximal subalgebra is an ideal".
inline bool nilpotency_via_maximal(const SubalgebraLattice& lat) {
    return std::all_of(lat.maximal.begin(), lat.maximal.end(),
                       [&](const Subspace& m) { return is_ideal(lat.algebra, m); });
}

inline bool nilpotency_via_maximal(const AlgebraTable& a) { return nilpotency_via_maximal(build_lattice(a)); }

/// A flag of ideals 0 = I₀ ⊂ I₁ ⊂ ... ⊂ Iₙ = L with dim I_j = j, if any.
inline std::optional<std::vector<Subspace>> ideal_chain(const SubalgebraLattice& lat) {
    const std::size_t n = lat.algebra.dim();
    std::vector<std::vector<const Subspace*>> by_dim(n + 1);
    for (const auto& s : lat.ideals) by_dim[s.dim()].push_back(&s);
    std::vector<Subspace> chain{Subspace::zero(lat.algebra.field(), n)};
    std::function<bool(std::size_t)> extend = [&](std::size_t d) {
        if (d > n) return true;
        for (const Subspace* cand : by_dim[d]) {
            if (!contains(*cand, chain.back())) continue;
            chain.push_back(*cand);
            if (extend(d + 1)) return true;
            chain.pop_back();
        }
        return false;
    };
    if (!extend(1)) return std::nullopt;
    return chain;
}

inline std::optional<std::vector<Subspace>> ideal_chain(const AlgebraTable& a) { return ideal_chain(build_lattice(a)); }

}  // namespace leibniz
