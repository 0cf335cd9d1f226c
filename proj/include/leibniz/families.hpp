#pragma once

/**
 * @file families.hpp
 * @brief Named algebras of the classification and parameter audits.
 *
 * Only some products of each family are prescribed up front; the remaining
 * ones are filled in the unique way the left Leibniz identity allows:
 *
 *   case3, basis (x, a, q):     x·q = -(c+d) q, q·anything = 0, a·q = 0
 *   case4, basis (x, a, q, r):  x·q = x·r = (c+d) r, q·anything = r·anything = 0
 *
 * Constructors never repair parameters. Whether a tuple really yields a
 * Leibniz algebra is what audit() reports.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/lattice.hpp"

namespace leibniz {

enum class FamilyName { case2, case3, case4, case5, case6, cyclic, cross_lie, cross_extension };

inline std::string_view family_name(FamilyName f) {
    switch (f) {
    case FamilyName::case2: return "case2";
    case FamilyName::case3: return "case3";
    case FamilyName::case4: return "case4";
    case FamilyName::case5: return "case5";
    case FamilyName::case6: return "case6";
    case FamilyName::cyclic: return "cyclic";
    case FamilyName::cross_lie: return "cross_lie";
    case FamilyName::cross_extension: return "cross_extension";
    }
    return "?";
}

inline FamilyName parse_family(std::string_view s) {
    for (auto f : {FamilyName::case2, FamilyName::case3, FamilyName::case4, FamilyName::case5, FamilyName::case6,
                   FamilyName::cyclic, FamilyName::cross_lie, FamilyName::cross_extension})
        if (family_name(f) == s) return f;
    raise(errc::malformed_spec, "unknown family '" + std::string(s) + "'");
}

/// Scalar parameter names, in tuple order.
inline std::vector<std::string> scalar_param_names(FamilyName f) {
    switch (f) {
    case FamilyName::case3: return {"c", "d", "e"};
    case FamilyName::case4: return {"c", "d"};
    default: return {};
    }
}

inline bool takes_size_param(FamilyName f) { return f == FamilyName::cyclic || f == FamilyName::cross_extension; }

struct FamilySpec {
    FamilyName name = FamilyName::case2;
    FieldSpec field;
    std::vector<Scalar> params;  // case3: c, d, e; case4: c, d
    std::size_t n = 0;           // cyclic, cross_extension
};

namespace detail {

inline void put(AlgebraTable& t, std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { t.at(i, j, k) = v; }

inline AlgebraTable build_case3(const FieldSpec& f, const Scalar& c, const Scalar& d, const Scalar& e) {
    enum { x, a, q };
    AlgebraTable t(f, 3, {"x", "a", "a2"});
    const Scalar one = Scalar::one(f);
    put(t, a, a, q, one);
    put(t, a, x, x, one);
    put(t, a, x, q, c);
    put(t, x, a, x, -one);
    put(t, x, a, q, d);
    put(t, x, x, q, e);
    put(t, x, q, q, -(c + d));
    return t;
}

inline AlgebraTable build_case4(const FieldSpec& f, const Scalar& c, const Scalar& d) {
    enum { x, a, q, r };
    AlgebraTable t(f, 4, {"x", "a", "a2", "a3"});
    const Scalar one = Scalar::one(f);
    put(t, a, a, q, one);
    put(t, a, q, r, one);
    put(t, a, x, x, one);
    put(t, a, x, r, c);
    put(t, x, a, x, one);
    put(t, x, a, r, d);
    put(t, x, x, r, one);
    put(t, x, q, r, c + d);
    put(t, x, r, r, c + d);
    return t;
}

inline AlgebraTable build_cyclic(const FieldSpec& f, std::size_t n) {
    std::vector<std::string> names{"a"};
    for (std::size_t k = 2; k <= n; ++k) names.push_back("a" + std::to_string(k));
    AlgebraTable t(f, n, names);
    for (std::size_t k = 0; k + 1 < n; ++k) put(t, 0, k, k + 1, Scalar::one(f));
    return t;
}

/// e_i × e_j on e1, e2, e3 written into t at offset 0.
inline void put_cross(AlgebraTable& t) {
    const FieldSpec& f = t.field();
    const Scalar one = Scalar::one(f);
    const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& ijk : cyc) {
        put(t, ijk[0], ijk[1], ijk[2], one);
        put(t, ijk[1], ijk[0], ijk[2], -one);
    }
}

}  // namespace detail

inline AlgebraTable build(const FamilySpec& spec) {
    const FieldSpec& f = spec.field;
    const auto expected = scalar_param_names(spec.name).size();
    if (spec.params.size() != expected)
        raise(errc::malformed_spec, std::string(family_name(spec.name)) + " takes " + std::to_string(expected) +
                                        " scalar parameters, got " + std::to_string(spec.params.size()));
    for (const auto& p : spec.params)
        if (!(p.field() == f)) raise(errc::field_mismatch, "parameter outside " + f.name());
    if (!takes_size_param(spec.name) && spec.n != 0)
        raise(errc::malformed_spec, std::string(family_name(spec.name)) + " takes no size parameter");
    if (takes_size_param(spec.name) && spec.n < 1)
        raise(errc::malformed_spec, std::string(family_name(spec.name)) + " needs n >= 1");

    switch (spec.name) {
    case FamilyName::case2: {
        AlgebraTable t(f, 2, {"x", "a"});
        t.at(1, 0, 0) = Scalar::one(f);
        t.at(0, 1, 0) = Scalar::from_int(f, -1);
        return t;
    }
    case FamilyName::case3: return detail::build_case3(f, spec.params[0], spec.params[1], spec.params[2]);
    case FamilyName::case4:
        if (f.characteristic() != 2) raise(errc::wrong_characteristic, "case4 exists only in characteristic 2");
        return detail::build_case4(f, spec.params[0], spec.params[1]);
    case FamilyName::case5: return AlgebraTable(f, 1, {"a"});
    case FamilyName::case6: return detail::build_cyclic(f, 2);
    case FamilyName::cyclic: return detail::build_cyclic(f, spec.n);
    case FamilyName::cross_lie: {
        AlgebraTable t(f, 3, {"e1", "e2", "e3"});
        detail::put_cross(t);
        return t;
    }
    case FamilyName::cross_extension: {
        // Literal basis-bilinear reading: e_i·e_i = v1, e_i·v_j = v_{j+1}, v·anything = 0.
        const std::size_t n = spec.n;
        std::vector<std::string> names{"e1", "e2", "e3"};
        for (std::size_t j = 1; j <= n; ++j) names.push_back("v" + std::to_string(j));
        AlgebraTable t(f, 3 + n, names);
        detail::put_cross(t);
        for (std::size_t i = 0; i < 3; ++i) {
            t.at(i, i, 3) = Scalar::one(f);
            for (std::size_t j = 0; j + 1 < n; ++j) t.at(i, 3 + j, 3 + j + 1) = Scalar::one(f);
        }
        return t;
    }
    }
    raise(errc::malformed_spec, "unhandled family");
}

inline AlgebraTable build(FamilyName name, const FieldSpec& f, std::vector<Scalar> params = {}, std::size_t n = 0) {
    return build(FamilySpec{name, f, std::move(params), n});
}

inline AlgebraTable build_case3(const FieldSpec& f, std::int64_t c, std::int64_t d, std::int64_t e) {
    return build(FamilyName::case3, f, {Scalar::from_int(f, c), Scalar::from_int(f, d), Scalar::from_int(f, e)});
}

inline AlgebraTable build_case4(const FieldSpec& f, std::int64_t c, std::int64_t d) {
    return build(FamilyName::case4, f, {Scalar::from_int(f, c), Scalar::from_int(f, d)});
}

struct AuditEntry {
    std::vector<Scalar> params;
    bool valid = false;
    std::optional<Violation> violation;                  // first violating basis triple
    std::optional<bool> property_P;                      // finite fields within lattice scope
    std::optional<PropertyPVerdict> property_verdict;
};

struct ValidParamReport {
    FamilyName family = FamilyName::case2;
    FieldSpec field;
    std::vector<AuditEntry> entries;  // lexicographic tuple order

    std::vector<std::vector<Scalar>> valid() const {
        std::vector<std::vector<Scalar>> out;
        for (const auto& e : entries)
            if (e.valid) out.push_back(e.params);
        return out;
    }
    std::vector<std::vector<Scalar>> property_P_holding() const {
        std::vector<std::vector<Scalar>> out;
        for (const auto& e : entries)
            if (e.property_P.value_or(false)) out.push_back(e.params);
        return out;
    }
};

inline AuditEntry audit_one(const FamilySpec& spec) {
    AuditEntry entry{spec.params, false, std::nullopt, std::nullopt, std::nullopt};
    AlgebraTable t = build(spec);
    entry.violation = first_violation(t);
    entry.valid = !entry.violation.has_value();
    if (entry.valid && spec.field.is_prime() && spec.field.modulus() <= lattice_max_prime &&
        t.dim() <= lattice_max_dim) {
        entry.property_verdict = property_P(t);
        entry.property_P = entry.property_verdict->holds;
    }
    return entry;
}

/// Sweeps every parameter tuple over a finite field (|F|^arity tuples in
/// lexicographic order), or only the supplied tuples. Over Q explicit tuples
/// are mandatory.
inline ValidParamReport audit(FamilyName name, const FieldSpec& f,
                              const std::optional<std::vector<std::vector<Scalar>>>& tuples = std::nullopt,
                              std::size_t n = 0) {
    if (name == FamilyName::case4 && f.characteristic() != 2)
        raise(errc::wrong_characteristic, "case4 exists only in characteristic 2");
    ValidParamReport report{name, f, {}};
    std::vector<std::vector<Scalar>> sweep;
    if (tuples) {
        sweep = *tuples;
    } else {
        if (!f.is_prime()) raise(errc::infinite_field_sweep, "sweeping over Q needs explicit tuples");
        const std::size_t arity = scalar_param_names(name).size();
        const std::uint64_t count = space_size(f, arity);
        for (std::uint64_t idx = 0; idx < count; ++idx) sweep.push_back(enumerate_vector(f, arity, idx));
    }
    for (auto& params : sweep) report.entries.push_back(audit_one(FamilySpec{name, f, params, n}));
    return report;
}

}  // namespace leibniz
