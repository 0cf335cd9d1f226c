#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace leibniz;

namespace {

std::vector<std::vector<int>> as_ints(const std::vector<std::vector<Scalar>>& tuples) {
    std::vector<std::vector<int>> out;
    for (const auto& t : tuples) {
        std::vector<int> v;
        for (const auto& s : t) v.push_back(static_cast<int>(s.residue()));
        out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("family tables") {
    const auto f = FieldSpec::prime(2);
    const AlgebraTable z2 = build_case4(f, 0, 0);
    CHECK(z2.basis_names() == std::vector<std::string>{"x", "a", "a2", "a3"});
    // a·x = x·a = x, x·x = a3, a·a = a2, a·a2 = a3
    CHECK(z2.product(1, 0) == oracle::to_vector(f, {1, 0, 0, 0}));
    CHECK(z2.product(0, 1) == oracle::to_vector(f, {1, 0, 0, 0}));
    CHECK(z2.product(0, 0) == oracle::to_vector(f, {0, 0, 0, 1}));
    CHECK(z2.product(1, 1) == oracle::to_vector(f, {0, 0, 1, 0}));
    CHECK(z2.product(1, 2) == oracle::to_vector(f, {0, 0, 0, 1}));

    const AlgebraTable c3 = build(FamilyName::cyclic, f, {}, 3);
    std::size_t nonzero = 0;
    for (const auto& s : c3.constants()) nonzero += !s.is_zero();
    CHECK(nonzero == 2);

    const auto q = FieldSpec::rational();
    const AlgebraTable cross = build(FamilyName::cross_lie, q);
    CHECK(cross.product(0, 1) == oracle::to_vector(q, {0, 0, 1}));
    CHECK(cross.product(1, 2) == oracle::to_vector(q, {1, 0, 0}));
    CHECK(cross.product(2, 0) == oracle::to_vector(q, {0, 1, 0}));
    CHECK(cross.product(1, 0) == oracle::to_vector(q, {0, 0, -1}));
}

TEST_CASE("constructor preconditions") {
    const auto f = FieldSpec::prime(3);
    CHECK_THROWS_AS(build_case4(f, 0, 0), Error);
    CHECK_THROWS_AS(build(FamilyName::case3, f, {Scalar::zero(f)}), Error);
    CHECK_THROWS_AS(build(FamilyName::case2, f, {}, 3), Error);
    CHECK_THROWS_AS(build(FamilyName::cyclic, f, {}, 0), Error);
    CHECK_THROWS_AS(parse_family("case7"), Error);
    CHECK_THROWS_AS(audit(FamilyName::case3, FieldSpec::rational()), Error);
    CHECK_THROWS_AS(audit(FamilyName::case4, f), Error);
}

TEST_CASE("always-valid families") {
    for (auto f : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::rational()}) {
        CHECK(is_leibniz(build(FamilyName::case2, f)));
        CHECK(is_lie_table(build(FamilyName::case2, f)));
        CHECK(is_leibniz(build(FamilyName::case5, f)));
        CHECK(is_leibniz(build(FamilyName::case6, f)));
        CHECK(is_leibniz(build(FamilyName::cross_lie, f)));
        for (std::size_t n = 1; n <= 6; ++n) CHECK(is_leibniz(build(FamilyName::cyclic, f, {}, n)));
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto lat = build_lattice(build(FamilyName::cyclic, FieldSpec::prime(2), {}, n));
        CHECK(lat.maximal.size() == 1);
    }
}

TEST_CASE("audit verdicts match the naive identity check") {
    for (int p : {2, 3, 5}) {
        const auto f = FieldSpec::prime(p);
        const auto rep = audit(FamilyName::case3, f);
        CHECK(rep.entries.size() == static_cast<std::size_t>(p * p * p));
        for (const auto& e : rep.entries) {
            const AlgebraTable t = build(FamilyName::case3, f, e.params);
            CHECK(e.valid == oracle::leibniz_packed(oracle::residues_of(t), 3, p));
            CHECK(e.valid == !e.violation.has_value());
        }
    }
}

TEST_CASE("case3 sweep: the identity holds exactly when c + d = 0 and 2e = 0") {
    for (int p : {2, 3, 5, 7}) {
        const auto rep = audit(FamilyName::case3, FieldSpec::prime(p));
        std::vector<std::vector<int>> expect;
        for (int c = 0; c < p; ++c)
            for (int d = 0; d < p; ++d)
                for (int e = 0; e < p; ++e)
                    if ((c + d) % p == 0 && (2 * e) % p == 0) expect.push_back({c, d, e});
        CHECK(as_ints(rep.valid()) == expect);
    }
    // over GF(3) that is 3 of 27 tuples
    CHECK(audit(FamilyName::case3, FieldSpec::prime(3)).valid().size() == 3);
}

TEST_CASE("case3 violations sit on the triples (x, a, a2) and (a, x, x)") {
    const auto f = FieldSpec::prime(3);
    // c + d != 0 breaks x(a a2) = (x a) a2 + a (x a2)
    auto r1 = leibniz_check(build_case3(f, 1, 0, 2));
    CHECK(r1.contains(0, 1, 2));
    // c + d = 0 but e != 0 breaks a(x x) = (a x) x + x (a x)
    auto r2 = leibniz_check(build_case3(f, 1, 2, 1));
    CHECK(r2.contains(1, 0, 0));
    CHECK_FALSE(r2.contains(0, 1, 2));
}

TEST_CASE("case3 over Q with (0, 0, 1) fails at (a, x, x)") {
    const auto q = FieldSpec::rational();
    const auto rep = audit(FamilyName::case3, q, std::vector<std::vector<Scalar>>{{Scalar::zero(q), Scalar::zero(q), Scalar::one(q)}});
    REQUIRE(rep.entries.size() == 1);
    CHECK_FALSE(rep.entries[0].valid);
    CHECK(leibniz_check(build_case3(q, 0, 0, 1)).contains(1, 0, 0));
    CHECK_FALSE(rep.entries[0].property_P.has_value());
}

TEST_CASE("valid case3 instances with a root alpha fail property P, at span{alpha a + x} unless all parameters vanish") {
    for (int p : {2, 3, 5, 7}) {
        const auto f = FieldSpec::prime(p);
        for (const auto& e : audit(FamilyName::case3, f).entries) {
            if (!e.valid) continue;
            REQUIRE(e.property_verdict.has_value());
            const auto roots = quadratic_roots(e.params[0] + e.params[1], e.params[2]);
            CHECK(e.property_P == roots.empty());
            const AlgebraTable t = build(FamilyName::case3, f, e.params);
            // at c = d = e = 0 the only root is 0 and span{x} is an ideal; other lines fail instead
            const bool zero = e.params[0].is_zero() && e.params[1].is_zero() && e.params[2].is_zero();
            for (const auto& alpha : roots) {
                const auto w = Subspace::span(f, 3, {alpha * t.basis_vector(1) + t.basis_vector(0)});
                CHECK(e.property_verdict->has_failure(w) == !zero);
                CHECK(is_ideal(t, w) == zero);
            }
        }
    }
}

TEST_CASE("case4 sweep over GF(2): valid exactly when c = d") {
    const auto rep = audit(FamilyName::case4, FieldSpec::prime(2));
    CHECK(as_ints(rep.valid()) == std::vector<std::vector<int>>{{0, 0}, {1, 1}});
    for (const auto& e : rep.entries) {
        const AlgebraTable t = build(FamilyName::case4, FieldSpec::prime(2), e.params);
        CHECK(e.valid == oracle::leibniz_packed(oracle::residues_of(t), 4, 2));
    }
    // (0, 1) breaks a(x a3) = (a x) a3 + x (a a3)
    CHECK(leibniz_check(build_case4(FieldSpec::prime(2), 0, 1)).contains(1, 0, 3));
}

TEST_CASE("valid case4 instances have the non-ideal second-maximal span{x + a2, a3}") {
    const auto f = FieldSpec::prime(2);
    for (const auto& e : audit(FamilyName::case4, f).entries) {
        if (!e.valid) continue;
        const AlgebraTable t = build(FamilyName::case4, f, e.params);
        const auto w = Subspace::span(f, 4, {t.basis_vector(0) + t.basis_vector(2), t.basis_vector(3)});
        CHECK(is_subalgebra(t, w));
        CHECK_FALSE(is_ideal(t, w));
        CHECK(e.property_P == false);
        CHECK(e.property_verdict->has_failure(w));
    }
}

TEST_CASE("cross-product extension fails the identity") {
    const auto q = FieldSpec::rational();
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto rep = leibniz_check(build(FamilyName::cross_extension, q, {}, n));
        CHECK_FALSE(rep.empty());
        // e1(e2 e2) = e1 v1 = v2 vanishes only when there is no v2
        CHECK(rep.contains(0, 1, 1) == (n >= 2));
        CHECK(rep.contains(0, 1, 2));  // (e1, e2, e3): defect v1
    }
}
