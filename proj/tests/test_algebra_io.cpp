#include <catch_amalgamated.hpp>

#include <filesystem>

#include "oracles.hpp"

using namespace leibniz;

namespace {

errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return errc::io_error;
}

}  // namespace

TEST_CASE("basis identity check agrees with the naive oracle on random tables") {
    oracle::Gen gen;
    for (int p : {2, 3}) {
        const auto f = FieldSpec::prime(p);
        int valid = 0;
        for (int trial = 0; trial < 400; ++trial) {
            const auto n = static_cast<std::size_t>(gen.integer(1, 3));
            AlgebraTable t = gen.random_table(f, n);
            // sparsify so that valid tables show up
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        if (gen.integer(0, 3) != 0) t.at(i, j, k) = Scalar::zero(f);
            const bool expect = oracle::leibniz_packed(oracle::residues_of(t), static_cast<int>(n), p);
            CHECK(is_leibniz(t) == expect);
            CHECK(leibniz_check(t).empty() == expect);
            valid += expect;
        }
        CHECK(valid > 20);
    }
}

TEST_CASE("violations report the failing basis triples") {
    const auto f = FieldSpec::prime(2);
    AlgebraTable t(f, 1, {"a"});
    t.at(0, 0, 0) = Scalar::one(f);  // a·a = a
    auto rep = leibniz_check(t);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.contains(0, 0, 0));
    CHECK(rep.violations[0].defect == Vector{Scalar::one(f)});
    CHECK(code_of([&] { require_leibniz(t); }) == errc::not_leibniz);
}

TEST_CASE("multiply is the bilinear extension of the table") {
    const auto q = FieldSpec::rational();
    AlgebraTable t(q, 2, {"x", "a"});
    t.at(1, 0, 0) = Scalar::one(q);
    t.at(0, 1, 0) = Scalar::from_int(q, -1);
    const Vector u{Scalar::from_int(q, 2), Scalar::from_int(q, 3)}, v{Scalar::from_int(q, 5), Scalar::from_int(q, 7)};
    // (2x + 3a)(5x + 7a) = 14 xa + 15 ax = -14x + 15x = x
    CHECK(multiply(t, u, v) == Vector{Scalar::one(q), Scalar::zero(q)});
    CHECK(is_lie_table(t));
}

TEST_CASE("change of basis matches direct recomputation") {
    oracle::Gen gen;
    const auto f = FieldSpec::prime(3);
    const AlgebraTable t = build_case3(f, 1, 2, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix p = gen.invertible(f, 3);
        const AlgebraTable u = change_basis(t, p);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                // new basis vectors are the columns of p
                const Vector prod = multiply(t, p.column(i), p.column(j));
                CHECK(p.apply(u.product(i, j)) == prod);
            }
    }
}

TEST_CASE("algebra files round-trip in canonical form") {
    const auto f = FieldSpec::prime(2);
    const AlgebraTable t = build_case4(f, 0, 0);
    const std::string text = write_algebra(t);
    CHECK(text.starts_with(R"({"field": {"kind": "prime", "p": 2}, "dim": 4, "basis": ["x", "a", "a2", "a3"], "table": [[["0", "0", "0", "1"], )"));
    CHECK(text.ends_with("]]]}\n"));
    CHECK(read_algebra(text) == t);
    CHECK(write_algebra(read_algebra(text)) == text);

    const AlgebraTable r = build(FamilyName::cross_lie, FieldSpec::rational());
    CHECK(read_algebra(write_algebra(r)) == r);

    const auto path = (std::filesystem::temp_directory_path() / "leibniz_io_roundtrip.json").string();
    save_algebra(t, path);
    CHECK(load_algebra(path) == t);
    std::filesystem::remove(path);
}

TEST_CASE("malformed algebra files") {
    CHECK(code_of([] { read_algebra("{"); }) == errc::parse_error);
    CHECK(code_of([] {
              read_algebra(R"({"field": {"kind": "prime", "p": 4}, "dim": 1, "basis": ["a"], "table": [[["0"]]]})");
          }) == errc::parse_error);
    CHECK(code_of([] {
              read_algebra(R"({"field": {"kind": "prime", "p": 3}, "dim": 2, "basis": ["a", "b"], "table": [[["0"]]]})");
          }) == errc::dimension_mismatch);
    CHECK(code_of([] {
              read_algebra(R"({"field": {"kind": "prime", "p": 3}, "dim": 1, "basis": ["a"], "table": [[["3"]]]})");
          }) == errc::field_mismatch);
    CHECK(code_of([] { load_algebra("/nonexistent/file.json"); }) == errc::io_error);
    // integers are accepted in place of strings
    const auto t =
        read_algebra(R"({"field": {"kind": "rational"}, "dim": 1, "basis": ["a"], "table": [[[0]]]})");
    CHECK(t.at(0, 0, 0).is_zero());
}

TEST_CASE("tables validate their inputs") {
    const auto f = FieldSpec::prime(3);
    CHECK(code_of([&] { AlgebraTable(f, 2, {"a", "b"}, std::vector<Scalar>(7, Scalar::zero(f))); }) ==
          errc::dimension_mismatch);
    CHECK(code_of([&] {
              AlgebraTable(f, 1, {"a"}, std::vector<Scalar>{Scalar::zero(FieldSpec::prime(5))});
          }) == errc::field_mismatch);
    const AlgebraTable t(f, 2);
    CHECK(code_of([&] { multiply(t, Vector(3, Scalar::zero(f)), Vector(2, Scalar::zero(f))); }) ==
          errc::dimension_mismatch);
}
