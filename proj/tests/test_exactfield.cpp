#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace leibniz;

namespace {

bool trial_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

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

TEST_CASE("prime moduli are accepted exactly when prime") {
    for (std::int64_t p = 0; p < 200; ++p) {
        if (trial_prime(p)) {
            CHECK(FieldSpec::prime(p).modulus() == static_cast<std::uint32_t>(p));
        } else {
            CHECK(code_of([&] { FieldSpec::prime(p); }) == errc::non_prime_modulus);
        }
    }
    CHECK(FieldSpec::prime(65521).modulus() == 65521u);
    CHECK(code_of([] { FieldSpec::prime(65537); }) == errc::non_prime_modulus);
}

TEST_CASE("field descriptors parse") {
    CHECK(FieldSpec::parse("gf:7") == FieldSpec::prime(7));
    CHECK(FieldSpec::parse("q") == FieldSpec::rational());
    CHECK(FieldSpec::prime(5).name() == "GF(5)");
    CHECK(FieldSpec::rational().name() == "Q");
    CHECK(FieldSpec::prime(3).characteristic() == 3u);
    CHECK(FieldSpec::rational().characteristic() == 0u);
}

TEST_CASE("GF(p) arithmetic agrees with integer arithmetic mod p") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
        const auto f = FieldSpec::prime(p);
        for (std::uint32_t a = 0; a < p; ++a)
            for (std::uint32_t b = 0; b < p; ++b) {
                const auto x = Scalar::from_residue(f, a), y = Scalar::from_residue(f, b);
                CHECK((x + y).residue() == (a + b) % p);
                CHECK((x - y).residue() == (a + p - b) % p);
                CHECK((x * y).residue() == a * b % p);
                if (b) {
                    const auto q = x / y;
                    CHECK(q.residue() * b % p == a);
                }
            }
        CHECK(code_of([&] { Scalar::zero(f).inv(); }) == errc::division_by_zero);
    }
}

TEST_CASE("rational arithmetic is exact") {
    const auto q = FieldSpec::rational();
    const auto a = Scalar::parse(q, "1/3"), b = Scalar::parse(q, "-1/6");
    CHECK((a + b).to_string() == "1/6");
    CHECK((a * b).to_string() == "-1/18");
    CHECK((a / b).to_string() == "-2");
    CHECK(Scalar::parse(q, "4/6").to_string() == "2/3");
    CHECK(code_of([&] { (a / Scalar::zero(q)); }) == errc::division_by_zero);
    const auto big = Scalar::parse(q, "123456789012345678901234567890");
    CHECK((big * big / big).to_string() == "123456789012345678901234567890");
}

TEST_CASE("scalar parsing rejects non-canonical text") {
    const auto f = FieldSpec::prime(5);
    CHECK(Scalar::parse(f, "4").residue() == 4u);
    CHECK(code_of([&] { Scalar::parse(f, "5"); }) == errc::field_mismatch);
    CHECK(code_of([&] { Scalar::parse(f, "1/2"); }) == errc::field_mismatch);
    CHECK(code_of([&] { Scalar::parse(f, "x"); }) == errc::parse_error);
    CHECK(code_of([] { Scalar::parse(FieldSpec::rational(), "1/0"); }) == errc::division_by_zero);
    CHECK(code_of([] { Scalar::parse(FieldSpec::rational(), "1.5"); }) == errc::parse_error);
}

TEST_CASE("mixing fields is an error") {
    const auto a = Scalar::one(FieldSpec::prime(3)), b = Scalar::one(FieldSpec::prime(5));
    CHECK(code_of([&] { (void)(a + b); }) == errc::field_mismatch);
    CHECK(code_of([&] { (void)(a < b); }) == errc::field_mismatch);
}

TEST_CASE("field_op dispatches") {
    const auto f = FieldSpec::prime(7);
    const auto a = Scalar::from_int(f, 3), b = Scalar::from_int(f, 5);
    CHECK(field_op(a, b, FieldOp::add).residue() == 1u);
    CHECK(field_op(a, b, FieldOp::mul).residue() == 1u);
    CHECK(field_op(a, b, FieldOp::neg).residue() == 4u);
    CHECK(field_op(a, b, FieldOp::inv).residue() == 5u);
}

TEST_CASE("quadratic roots over GF(p) match exhaustive evaluation") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const auto f = FieldSpec::prime(p);
        for (std::uint32_t s = 0; s < p; ++s)
            for (std::uint32_t e = 0; e < p; ++e) {
                std::vector<std::uint32_t> expect;
                for (std::uint32_t a = 0; a < p; ++a)
                    if ((a * a + s * a + e) % p == 0) expect.push_back(a);
                const auto got = quadratic_roots(Scalar::from_residue(f, s), Scalar::from_residue(f, e));
                std::vector<std::uint32_t> got_r;
                for (const auto& r : got) got_r.push_back(r.residue());
                CHECK(got_r == expect);
            }
    }
}

TEST_CASE("quadratic roots over Q") {
    const auto q = FieldSpec::rational();
    auto roots = [&](const char* s, const char* e) {
        std::vector<std::string> out;
        for (const auto& r : quadratic_roots(Scalar::parse(q, s), Scalar::parse(q, e))) out.push_back(r.to_string());
        return out;
    };
    CHECK(roots("0", "1").empty());                                // α² + 1
    CHECK(roots("0", "-1") == std::vector<std::string>{"-1", "1"});  // α² - 1
    CHECK(roots("-1", "0") == std::vector<std::string>{"0", "1"});
    CHECK(roots("2", "1") == std::vector<std::string>{"-1"});
    CHECK(roots("0", "-2").empty());
    CHECK(roots("-5/6", "1/6") == std::vector<std::string>{"1/3", "1/2"});
}

TEST_CASE("rational roots of integer polynomials") {
    // (x - 2)(x + 1/3)(x² + 1) = x⁴ - 5/3 x³ + 1/3 x² - 5/3 x - 2/3, ascending coefficients
    std::vector<Rational> c{Rational(-2, 3), Rational(-5, 3), Rational(1, 3), Rational(-5, 3), Rational(1)};
    auto r = rational_roots(c);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Rational(-1, 3));
    CHECK(r[1] == Rational(2));
    std::vector<Rational> zero_root{Rational(0), Rational(0), Rational(1)};  // x²
    CHECK(rational_roots(zero_root) == std::vector<Rational>{Rational(0)});
}
