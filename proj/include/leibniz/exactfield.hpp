#pragma once

/**
 * @file exactfield.hpp
 * @brief Exact scalars over prime fields GF(p) and the rationals.
 *
 * A Scalar always knows its field. Prime-field residues live in [0, p) and
 * rationals are kept reduced with a positive denominator, so equality of
 * Scalars is equality of their canonical representations. Mixing scalars of
 * different fields raises FieldMismatch.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "leibniz/error.hpp"

namespace leibniz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class FieldSpec {
public:
    enum class Kind : std::uint8_t { prime, rational };

    static constexpr std::uint32_t max_modulus = 1u << 16;

    FieldSpec() = default;

    static FieldSpec prime(std::int64_t p) {
        if (p < 2 || p >= static_cast<std::int64_t>(max_modulus))
            raise(errc::non_prime_modulus, "modulus " + std::to_string(p) + " outside [2, 65536)");
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                raise(errc::non_prime_modulus, std::to_string(p) + " = " + std::to_string(d) + " * " +
                                                   std::to_string(p / d));
        FieldSpec f;
        f.kind_ = Kind::prime;
        f.p_ = static_cast<std::uint32_t>(p);
        return f;
    }

    static FieldSpec rational() { return FieldSpec{}; }

    /// Parses the CLI descriptors "gf:p" and "q".
    static FieldSpec parse(std::string_view text) {
        if (text == "q" || text == "Q" || text == "rational") return rational();
        if (text.starts_with("gf:") || text.starts_with("GF:")) {
            auto digits = text.substr(3);
            if (digits.empty() || digits.size() > 9 ||
                !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
                raise(errc::unsupported_kind, "bad field descriptor '" + std::string(text) + "'");
            return prime(std::stoll(std::string(digits)));
        }
        raise(errc::unsupported_kind, "bad field descriptor '" + std::string(text) + "'");
    }

    Kind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == Kind::prime; }
    bool is_rational() const noexcept { return kind_ == Kind::rational; }
    /// Modulus for prime fields; 0 for the rationals.
    std::uint32_t modulus() const noexcept { return p_; }
    std::uint32_t characteristic() const noexcept { return p_; }

    /// Number of elements; 0 stands for infinite.
    std::uint64_t order() const noexcept { return p_; }

    std::string name() const { return is_prime() ? "GF(" + std::to_string(p_) + ")" : "Q"; }
    std::string descriptor() const { return is_prime() ? "gf:" + std::to_string(p_) : "q"; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    Kind kind_ = Kind::rational;
    std::uint32_t p_ = 0;
};

inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

class Scalar {
public:
    Scalar() : field_(FieldSpec::rational()), value_(Rational(0)) {}

    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }

    static Scalar from_int(const FieldSpec& f, std::int64_t v) {
        if (f.is_prime()) {
            std::int64_t p = f.modulus();
            std::int64_t r = v % p;
            return Scalar(f, static_cast<std::uint32_t>(r < 0 ? r + p : r));
        }
        return Scalar(f, Rational(v));
    }

    static Scalar from_residue(const FieldSpec& f, std::uint32_t r) { return Scalar(f, r % f.modulus()); }

    static Scalar from_rational(const FieldSpec& f, const Rational& q) {
        if (f.is_prime()) {
            std::uint32_t p = f.modulus();
            BigInt num = boost::multiprecision::numerator(q) % p;
            BigInt den = boost::multiprecision::denominator(q) % p;
            if (num < 0) num += p;
            if (den == 0) raise(errc::division_by_zero, "denominator divisible by the characteristic");
            auto n = static_cast<std::uint32_t>(num);
            auto d = static_cast<std::uint32_t>(den);
            return Scalar(f, static_cast<std::uint32_t>(std::uint64_t{n} * mod_inverse(d, p) % p));
        }
        return Scalar(f, q);
    }

    /// Canonical text encoding: residue for prime fields, "n" or "n/d" for rationals.
    /// Non-canonical input is a FieldMismatch (out-of-range residue, fraction in a
    /// prime field) or a ParseError (malformed text).
    static Scalar parse(const FieldSpec& f, std::string_view text) {
        auto is_digits = [](std::string_view s) {
            return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
        };
        if (f.is_prime()) {
            if (!is_digits(text) || text.size() > 9) {
                if (text.find('/') != std::string_view::npos || text.starts_with('-'))
                    raise(errc::field_mismatch, "'" + std::string(text) + "' is not a residue of " + f.name());
                raise(errc::parse_error, "malformed residue '" + std::string(text) + "'");
            }
            auto v = std::stoull(std::string(text));
            if (v >= f.modulus())
                raise(errc::field_mismatch, "residue " + std::string(text) + " not in [0, " +
                                                std::to_string(f.modulus()) + ")");
            return Scalar(f, static_cast<std::uint32_t>(v));
        }
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        std::string_view num_digits = num.starts_with('-') ? num.substr(1) : num;
        if (!is_digits(num_digits) || !is_digits(den))
            raise(errc::parse_error, "malformed rational '" + std::string(text) + "'");
        BigInt n{std::string(num)}, d{std::string(den)};
        if (d == 0) raise(errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
        return Scalar(f, Rational(n, d));
    }

    const FieldSpec& field() const noexcept { return field_; }

    bool is_zero() const {
        if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
        return std::get<Rational>(value_) == 0;
    }
    bool is_one() const {
        if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
        return std::get<Rational>(value_) == 1;
    }

    std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
    const Rational& rational() const { return std::get<Rational>(value_); }

    std::string to_string() const {
        if (auto r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
        return std::get<Rational>(value_).str();
    }

    Scalar operator+(const Scalar& o) const {
        check(o);
        if (field_.is_prime()) return Scalar(field_, (residue() + o.residue()) % field_.modulus());
        return Scalar(field_, rational() + o.rational());
    }
    Scalar operator-(const Scalar& o) const {
        check(o);
        if (field_.is_prime())
            return Scalar(field_, (residue() + field_.modulus() - o.residue()) % field_.modulus());
        return Scalar(field_, rational() - o.rational());
    }
    Scalar operator*(const Scalar& o) const {
        check(o);
        if (field_.is_prime())
            return Scalar(field_, static_cast<std::uint32_t>(std::uint64_t{residue()} * o.residue() %
                                                             field_.modulus()));
        return Scalar(field_, rational() * o.rational());
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
    Scalar operator-() const {
        if (field_.is_prime()) return Scalar(field_, (field_.modulus() - residue()) % field_.modulus());
        return Scalar(field_, -rational());
    }
    Scalar inv() const {
        if (is_zero()) raise(errc::division_by_zero, "inverse of zero in " + field_.name());
        if (field_.is_prime()) return Scalar(field_, mod_inverse(residue(), field_.modulus()));
        return Scalar(field_, Rational(1) / rational());
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Fused a += b * c, the inner step of every product and elimination loop.
    void add_product(const Scalar& b, const Scalar& c) {
        if (field_.is_prime()) {
            check(b);
            check(c);
            auto p = field_.modulus();
            std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(
                (std::uint64_t{residue()} + std::uint64_t{b.residue()} * c.residue()) % p);
            return;
        }
        *this += b * c;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    /// Residue order for prime fields, numeric order for the rationals.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        a.check(b);
        if (a.field_.is_prime()) return a.residue() <=> b.residue();
        if (a.rational() < b.rational()) return std::strong_ordering::less;
        if (b.rational() < a.rational()) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Scalar(const FieldSpec& f, std::uint32_t r) : field_(f), value_(r) {}
    Scalar(const FieldSpec& f, Rational q) : field_(f), value_(std::move(q)) {}

    void check(const Scalar& o) const {
        if (!(field_ == o.field_))
            raise(errc::field_mismatch, "operands from " + field_.name() + " and " + o.field_.name());
    }

    FieldSpec field_;
    std::variant<std::uint32_t, Rational> value_;
};

/// Error-checked arithmetic entry point mirroring the operator overloads.
enum class FieldOp { add, sub, mul, div, neg, inv };

inline Scalar field_op(const Scalar& a, const Scalar& b, FieldOp op) {
    switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
    case FieldOp::neg: return -a;
    case FieldOp::inv: return a.inv();
    }
    return a;
}

namespace detail {

inline bool perfect_square(const BigInt& v, BigInt& root) {
    if (v < 0) return false;
    root = boost::multiprecision::sqrt(v);
    return root * root == v;
}

inline std::vector<BigInt> positive_divisors(BigInt v) {
    if (v < 0) v = -v;
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            small.push_back(d);
            if (d * d != v) large.push_back(v / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace detail

/**
 * Root set of α² + sα + e in the field of s and e, sorted ascending.
 *
 * Prime fields are scanned exhaustively; over Q a root exists iff the
 * discriminant is the square of a rational.
 */
inline std::vector<Scalar> quadratic_roots(const Scalar& s, const Scalar& e) {
    const FieldSpec& f = s.field();
    if (!(f == e.field())) raise(errc::field_mismatch, "quadratic coefficients from different fields");
    std::vector<Scalar> roots;
    if (f.is_prime()) {
        for (std::uint32_t a = 0; a < f.modulus(); ++a) {
            Scalar alpha = Scalar::from_residue(f, a);
            if ((alpha * alpha + s * alpha + e).is_zero()) roots.push_back(alpha);
        }
        return roots;
    }
    Rational disc = s.rational() * s.rational() - 4 * e.rational();
    BigInt num_root, den_root;
    if (!detail::perfect_square(boost::multiprecision::numerator(disc), num_root) ||
        !detail::perfect_square(boost::multiprecision::denominator(disc), den_root))
        return roots;
    Rational sq(num_root, den_root);
    roots.push_back(Scalar::from_rational(f, (-s.rational() - sq) / 2));
    if (sq != 0) roots.push_back(Scalar::from_rational(f, (-s.rational() + sq) / 2));
    return roots;
}

inline std::vector<Scalar> quadratic_roots(const Scalar& s, const Scalar& e, const FieldSpec& field) {
    if (!(s.field() == field) || !(e.field() == field))
        raise(errc::field_mismatch, "coefficients not in " + field.name());
    return quadratic_roots(s, e);
}

/// Distinct rational roots of Σ coeffs[i] xⁱ (rational-root theorem), ascending.
/// The zero polynomial has no well-defined root set and yields an empty result.
inline std::vector<Rational> rational_roots(std::span<const Rational> coeffs) {
    std::vector<BigInt> ints;
    BigInt lcm_den = 1;
    for (const auto& c : coeffs) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c));
    for (const auto& c : coeffs)
        ints.push_back(boost::multiprecision::numerator(c) * (lcm_den / boost::multiprecision::denominator(c)));
    while (!ints.empty() && ints.back() == 0) ints.pop_back();
    std::vector<Rational> roots;
    if (ints.empty()) return roots;
    std::size_t shift = 0;
    while (shift < ints.size() && ints[shift] == 0) ++shift;
    if (shift > 0) roots.push_back(Rational(0));
    ints.erase(ints.begin(), ints.begin() + static_cast<std::ptrdiff_t>(shift));
    if (ints.size() < 2) return roots;
    auto eval = [&](const Rational& x) {
        Rational acc = 0;
        for (auto it = ints.rbegin(); it != ints.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    };
    for (const auto& num : detail::positive_divisors(ints.front()))
        for (const auto& den : detail::positive_divisors(ints.back()))
            for (int sign : {-1, 1}) {
                Rational cand(sign * num, den);
                if (eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace leibniz
