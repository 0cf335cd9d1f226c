#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

enum class errc {
    non_prime_modulus,
    unsupported_kind,
    division_by_zero,
    field_mismatch,
    dimension_mismatch,
    parse_error,
    singular_matrix,
    not_leibniz,
    infinite_field_unsupported,
    not_an_ideal,
    dimension_guard,
    malformed_spec,
    wrong_characteristic,
    infinite_field_sweep,
    unsupported_field_dim,
    orbit_budget_exceeded,
    budget_exceeded,
    io_error,
    schema_error,
};

constexpr std::string_view errc_name(errc code) noexcept {
    switch (code) {
    case errc::non_prime_modulus: return "NonPrimeModulus";
    case errc::unsupported_kind: return "UnsupportedKind";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::parse_error: return "ParseError";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::not_leibniz: return "NotLeibniz";
    case errc::infinite_field_unsupported: return "InfiniteFieldUnsupported";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::dimension_guard: return "DimensionGuard";
    case errc::malformed_spec: return "MalformedSpec";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::infinite_field_sweep: return "InfiniteFieldSweep";
    case errc::unsupported_field_dim: return "UnsupportedFieldDim";
    case errc::orbit_budget_exceeded: return "OrbitBudgetExceeded";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::io_error: return "IOError";
    case errc::schema_error: return "SchemaError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace leibniz
