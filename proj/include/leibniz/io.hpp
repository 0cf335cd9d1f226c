#pragma once

// Algebra file format: canonical JSON with keys field, dim, basis, table.
// Writers put exactly one space after each ',' and ':' and nothing else;
// readers accept any JSON whitespace.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "leibniz/algebra.hpp"

namespace leibniz {

inline std::string field_to_json(const FieldSpec& f, bool spaced) {
    const char* sep = spaced ? ": " : ":";
    const char* comma = spaced ? ", " : ",";
    if (f.is_prime())
        return std::string("{\"kind\"") + sep + "\"prime\"" + comma + "\"p\"" + sep + std::to_string(f.modulus()) +
               "}";
    return std::string("{\"kind\"") + sep + "\"rational\"}";
}

inline std::string write_algebra(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    std::string out = "{\"field\": " + field_to_json(a.field(), true) + ", \"dim\": " + std::to_string(n) +
                      ", \"basis\": [";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ", ";
        out += nlohmann::json(a.basis_names()[i]).dump();
    }
    out += "], \"table\": [";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out += ", ";
            out += "[";
            for (std::size_t k = 0; k < n; ++k) {
                if (k) out += ", ";
                out += "\"" + a.at(i, j, k).to_string() + "\"";
            }
            out += "]";
        }
        out += "]";
    }
    out += "]}\n";
    return out;
}

inline FieldSpec field_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        raise(errc::parse_error, "field must be an object with a string \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind != "prime") raise(errc::parse_error, "unknown field kind '" + kind + "'");
    if (!j.contains("p") || !j["p"].is_number_integer()) raise(errc::parse_error, "prime field without integer p");
    try {
        return FieldSpec::prime(j["p"].get<std::int64_t>());
    } catch (const Error& e) {
        raise(errc::parse_error, std::string("non-prime modulus: ") + e.what());
    }
}

inline Scalar scalar_from_json(const FieldSpec& f, const nlohmann::json& j) {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(f, std::to_string(j.get<std::int64_t>()));
    raise(errc::parse_error, "scalar must be a string or integer, got " + j.dump());
}

inline AlgebraTable read_algebra(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        raise(errc::parse_error, "at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) raise(errc::parse_error, "document is not an object");
    for (const char* key : {"field", "dim", "basis", "table"})
        if (!doc.contains(key)) raise(errc::parse_error, std::string("missing key \"") + key + "\"");
    FieldSpec f = field_from_json(doc["field"]);
    if (!doc["dim"].is_number_unsigned()) raise(errc::parse_error, "dim must be a non-negative integer");
    const auto n = doc["dim"].get<std::size_t>();
    const auto& basis = doc["basis"];
    if (!basis.is_array()) raise(errc::parse_error, "basis must be an array");
    if (basis.size() != n) raise(errc::dimension_mismatch, "basis has " + std::to_string(basis.size()) + " names");
    std::vector<std::string> names;
    for (const auto& b : basis) {
        if (!b.is_string()) raise(errc::parse_error, "basis names must be strings");
        names.push_back(b.get<std::string>());
    }
    const auto& table = doc["table"];
    auto expect = [&](const nlohmann::json& j, const std::string& where) {
        if (!j.is_array()) raise(errc::parse_error, where + " is not an array");
        if (j.size() != n)
            raise(errc::dimension_mismatch, where + " has " + std::to_string(j.size()) + " entries, expected " +
                                                std::to_string(n));
    };
    expect(table, "table");
    std::vector<Scalar> constants;
    constants.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        expect(table[i], "table[" + std::to_string(i) + "]");
        for (std::size_t j = 0; j < n; ++j) {
            const auto& row = table[i][j];
            expect(row, "table[" + std::to_string(i) + "][" + std::to_string(j) + "]");
            for (std::size_t k = 0; k < n; ++k) constants.push_back(scalar_from_json(f, row[k]));
        }
    }
    return AlgebraTable(f, n, std::move(names), std::move(constants));
}

inline AlgebraTable load_algebra(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::io_error, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return read_algebra(buf.str());
}

inline void save_algebra(const AlgebraTable& a, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(errc::io_error, "cannot write " + path);
    out << write_algebra(a);
}

}  // namespace leibniz
