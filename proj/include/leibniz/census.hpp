#pragma once

/**
 * @file census.hpp
 * @brief Exhaustive census of Leibniz structure-constant tables at small
 *        (dim, p), deduplicated up to isomorphism, with a per-class
 *        assertion suite.
 *
 * Enumeration is a depth-first assignment of the n³ constants in flat order
 * c[0][0][0], c[0][0][1], ... Each scalar component of each basis-triple
 * defect is evaluated at the depth where its last constant is assigned, so
 * a violation prunes the whole subtree below it. Pruned leaves are counted,
 * never materialized. Workers split the first few levels by prefix index
 * modulo the worker count.
 *
 * A table's key is its flat constant array read as a base-p number with
 * c[0][0][0] most significant; key order is lexicographic scalar order, so
 * the smallest key in an orbit is the canonical form.
 */

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "leibniz/classify.hpp"
#include "leibniz/io.hpp"

namespace leibniz {

inline bool census_permitted(std::uint32_t q, std::size_t n) {
    static constexpr std::array<std::pair<std::uint32_t, std::size_t>, 7> allowed{
        {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}};
    return std::find(allowed.begin(), allowed.end(), std::make_pair(q, n)) != allowed.end();
}

inline void require_census_scope(const FieldSpec& f, std::size_t n) {
    if (!f.is_prime() || !census_permitted(f.modulus(), n))
        raise(errc::budget_exceeded, "census over " + f.name() + " at dimension " + std::to_string(n) +
                                         " is outside the permitted set");
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline Residues key_to_residues(std::uint64_t key, std::uint32_t q, std::size_t n) {
    const std::size_t total = n * n * n;
    Residues r(total);
    for (std::size_t f = total; f-- > 0;) {
        r[f] = static_cast<std::uint8_t>(key % q);
        key /= q;
    }
    return r;
}

inline std::uint64_t residues_to_key(const Residues& r, std::uint32_t q) {
    std::uint64_t key = 0;
    for (auto v : r) key = key * q + v;
    return key;
}

/// Pruned enumeration of all constant arrays for one (dim, p).
class TableEnumerator {
public:
    struct Partition {
        std::uint64_t raw = 0;                 // tables covered, valid or not
        std::vector<std::uint64_t> valid_keys;  // ascending
    };

    TableEnumerator(std::size_t n, std::uint32_t q) : n_(n), q_(q), total_(n * n * n) {
        checks_.resize(total_);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        std::size_t level = 0;
                        for (std::size_t m = 0; m < n; ++m)
                            level = std::max({level, at(j, k, m), at(i, m, l), at(i, j, m), at(m, k, l),
                                              at(i, k, m), at(j, m, l)});
                        checks_[level].push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
                                                  static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(l)});
                    }
        prefix_len_ = 0;
        while (prefix_len_ < total_ && ipow(q_, prefix_len_) < 4096) ++prefix_len_;
    }

    std::uint64_t raw_total() const { return ipow(q_, total_); }
    std::uint64_t prefix_count() const { return ipow(q_, prefix_len_); }

    /// Tables whose prefix index is congruent to `worker` modulo `workers`.
    Partition run(unsigned worker, unsigned workers) const {
        Partition out;
        std::vector<std::uint8_t> c(total_, 0);
        const std::uint64_t prefixes = prefix_count();
        const std::uint64_t below = ipow(q_, total_ - prefix_len_);
        for (std::uint64_t pre = worker; pre < prefixes; pre += workers) {
            out.raw += below;
            std::uint64_t rest = pre;
            for (std::size_t f = prefix_len_; f-- > 0;) {
                c[f] = static_cast<std::uint8_t>(rest % q_);
                rest /= q_;
            }
            bool ok = true;
            for (std::size_t f = 0; f < prefix_len_ && ok; ++f) ok = level_holds(c, f);
            if (ok) descend(c, prefix_len_, pre, out.valid_keys);
        }
        return out;
    }

private:
    struct Check {
        std::uint8_t i, j, k, l;
    };

    std::size_t at(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }

    bool level_holds(const std::vector<std::uint8_t>& c, std::size_t level) const {
        const std::size_t n = n_;
        for (const Check& ch : checks_[level]) {
            std::uint32_t pos = 0, neg = 0;
            for (std::size_t m = 0; m < n; ++m) {
                pos += std::uint32_t{c[at(ch.j, ch.k, m)]} * c[at(ch.i, m, ch.l)];
                neg += std::uint32_t{c[at(ch.i, ch.j, m)]} * c[at(m, ch.k, ch.l)] +
                       std::uint32_t{c[at(ch.i, ch.k, m)]} * c[at(ch.j, m, ch.l)];
            }
            if ((pos + q_ * q_ * 2 * n - neg) % q_ != 0) return false;
        }
        return true;
    }

    void descend(std::vector<std::uint8_t>& c, std::size_t level, std::uint64_t key,
                 std::vector<std::uint64_t>& valid) const {
        if (level == total_) {
            valid.push_back(key);
            return;
        }
        for (std::uint32_t v = 0; v < q_; ++v) {
            c[level] = static_cast<std::uint8_t>(v);
            if (level_holds(c, level)) descend(c, level + 1, key * q_ + v, valid);
        }
        c[level] = 0;
    }

    std::size_t n_;
    std::uint32_t q_;
    std::size_t total_;
    std::size_t prefix_len_;
    std::vector<std::vector<Check>> checks_;
};

/// Streams every identity-valid table of one partition.
inline void enumerate_tables(std::size_t n, const FieldSpec& f, unsigned worker, unsigned workers,
                             const std::function<void(const AlgebraTable&)>& visit) {
    require_census_scope(f, n);
    TableEnumerator e(n, f.modulus());
    for (auto key : e.run(worker, workers).valid_keys)
        visit(from_residues(f, n, key_to_residues(key, f.modulus(), n)));
}

enum class Check : std::uint8_t { pass, fail, vacuous };

inline std::string_view check_name(Check c) {
    switch (c) {
    case Check::pass: return "pass";
    case Check::fail: return "fail";
    case Check::vacuous: return "n/a";
    }
    return "?";
}

inline Check parse_check(const std::string& s) {
    if (s == "pass") return Check::pass;
    if (s == "fail") return Check::fail;
    if (s == "n/a") return Check::vacuous;
    raise(errc::schema_error, "unknown assertion result '" + s + "'");
}

/// Assertion identifiers, in report order.
///   a  nilpotent <=> every maximal subalgebra is an ideal
///   b  exactly one maximal subalgebra <=> cyclic and nilpotent
///   c  property => every maximal M nilpotent, and M an ideal or cyclic
///   d  property and dim(L/L²) <= 1 => classify yields a re-verified case
///   e  solvable => a full flag of ideals exists
///   f  case1 => every subalgebra an ideal, cyclic or abelian
///   g  Leib(L) ⊆ left annihilator
inline constexpr std::array<const char*, 7> assertion_ids{"a", "b", "c", "d", "e", "f", "g"};

struct CensusFlags {
    bool leibniz = true;
    bool lie = false;
    bool nilpotent = false;
    bool solvable = false;
    bool cyclic = false;
    std::size_t dim_L_mod_L2 = 0;
    bool property_P = false;
    bool ideal_chain = false;
    std::size_t maximal_count = 0;
    std::string classification;

    friend bool operator==(const CensusFlags&, const CensusFlags&) = default;
};

struct CensusRecord {
    AlgebraTable table;  // canonical representative
    std::uint64_t orbit_count = 0;
    CensusFlags flags;
    std::array<Check, assertion_ids.size()> assertions{};

    bool failed() const {
        return std::any_of(assertions.begin(), assertions.end(), [](Check c) { return c == Check::fail; });
    }

    friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusFailure {
    std::string assertion;
    std::size_t record = 0;
};

struct CensusReport {
    std::size_t dim = 0;
    FieldSpec field;
    unsigned workers = 1;  // in-memory only; saved reports do not depend on it
    std::uint64_t raw_total = 0;
    std::uint64_t valid_total = 0;
    std::vector<CensusRecord> records;
    double enumerate_seconds = 0;
    double classify_seconds = 0;

    std::vector<CensusFailure> failures() const {
        std::vector<CensusFailure> out;
        for (std::size_t r = 0; r < records.size(); ++r)
            for (std::size_t a = 0; a < assertion_ids.size(); ++a)
                if (records[r].assertions[a] == Check::fail) out.push_back({assertion_ids[a], r});
        return out;
    }

    /// Per assertion: {pass, fail, n/a} counts.
    std::map<std::string, std::array<std::size_t, 3>> assertion_summary() const {
        std::map<std::string, std::array<std::size_t, 3>> out;
        for (const auto* id : assertion_ids) out[id] = {0, 0, 0};
        for (const auto& rec : records)
            for (std::size_t a = 0; a < assertion_ids.size(); ++a)
                ++out[assertion_ids[a]][static_cast<std::size_t>(rec.assertions[a])];
        return out;
    }
};

/// Flags and the assertion suite for one isomorphism class.
inline CensusRecord analyze_class(const AlgebraTable& t, std::uint64_t orbit_count, bool assertions = true) {
    CensusRecord rec{t, orbit_count, {}, {}};
    rec.assertions.fill(Check::vacuous);
    CensusFlags& fl = rec.flags;
    fl.leibniz = is_leibniz(t);
    if (!fl.leibniz) throw std::logic_error("census produced a table violating the identity");
    fl.lie = is_lie_table(t);
    fl.nilpotent = is_nilpotent(t);
    fl.solvable = is_solvable(t);
    fl.cyclic = find_cyclic_generator(t).has_value();
    fl.dim_L_mod_L2 = dim_mod_derived(t);
    const SubalgebraLattice lat = build_lattice(t);
    const PropertyPVerdict prop = property_P(lat);
    fl.property_P = prop.holds;
    fl.ideal_chain = ideal_chain(lat).has_value();
    fl.maximal_count = lat.maximal.size();
    const ClassificationVerdict verdict = classify(t);
    fl.classification = verdict.label();
    if (!assertions) return rec;

    auto set = [&](char id, bool ok) { rec.assertions[static_cast<std::size_t>(id - 'a')] = ok ? Check::pass : Check::fail; };
    set('a', fl.nilpotent == nilpotency_via_maximal(lat));
    set('b', (lat.maximal.size() == 1) == (fl.cyclic && fl.nilpotent));
    if (prop.holds) {
        bool ok = true;
        for (const auto& m : lat.maximal) {
            AlgebraTable sub = induced_table(t, m);
            ok = ok && is_nilpotent(sub) && (is_ideal(t, m) || find_cyclic_generator(sub).has_value());
        }
        set('c', ok);
        if (fl.dim_L_mod_L2 <= 1) set('d', is_case(verdict.outcome) && verdict.reverified);
    }
    if (fl.solvable) set('e', fl.ideal_chain);
    if (verdict.outcome == Outcome::case1) set('f', case1_corollary(lat));
    set('g', contains(left_annihilator(t), leib_ideal(t)));
    return rec;
}

struct CensusOptions {
    unsigned workers = 1;
    bool assertions = true;
};

inline CensusReport run_census(std::size_t n, const FieldSpec& f, CensusOptions opt = {}) {
    require_census_scope(f, n);
    const unsigned workers = std::max(1u, opt.workers);
    const std::uint32_t q = f.modulus();
    CensusReport report;
    report.dim = n;
    report.field = f;
    report.workers = workers;

    auto t0 = std::chrono::steady_clock::now();
    TableEnumerator e(n, q);
    std::vector<TableEnumerator::Partition> parts(workers);
    if (workers == 1) {
        parts[0] = e.run(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&, w] { parts[w] = e.run(w, workers); });
    }
    std::vector<std::uint64_t> valid;
    for (auto& p : parts) {
        report.raw_total += p.raw;
        valid.insert(valid.end(), p.valid_keys.begin(), p.valid_keys.end());
    }
    std::sort(valid.begin(), valid.end());
    report.valid_total = valid.size();
    if (report.raw_total != e.raw_total()) throw std::logic_error("partitions do not cover the table space");

    // Orbits: the smallest unassigned valid key is always an orbit minimum.
    const auto group = enumerate_gl(n, q);
    std::vector<bool> assigned(valid.size(), false);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;  // (canonical key, orbit size)
    std::uint64_t orbit_sum = 0;
    for (std::size_t idx = 0; idx < valid.size(); ++idx) {
        if (assigned[idx]) continue;
        const Residues base = key_to_residues(valid[idx], q, n);
        std::vector<std::uint64_t> orbit;
        orbit.reserve(group.size());
        for (const auto& g : group) orbit.push_back(residues_to_key(transform_residues(base, n, g, q), q));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        if (orbit.front() != valid[idx]) throw std::logic_error("orbit minimum precedes an unassigned table");
        for (auto key : orbit) {
            auto it = std::lower_bound(valid.begin(), valid.end(), key);
            if (it == valid.end() || *it != key) throw std::logic_error("isomorphic image failed the identity");
            assigned[static_cast<std::size_t>(it - valid.begin())] = true;
        }
        classes.emplace_back(valid[idx], orbit.size());
        orbit_sum += orbit.size();
    }
    if (orbit_sum != report.valid_total) throw std::logic_error("orbit sizes do not sum to the valid count");
    auto t1 = std::chrono::steady_clock::now();

    report.records.resize(classes.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t c = next++; c < classes.size(); c = next++) {
            AlgebraTable t = from_residues(f, n, key_to_residues(classes[c].first, q, n));
            report.records[c] = analyze_class(t, classes[c].second, opt.assertions);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    auto t2 = std::chrono::steady_clock::now();
    report.enumerate_seconds = std::chrono::duration<double>(t1 - t0).count();
    report.classify_seconds = std::chrono::duration<double>(t2 - t1).count();
    return report;
}

// ------------------------------------------------------------ persistence

namespace detail {

inline nlohmann::ordered_json table_json(const AlgebraTable& t) {
    const std::size_t n = t.dim();
    auto out = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < n; ++j) {
            auto entry = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < n; ++k) entry.push_back(t.at(i, j, k).to_string());
            row.push_back(std::move(entry));
        }
        out.push_back(std::move(row));
    }
    return out;
}

inline nlohmann::ordered_json field_json(const FieldSpec& f) {
    nlohmann::ordered_json j;
    j["kind"] = f.is_prime() ? "prime" : "rational";
    if (f.is_prime()) j["p"] = f.modulus();
    return j;
}

}  // namespace detail

inline std::string census_header_line(const CensusReport& r) {
    nlohmann::ordered_json h;
    h["dim"] = r.dim;
    h["field"] = detail::field_json(r.field);
    h["raw_total"] = r.raw_total;
    h["valid_total"] = r.valid_total;
    h["classes"] = r.records.size();
    return h.dump();
}

inline std::string census_record_line(const CensusRecord& rec) {
    nlohmann::ordered_json j;
    j["table"] = detail::table_json(rec.table);
    j["orbit_count"] = rec.orbit_count;
    const auto& fl = rec.flags;
    nlohmann::ordered_json flags;
    flags["leibniz"] = fl.leibniz;
    flags["lie"] = fl.lie;
    flags["nilpotent"] = fl.nilpotent;
    flags["solvable"] = fl.solvable;
    flags["cyclic"] = fl.cyclic;
    flags["dim_L_mod_L2"] = fl.dim_L_mod_L2;
    flags["property_P"] = fl.property_P;
    flags["ideal_chain"] = fl.ideal_chain;
    flags["maximal_count"] = fl.maximal_count;
    flags["classification"] = fl.classification;
    j["flags"] = std::move(flags);
    nlohmann::ordered_json checks;
    for (std::size_t a = 0; a < assertion_ids.size(); ++a) checks[assertion_ids[a]] = check_name(rec.assertions[a]);
    j["assertions"] = std::move(checks);
    return j.dump();
}

inline std::string serialize_report(const CensusReport& r) {
    std::string out = census_header_line(r) + "\n";
    for (const auto& rec : r.records) out += census_record_line(rec) + "\n";
    return out;
}

inline void save_report(const CensusReport& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(errc::io_error, "cannot write " + path);
    out << serialize_report(r);
    if (!out) raise(errc::io_error, "write to " + path + " failed");
}

inline CensusReport parse_report(std::istream& in) {
    auto schema = [](std::size_t line, const std::string& what) {
        raise(errc::schema_error, "line " + std::to_string(line) + ": " + what);
    };
    auto parse_line = [&](const std::string& text, std::size_t line) {
        try {
            auto j = nlohmann::json::parse(text);
            if (!j.is_object()) schema(line, "expected a JSON object");
            return j;
        } catch (const nlohmann::json::parse_error& e) {
            schema(line, e.what());
        }
        return nlohmann::json{};
    };
    CensusReport r;
    std::string text;
    if (!std::getline(in, text)) schema(1, "missing header");
    auto h = parse_line(text, 1);
    std::size_t classes = 0;
    try {
        r.dim = h.at("dim").get<std::size_t>();
        r.field = field_from_json(h.at("field"));
        r.raw_total = h.at("raw_total").get<std::uint64_t>();
        r.valid_total = h.at("valid_total").get<std::uint64_t>();
        classes = h.at("classes").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        schema(1, std::string("bad header: ") + e.what());
    } catch (const Error& e) {
        schema(1, e.what());
    }
    std::size_t line = 1;
    while (std::getline(in, text)) {
        ++line;
        if (text.empty()) schema(line, "empty line");
        auto j = parse_line(text, line);
        CensusRecord rec;
        try {
            const auto& tj = j.at("table");
            if (tj.size() != r.dim) schema(line, "table dimension differs from the header");
            nlohmann::json doc{{"field", h.at("field")},
                               {"dim", r.dim},
                               {"basis", nlohmann::json::array()},
                               {"table", tj}};
            for (std::size_t i = 0; i < r.dim; ++i) doc["basis"].push_back("b" + std::to_string(i + 1));
            rec.table = read_algebra(doc.dump());
            rec.orbit_count = j.at("orbit_count").get<std::uint64_t>();
            const auto& fl = j.at("flags");
            rec.flags.leibniz = fl.at("leibniz").get<bool>();
            rec.flags.lie = fl.at("lie").get<bool>();
            rec.flags.nilpotent = fl.at("nilpotent").get<bool>();
            rec.flags.solvable = fl.at("solvable").get<bool>();
            rec.flags.cyclic = fl.at("cyclic").get<bool>();
            rec.flags.dim_L_mod_L2 = fl.at("dim_L_mod_L2").get<std::size_t>();
            rec.flags.property_P = fl.at("property_P").get<bool>();
            rec.flags.ideal_chain = fl.at("ideal_chain").get<bool>();
            rec.flags.maximal_count = fl.at("maximal_count").get<std::size_t>();
            rec.flags.classification = fl.at("classification").get<std::string>();
            const auto& ch = j.at("assertions");
            for (std::size_t a = 0; a < assertion_ids.size(); ++a)
                rec.assertions[a] = parse_check(ch.at(assertion_ids[a]).get<std::string>());
        } catch (const nlohmann::json::exception& e) {
            schema(line, e.what());
        } catch (const Error& e) {
            if (e.code() == errc::schema_error) throw;
            schema(line, e.what());
        }
        r.records.push_back(std::move(rec));
    }
    if (r.records.size() != classes)
        schema(line + 1, "header announces " + std::to_string(classes) + " classes, found " +
                             std::to_string(r.records.size()));
    std::uint64_t orbit_sum = 0;
    for (const auto& rec : r.records) orbit_sum += rec.orbit_count;
    if (orbit_sum != r.valid_total) schema(1, "orbit counts do not sum to valid_total");
    return r;
}

inline CensusReport load_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::io_error, "cannot open " + path);
    return parse_report(in);
}

}  // namespace leibniz
