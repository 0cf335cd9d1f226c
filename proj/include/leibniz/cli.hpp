#pragma once

/**
 * @file cli.hpp
 * @brief Command dispatch for the `leibniz` tool.
 *
 * Exit codes: 0 success / property holds, 1 property fails or identity
 * violated, 2 usage or malformed input, 3 unsupported field or size,
 * 4 a theorem-level assertion failed (classify anomaly, census failure).
 */

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "leibniz/census.hpp"
#include "leibniz/families.hpp"

namespace leibniz::cli {

enum exit_code : int { ok = 0, property_fails = 1, usage = 2, unsupported = 3, falsifier = 4 };

inline int exit_code_for(errc e) {
    switch (e) {
    case errc::not_leibniz: return property_fails;
    case errc::non_prime_modulus:
    case errc::unsupported_kind:
    case errc::infinite_field_unsupported:
    case errc::unsupported_field_dim:
    case errc::dimension_guard:
    case errc::wrong_characteristic:
    case errc::infinite_field_sweep:
    case errc::orbit_budget_exceeded:
    case errc::budget_exceeded: return unsupported;
    default: return usage;
    }
}

using json = nlohmann::ordered_json;

// ------------------------------------------------------------ rendering

/// "x + 2*a2", "-1/2*e1", "0".
inline std::string render_vector(const AlgebraTable& t, const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string coef = v[i].to_string();
        bool negative = coef.starts_with('-');
        if (negative) coef.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (coef != "1") out += coef + "*";
        out += t.basis_names()[i];
    }
    return out.empty() ? "0" : out;
}

inline std::string render_subspace(const AlgebraTable& t, const Subspace& s) {
    if (s.is_zero()) return "0";
    std::string out = "span{";
    for (std::size_t r = 0; r < s.rows().size(); ++r) out += (r ? ", " : "") + render_vector(t, s.rows()[r]);
    return out + "}";
}

inline json vector_json(const Vector& v) {
    json j = json::array();
    for (const auto& s : v) j.push_back(s.to_string());
    return j;
}

inline json subspace_json(const AlgebraTable& t, const Subspace& s) {
    json rows = json::array();
    for (const auto& r : s.rows()) rows.push_back(vector_json(r));
    json j;
    j["dim"] = s.dim();
    j["basis"] = std::move(rows);
    j["text"] = render_subspace(t, s);
    return j;
}

inline std::string triple_name(const AlgebraTable& t, std::size_t i, std::size_t j, std::size_t k) {
    const auto& n = t.basis_names();
    return "(" + n[i] + ", " + n[j] + ", " + n[k] + ")";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// A command's result: a structured document, its text rendering, and the exit code.
struct Rendered {
    json doc = json::object();
    std::ostringstream text;
    int code = ok;
};

// ------------------------------------------------------------ commands

inline void cmd_check(const AlgebraTable& t, Rendered& r) {
    const ViolationReport rep = leibniz_check(t);
    r.doc["leibniz"] = rep.empty();
    json vs = json::array();
    r.text << "Leibniz: " << yes_no(rep.empty()) << "\n";
    for (const auto& v : rep.violations) {
        json j;
        j["triple"] = {t.basis_names()[v.i], t.basis_names()[v.j], t.basis_names()[v.k]};
        j["defect"] = vector_json(v.defect);
        vs.push_back(std::move(j));
        r.text << "  violated at " << triple_name(t, v.i, v.j, v.k) << ": defect " << render_vector(t, v.defect)
               << "\n";
    }
    r.doc["violations"] = std::move(vs);
    r.code = rep.empty() ? ok : property_fails;
}

inline json series_json(const AlgebraTable& t, const SeriesReport& s, std::ostream& text, const char* label) {
    json terms = json::array();
    text << label << ":";
    for (const auto& term : s.terms) {
        terms.push_back(subspace_json(t, term));
        text << " " << term.dim();
    }
    text << (s.terminates_at_zero ? " (reaches 0)" : " (stabilizes)") << "\n";
    json j;
    j["dims"] = json::array();
    for (const auto& term : s.terms) j["dims"].push_back(term.dim());
    j["terms"] = std::move(terms);
    j["terminates_at_zero"] = s.terminates_at_zero;
    return j;
}

inline void cmd_analyze(const AlgebraTable& t, Rendered& r) {
    if (auto v = first_violation(t)) {
        r.doc["leibniz"] = false;
        r.doc["violation"] = {t.basis_names()[v->i], t.basis_names()[v->j], t.basis_names()[v->k]};
        r.text << "Leibniz: no, violated at " << triple_name(t, v->i, v->j, v->k) << "\n";
        r.code = property_fails;
        return;
    }
    r.doc["leibniz"] = true;
    r.doc["dim"] = t.dim();
    r.doc["field"] = t.field().name();
    r.text << "Leibniz: yes\n" << "dim " << t.dim() << " over " << t.field().name() << "\n";
    const auto ds = derived_series(t);
    const auto lcs = lower_central_series(t);
    r.doc["derived_series"] = series_json(t, ds, r.text, "derived series dims");
    r.doc["lower_central_series"] = series_json(t, lcs, r.text, "lower central series dims");
    r.doc["solvable"] = ds.terminates_at_zero;
    r.doc["nilpotent"] = lcs.terminates_at_zero;
    r.doc["lie"] = is_lie_table(t);
    r.text << "solvable: " << yes_no(ds.terminates_at_zero) << "\nnilpotent: " << yes_no(lcs.terminates_at_zero)
           << "\nLie: " << yes_no(is_lie_table(t)) << "\n";
    if (t.field().is_prime()) {
        auto gen = find_cyclic_generator(t);
        r.doc["cyclic"] = gen.has_value();
        r.doc["generator"] = gen ? vector_json(*gen) : json(nullptr);
        r.text << "cyclic: " << (gen ? "yes, generated by " + render_vector(t, *gen) : std::string("no")) << "\n";
    } else {
        r.doc["cyclic"] = nullptr;
        r.doc["generator"] = nullptr;
        r.text << "cyclic: not decided over Q (generator search needs a finite field)\n";
    }
    r.doc["dim_L_mod_L2"] = dim_mod_derived(t);
    r.text << "dim L/L^2: " << dim_mod_derived(t) << "\n";
    const Subspace leib = leib_ideal(t);
    const Subspace ann = left_annihilator(t);
    r.doc["leib"] = subspace_json(t, leib);
    r.doc["left_annihilator"] = subspace_json(t, ann);
    r.text << "Leib(L): " << render_subspace(t, leib) << "\nleft annihilator: " << render_subspace(t, ann) << "\n";
    const QuotientResult q = quotient(t, leib);
    json qj;
    qj["dim"] = q.table.dim();
    qj["lie"] = is_lie_table(q.table);
    qj["abelian"] = derived_algebra(q.table).is_zero();
    qj["solvable"] = is_solvable(q.table);
    qj["nilpotent"] = is_nilpotent(q.table);
    r.text << "L/Leib(L): dim " << q.table.dim() << ", Lie " << yes_no(qj["lie"].get<bool>()) << ", abelian "
           << yes_no(qj["abelian"].get<bool>()) << ", solvable " << yes_no(qj["solvable"].get<bool>())
           << ", nilpotent " << yes_no(qj["nilpotent"].get<bool>()) << "\n";
    r.doc["quotient_by_leib"] = std::move(qj);
}

inline json witness_json(const AlgebraTable& t, const PropertyPWitness& w) {
    json j;
    j["second_maximal"] = subspace_json(t, w.sub);
    j["maximal"] = subspace_json(t, w.parent);
    return j;
}

inline void cmd_lattice(const AlgebraTable& t, Rendered& r) {
    const SubalgebraLattice lat = build_lattice(t);
    const PropertyPVerdict prop = property_P(lat);
    r.doc["subspaces"] = lat.subspace_total;
    r.doc["subalgebras"] = lat.all_subalgebras.size();
    r.doc["ideals"] = lat.ideals.size();
    r.text << "subspaces: " << lat.subspace_total << "\nsubalgebras: " << lat.all_subalgebras.size()
           << "\nideals: " << lat.ideals.size() << "\n";
    json maximal = json::array();
    r.text << "maximal subalgebras (" << lat.maximal.size() << "):\n";
    for (const auto& m : lat.maximal) {
        json j = subspace_json(t, m);
        j["ideal"] = is_ideal(t, m);
        r.text << "  " << render_subspace(t, m) << (is_ideal(t, m) ? "  [ideal]" : "") << "\n";
        maximal.push_back(std::move(j));
    }
    r.doc["maximal"] = std::move(maximal);
    json second = json::array();
    r.text << "second-maximal subalgebras (" << lat.second_maximal.size() << "):\n";
    for (const auto& sm : lat.second_maximal) {
        json j = subspace_json(t, sm.sub);
        j["ideal"] = is_ideal(t, sm.sub);
        j["parents"] = json::array();
        for (const auto& p : sm.parents) j["parents"].push_back(render_subspace(t, p));
        r.text << "  " << render_subspace(t, sm.sub) << (is_ideal(t, sm.sub) ? "  [ideal]" : "  [not an ideal]")
               << "\n";
        second.push_back(std::move(j));
    }
    r.doc["second_maximal"] = std::move(second);
    const Subspace frat = frattini(lat);
    const Subspace leib = leib_ideal(t);
    r.doc["frattini"] = subspace_json(t, frat);
    r.doc["leib"] = subspace_json(t, leib);
    r.text << "Frattini: " << render_subspace(t, frat) << "\nLeib(L): " << render_subspace(t, leib) << "\n";
    r.doc["property_P"] = prop.holds;
    r.doc["witness"] = prop.witness ? witness_json(t, *prop.witness) : json(nullptr);
    r.doc["failures"] = json::array();
    for (const auto& w : prop.failures) r.doc["failures"].push_back(witness_json(t, w));
    if (prop.holds) {
        r.text << "property P: holds\n";
    } else {
        r.text << "property P: FAILS, witness " << render_subspace(t, prop.witness->sub) << " maximal in "
               << render_subspace(t, prop.witness->parent) << "\n";
        r.code = property_fails;
    }
}

inline void cmd_classify(const AlgebraTable& t, Rendered& r) {
    const ClassificationVerdict v = classify(t);
    r.doc["verdict"] = outcome_name(v.outcome);
    r.doc["label"] = v.label();
    r.doc["params"] = json::array();
    for (const auto& p : v.params) r.doc["params"].push_back(p.to_string());
    r.doc["details"] = v.details;
    r.doc["x"] = v.x ? vector_json(*v.x) : json(nullptr);
    r.doc["a"] = v.a ? vector_json(*v.a) : json(nullptr);
    r.doc["witness"] = v.failure ? witness_json(t, *v.failure) : json(nullptr);
    r.doc["leib"] = v.leib ? subspace_json(t, *v.leib) : json(nullptr);
    r.doc["frattini"] = v.frattini ? subspace_json(t, *v.frattini) : json(nullptr);
    r.doc["maximal"] = json::array();
    for (const auto& m : v.maximal) r.doc["maximal"].push_back(subspace_json(t, m));
    r.doc["reverified"] = v.reverified;

    r.text << "verdict: " << v.label() << "\n";
    if (!v.details.empty()) r.text << "details: " << v.details << "\n";
    if (v.x) r.text << "x = " << render_vector(t, *v.x) << "  " << to_string(*v.x) << "\n";
    if (v.a) r.text << "a = " << render_vector(t, *v.a) << "  " << to_string(*v.a) << "\n";
    if (v.failure)
        r.text << "witness: " << render_subspace(t, v.failure->sub) << " maximal in "
               << render_subspace(t, v.failure->parent) << ", not an ideal\n";
    if (v.leib) r.text << "Leib(L): " << render_subspace(t, *v.leib) << "\n";
    if (v.frattini) r.text << "Frattini: " << render_subspace(t, *v.frattini) << "\n";
    if (is_case(v.outcome)) r.text << "re-verified: " << yes_no(v.reverified) << "\n";

    if (is_case(v.outcome))
        r.code = v.reverified ? ok : falsifier;
    else if (v.outcome == Outcome::property_fails)
        r.code = property_fails;
    else if (v.outcome == Outcome::out_of_scope)
        r.code = unsupported;
    else
        r.code = falsifier;
}

inline void cmd_audit(FamilyName name, const FieldSpec& f, const std::optional<std::vector<std::vector<Scalar>>>& tuples,
                      std::size_t n, Rendered& r) {
    const ValidParamReport rep = audit(name, f, tuples, n);
    const auto names = scalar_param_names(name);
    r.doc["family"] = family_name(name);
    r.doc["field"] = f.name();
    r.doc["params"] = names;
    json rows = json::array();
    r.text << "family " << family_name(name) << " over " << f.name() << "\n";
    std::string header = "(";
    for (std::size_t i = 0; i < names.size(); ++i) header += (i ? "," : "") + names[i];
    r.text << header << ")  valid  violating triple  property P\n";
    const AlgebraTable shape = build(FamilySpec{name, f, std::vector<Scalar>(names.size(), Scalar::zero(f)), n});
    for (const auto& e : rep.entries) {
        json row;
        std::string tuple = "(";
        row["tuple"] = json::array();
        for (std::size_t i = 0; i < e.params.size(); ++i) {
            tuple += (i ? "," : "") + e.params[i].to_string();
            row["tuple"].push_back(e.params[i].to_string());
        }
        tuple += ")";
        row["valid"] = e.valid;
        row["violation"] = e.violation ? json{shape.basis_names()[e.violation->i], shape.basis_names()[e.violation->j],
                                              shape.basis_names()[e.violation->k]}
                                       : json(nullptr);
        row["property_P"] = e.property_P ? json(*e.property_P) : json(nullptr);
        r.text << tuple << "  " << (e.valid ? "yes" : "no ") << "  "
               << (e.violation ? triple_name(shape, e.violation->i, e.violation->j, e.violation->k) : "-") << "  "
               << (e.property_P ? (*e.property_P ? "holds" : "fails") : "n/a") << "\n";
        rows.push_back(std::move(row));
    }
    r.doc["entries"] = std::move(rows);
    r.text << "valid: " << rep.valid().size() << " of " << rep.entries.size()
           << ", property P: " << rep.property_P_holding().size() << "\n";
}

inline void cmd_census(std::size_t dim, const FieldSpec& f, unsigned workers, bool assertions,
                       const std::string& path, Rendered& r) {
    const CensusReport rep = run_census(dim, f, {workers, assertions});
    if (!path.empty()) save_report(rep, path);
    r.doc["dim"] = dim;
    r.doc["field"] = f.name();
    r.doc["raw_total"] = rep.raw_total;
    r.doc["valid_total"] = rep.valid_total;
    r.doc["classes"] = rep.records.size();
    r.text << "dim " << dim << " over " << f.name() << ": " << rep.raw_total << " raw tables, " << rep.valid_total
           << " Leibniz, " << rep.records.size() << " isomorphism classes\n";
    std::map<std::string, std::size_t> by_label;
    for (const auto& rec : rep.records) ++by_label[rec.flags.classification];
    r.doc["classifications"] = by_label;
    r.text << "classifications:";
    for (const auto& [label, count] : by_label) r.text << " " << label << "=" << count;
    r.text << "\n";
    if (assertions) {
        json summary;
        r.text << "assertions (pass/fail/n-a):";
        for (const auto& [id, counts] : rep.assertion_summary()) {
            summary[id] = {{"pass", counts[0]}, {"fail", counts[1]}, {"n/a", counts[2]}};
            r.text << " " << id << "=" << counts[0] << "/" << counts[1] << "/" << counts[2];
        }
        r.text << "\n";
        r.doc["assertions"] = std::move(summary);
    }
    const auto failures = rep.failures();
    json fj = json::array();
    for (const auto& fl : failures) {
        const auto& rec = rep.records[fl.record];
        json j;
        j["assertion"] = fl.assertion;
        j["table"] = detail::table_json(rec.table);
        j["classification"] = rec.flags.classification;
        fj.push_back(std::move(j));
    }
    r.doc["failures"] = std::move(fj);
    r.text << "failures: " << failures.size() << "\n";
    for (const auto& fl : failures)
        r.text << "  (" << fl.assertion << ") " << census_record_line(rep.records[fl.record]) << "\n";
    if (!path.empty()) r.text << "report written to " << path << "\n";
    r.code = failures.empty() ? ok : falsifier;
}

// ------------------------------------------------------------ dispatch

inline std::vector<Scalar> parse_tuple(const FieldSpec& f, const std::string& text) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(f, item));
    return out;
}

inline int dispatch(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact structure computations for Leibniz algebras", "leibniz"};
    app.require_subcommand(1, 1);
    std::string format = "text";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::string file;
    auto* check = app.add_subcommand("check", "Verify the left Leibniz identity on the basis");
    auto* analyze = app.add_subcommand("analyze", "Series, Leib(L), annihilator and structural flags");
    auto* lattice = app.add_subcommand("lattice", "Subalgebra lattice and property P (finite fields)");
    auto* classify_cmd = app.add_subcommand("classify", "Match against the classification list");
    for (auto* sc : {check, analyze, lattice, classify_cmd}) {
        sc->add_option("FILE", file, "Algebra file")->required();
        sc->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    }

    std::string family, field_text, output;
    std::vector<std::string> params, tuples;
    auto* family_cmd = app.add_subcommand("family", "Write a named algebra to a file");
    family_cmd->add_option("NAME", family, "Family name")->required();
    family_cmd->add_option("--field", field_text, "gf:p or q")->required();
    family_cmd->add_option("--param", params, "k=v (c, d, e or n)");
    family_cmd->add_option("-o,--output", output, "Output file (stdout if omitted)");
    family_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    auto* audit_cmd = app.add_subcommand("audit-family", "Sweep a family's parameters");
    audit_cmd->add_option("NAME", family, "Family name")->required();
    audit_cmd->add_option("--field", field_text, "gf:p or q")->required();
    audit_cmd->add_option("--param", params, "n=K for sized families");
    audit_cmd->add_option("--tuple", tuples, "Explicit tuple c,d[,e] (required over Q)");
    audit_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::size_t dim = 0;
    unsigned workers = 1;
    bool assertions = false;
    auto* census_cmd = app.add_subcommand("census", "Exhaustive enumeration up to isomorphism");
    census_cmd->add_option("--dim", dim, "Dimension")->required();
    census_cmd->add_option("--field", field_text, "gf:p")->required();
    census_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 256u));
    census_cmd->add_flag("--assert", assertions, "Run the assertion suite");
    census_cmd->add_option("-o,--output", output, "Report file");
    census_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? ok : usage;
    }

    Rendered r;
    try {
        auto* sc = app.get_subcommands().front();
        const std::string name = sc->get_name();
        r.doc["command"] = name;
        if (sc == check || sc == analyze || sc == lattice || sc == classify_cmd) {
            const AlgebraTable t = load_algebra(file);
            if (sc == check) cmd_check(t, r);
            if (sc == analyze) cmd_analyze(t, r);
            if (sc == lattice) cmd_lattice(t, r);
            if (sc == classify_cmd) cmd_classify(t, r);
        } else if (sc == family_cmd || sc == audit_cmd) {
            const FamilyName fam = parse_family(family);
            const FieldSpec f = FieldSpec::parse(field_text);
            const auto names = scalar_param_names(fam);
            std::map<std::string, std::string> kv;
            for (const auto& p : params) {
                auto eq = p.find('=');
                if (eq == std::string::npos) raise(errc::malformed_spec, "parameter '" + p + "' is not k=v");
                kv[p.substr(0, eq)] = p.substr(eq + 1);
            }
            std::size_t n = 0;
            if (auto it = kv.find("n"); it != kv.end()) {
                if (!takes_size_param(fam)) raise(errc::malformed_spec, family + " takes no size parameter");
                try {
                    n = std::stoul(it->second);
                } catch (const std::exception&) {
                    raise(errc::malformed_spec, "n must be a positive integer");
                }
                kv.erase(it);
            } else if (takes_size_param(fam)) {
                raise(errc::malformed_spec, family + " needs --param n=K");
            }
            if (sc == family_cmd) {
                std::vector<Scalar> values;
                for (const auto& nm : names) {
                    auto it = kv.find(nm);
                    if (it == kv.end()) raise(errc::malformed_spec, family + " needs --param " + nm + "=v");
                    values.push_back(Scalar::parse(f, it->second));
                    kv.erase(it);
                }
                if (!kv.empty()) raise(errc::malformed_spec, "unknown parameter '" + kv.begin()->first + "'");
                const AlgebraTable t = build(FamilySpec{fam, f, values, n});
                const bool valid = is_leibniz(t);
                r.doc["family"] = family;
                r.doc["leibniz"] = valid;
                if (output.empty()) {
                    if (format == "text") {
                        out << write_algebra(t);
                        return ok;
                    }
                    r.doc["algebra"] = nlohmann::ordered_json::parse(write_algebra(t));
                } else {
                    save_algebra(t, output);
                    r.doc["path"] = output;
                    r.text << "wrote " << output << " (" << family << " over " << f.name()
                           << ", Leibniz: " << yes_no(valid) << ")\n";
                }
            } else {
                if (!kv.empty()) raise(errc::malformed_spec, "unknown parameter '" + kv.begin()->first + "'");
                std::optional<std::vector<std::vector<Scalar>>> explicit_tuples;
                if (!tuples.empty()) {
                    explicit_tuples.emplace();
                    for (const auto& tx : tuples) explicit_tuples->push_back(parse_tuple(f, tx));
                }
                cmd_audit(fam, f, explicit_tuples, n, r);
            }
        } else if (sc == census_cmd) {
            const FieldSpec f = FieldSpec::parse(field_text);
            cmd_census(dim, f, workers, assertions, output, r);
        }
    } catch (const Error& e) {
        const int code = exit_code_for(e.code());
        err << "error: " << e.what() << "\n";
        if (format == "json") {
            json j;
            j["error"] = errc_name(e.code());
            j["message"] = e.what();
            j["exit_code"] = code;
            out << j.dump(2) << "\n";
        }
        return code;
    }
    if (format == "json") {
        r.doc["exit_code"] = r.code;
        out << r.doc.dump(2) << "\n";
    } else {
        out << r.text.str();
    }
    return r.code;
}

}  // namespace leibniz::cli
