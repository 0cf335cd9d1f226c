// Acceptance runner: one PASS/FAIL line per criterion, sub-checks indented
// below it. Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "property_suites.hpp"

using namespace leibniz;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
    bool pass = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& what) {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "  [ok]   " : "  [FAIL] ") + what);
    }
    void note(const std::string& what) { lines.push_back("  [info] " + what); }
};

std::string secs(double s) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(3) << s << " s";
    return o.str();
}

std::string show(const AlgebraTable& t, const Subspace& s) { return cli::render_subspace(t, s); }

std::string show_tuples(const std::vector<std::vector<Scalar>>& ts) {
    std::string out = "{";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out += i ? ", (" : "(";
        for (std::size_t k = 0; k < ts[i].size(); ++k) out += (k ? "," : "") + ts[i][k].to_string();
        out += ")";
    }
    return out + "}";
}

std::string show_tuple(const std::vector<Scalar>& t) {
    const auto s = show_tuples({t});
    return s.substr(1, s.size() - 2);
}

bool same_set(std::vector<Subspace> a, std::vector<Subspace> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

int cli_exit(std::vector<std::string> args) {
    args.insert(args.begin(), "leibniz");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    return cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

// ------------------------------------------------------------ criteria

Result criterion_1() {
    Result o;
    const auto t0 = Clock::now();
    const auto f = FieldSpec::prime(2);
    const AlgebraTable t = build_case4(f, 0, 0);
    const auto x = t.basis_vector(0), a = t.basis_vector(1), a2 = t.basis_vector(2), a3 = t.basis_vector(3);
    const auto lat = build_lattice(t);

    const std::vector<Subspace> want_max{subalgebra_closure(t, Subspace::span(f, 4, {a})), derived_algebra(t),
                                         subalgebra_closure(t, Subspace::span(f, 4, {x + a}))};
    std::string found;
    for (const auto& m : lat.maximal) found += " " + show(t, m);
    o.check(lat.maximal.size() == 3 && same_set(lat.maximal, want_max),
            "maximal subalgebras are <a>, L^2, <x + a>; found" + found);

    const std::vector<Subspace> want_sm{Subspace::span(f, 4, {a2, a3}), Subspace::span(f, 4, {x, a3})};
    std::vector<Subspace> sm;
    std::string listed;
    for (const auto& s : lat.second_maximal) {
        sm.push_back(s.sub);
        listed += " " + show(t, s.sub) + (is_ideal(t, s.sub) ? " (ideal)" : " (not an ideal)");
    }
    o.check(sm.size() == 2 && same_set(sm, want_sm), "second-maximal are exactly span{a2, a3}, span{x, a3}; found" + listed);
    bool all_ideals = true;
    for (const auto& s : sm) all_ideals = all_ideals && is_ideal(t, s);
    o.check(all_ideals, "every second-maximal subalgebra is an ideal");
    if (const auto verdict = property_P(lat); verdict.witness)
        o.note("witness: " + show(t, verdict.witness->sub) + " maximal in " + show(t, verdict.witness->parent));

    const auto fr = frattini(lat), lb = leib_ideal(t);
    o.check(fr == lb && lb == Subspace::span(f, 4, {a2, a3}),
            "Frattini = Leib = span{a2, a3}; Frattini " + show(t, fr) + ", Leib " + show(t, lb));
    const auto v = classify(t);
    o.check(v.outcome == leibniz::Outcome::case4 && v.params.size() == 2 && v.params[0].is_zero() &&
                v.params[1].is_zero(),
            "classify returns case4(0,0); got " + v.label());
    const double s = since(t0);
    o.check(s < 1.0, "runtime " + secs(s) + " < 1 s");
    return o;
}

Result criterion_2() {
    Result o;
    for (int p : {2, 3})
        for (std::size_t n = 3; n <= 5; ++n) {
            const auto t0 = Clock::now();
            const auto f = FieldSpec::prime(p);
            const AlgebraTable t = build(FamilyName::cyclic, f, {}, n);
            std::vector<Vector> gens;
            for (std::size_t k = 1; k + 1 < n; ++k) gens.push_back(t.basis_vector(k));
            const auto witness = Subspace::span(f, n, gens);
            const auto verdict = property_P(t);
            const auto path = (std::filesystem::temp_directory_path() /
                               ("leibniz_acceptance_cyclic" + std::to_string(n) + "_" + std::to_string(p) + ".json"))
                                  .string();
            save_algebra(t, path);
            const int code = cli_exit({"lattice", path});
            std::filesystem::remove(path);
            const double s = since(t0);
            o.check(!verdict.holds && verdict.has_failure(witness) && code == 1 && s < 1.0,
                    "cyclic(" + std::to_string(n) + ") over " + f.name() + ": fails with witness " + show(t, witness) +
                        ", exit " + std::to_string(code) + ", " + secs(s));
        }
    return o;
}

std::string summary_line(const CensusReport& r) {
    std::string out;
    for (const auto& [id, c] : r.assertion_summary())
        out += " " + id + "=" + std::to_string(c[0]) + "/" + std::to_string(c[1]) + "/" + std::to_string(c[2]);
    return out;
}

std::size_t failures_in(const CensusReport& r, const std::string& ids) {
    std::size_t n = 0;
    for (const auto& fl : r.failures()) n += ids.find(fl.assertion) != std::string::npos;
    return n;
}

Result criterion_3() {
    Result o;
    for (int p : {2, 3, 5})
        for (std::size_t n = 1; n <= 2; ++n) {
            const auto t0 = Clock::now();
            const auto r = run_census(n, FieldSpec::prime(p), {1, true});
            const double s = since(t0);
            const auto bad = failures_in(r, "abcdef");
            std::string detail = "dim " + std::to_string(n) + " over GF(" + std::to_string(p) + "): " +
                                 std::to_string(r.valid_total) + " of " + std::to_string(r.raw_total) + ", " +
                                 std::to_string(r.records.size()) + " classes, pass/fail/n-a" + summary_line(r);
            o.check(bad == 0, detail);
            for (const auto& fl : r.failures())
                o.note("(" + fl.assertion + ") fails on " + census_record_line(r.records[fl.record]));
            o.check(r.assertion_summary().at("a")[1] == 0, "nilpotency equivalence holds on every class");
            if (n == 2 && p == 2) o.check(s < 1.0, "GF(2) dim 2 runtime " + secs(s) + " < 1 s");
            if (n == 2 && p == 5) o.check(s < 30.0, "GF(5) dim 2 runtime " + secs(s) + " < 30 s");
        }
    return o;
}

Result criterion_4() {
    Result o;
    const auto f = FieldSpec::prime(2);
    auto timed = [&](unsigned workers, std::string& text) {
        double best = 1e9;
        CensusReport r;
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = Clock::now();
            r = run_census(3, f, {workers, true});
            best = std::min(best, since(t0));
        }
        text = serialize_report(r);
        return std::make_pair(r, best);
    };
    std::string s1, s2, s8;
    const auto [r, t1] = timed(1, s1);
    const auto t2 = timed(2, s2).second;
    const auto t8 = timed(8, s8).second;

    o.check(r.raw_total == (std::uint64_t{1} << 27), "raw tables enumerated: " + std::to_string(r.raw_total));
    o.note(std::to_string(r.valid_total) + " Leibniz tables, " + std::to_string(r.records.size()) +
           " classes, pass/fail/n-a" + summary_line(r));
    o.check(r.failures().empty(), "zero assertion failures (found " + std::to_string(r.failures().size()) + ")");
    for (const auto& fl : r.failures())
        o.note("(" + fl.assertion + ") fails on " + census_record_line(r.records[fl.record]));

    bool listed = true, anomaly = false;
    std::size_t in_scope = 0, case1 = 0;
    for (const auto& rec : r.records) {
        const auto v = classify(rec.table);
        anomaly = anomaly || v.outcome == leibniz::Outcome::anomaly;
        case1 += v.outcome == leibniz::Outcome::case1;
        if (rec.flags.property_P && rec.flags.dim_L_mod_L2 <= 1) {
            ++in_scope;
            const bool ok = (v.outcome == leibniz::Outcome::case2 || v.outcome == leibniz::Outcome::case3 ||
                             v.outcome == leibniz::Outcome::case5 || v.outcome == leibniz::Outcome::case6) &&
                            v.reverified;
            listed = listed && ok;
        }
    }
    o.check(listed, "classes with the property and dim(L/L^2) <= 1 land in cases 2/3/5/6 (" +
                        std::to_string(in_scope) + " such classes)");
    o.check(!anomaly, "no class classifies as an anomaly");
    o.note("case 1 classes: " + std::to_string(case1));
    o.check(t1 <= 1800.0, "single-threaded runtime " + secs(t1) + " <= 30 min");
    const double speedup = t1 / t8;
    std::ostringstream sp;
    sp << std::fixed << std::setprecision(2) << speedup;
    o.check(speedup >= 4.0, "speedup at 8 workers " + sp.str() + "x >= 4x (1 worker " + secs(t1) + ", 2 workers " +
                                secs(t2) + ", 8 workers " + secs(t8) + ", hardware threads " +
                                std::to_string(std::thread::hardware_concurrency()) + ")");
    o.check(s1 == s2 && s1 == s8, "reports byte-identical for 1, 2 and 8 workers");
    return o;
}

Result criterion_5() {
    Result o;
    const auto t0 = Clock::now();
    const auto f3 = FieldSpec::prime(3);
    const auto rep3 = audit(FamilyName::case3, f3);
    std::vector<std::vector<Scalar>> stated;
    for (const auto& e : rep3.entries)
        if (e.params[2] + e.params[2] == e.params[0] * (e.params[0] + e.params[1])) stated.push_back(e.params);
    o.check(rep3.valid() == stated, "case3 over GF(3): valid tuples are {2e = c(c+d)} (" +
                                        std::to_string(stated.size()) + " of 27); found " +
                                        std::to_string(rep3.valid().size()) + ": " + show_tuples(rep3.valid()));

    const auto q = FieldSpec::rational();
    const auto rq = leibniz_check(build_case3(q, 0, 0, 1));
    o.check(rq.contains(1, 0, 0), "case3(0,0,1) over Q fails the identity at (a, x, x)");

    const auto f2 = FieldSpec::prime(2);
    const auto rep4 = audit(FamilyName::case4, f2);
    const std::vector<std::vector<Scalar>> stated4{{Scalar::zero(f2), Scalar::zero(f2)},
                                                   {Scalar::zero(f2), Scalar::one(f2)},
                                                   {Scalar::one(f2), Scalar::one(f2)}};
    o.check(rep4.valid() == stated4, "case4 over GF(2): valid tuples are {(0,0), (0,1), (1,1)}; found " +
                                         show_tuples(rep4.valid()));
    for (const auto& e : rep4.entries)
        if (!e.valid)
            o.note("case4" + show_tuple(e.params) + " violates the identity at " +
                   cli::triple_name(build(FamilyName::case4, f2, e.params), e.violation->i, e.violation->j,
                                    e.violation->k));

    bool roots_ok = true;
    std::size_t valid = 0, rootless = 0;
    for (int p : {2, 3, 5, 7}) {
        const auto f = FieldSpec::prime(p);
        for (const auto& e : audit(FamilyName::case3, f).entries) {
            if (!e.valid) continue;
            ++valid;
            const auto roots = quadratic_roots(e.params[0] + e.params[1], e.params[2]);
            rootless += roots.empty();
            const AlgebraTable t = build(FamilyName::case3, f, e.params);
            bool ok = e.property_P.has_value() && *e.property_P == roots.empty();
            for (const auto& alpha : roots)
                ok = ok && e.property_verdict->has_failure(
                               Subspace::span(f, 3, {alpha * t.basis_vector(1) + t.basis_vector(0)}));
            if (!ok) {
                std::string why;
                for (const auto& alpha : roots) {
                    const auto w = Subspace::span(f, 3, {alpha * t.basis_vector(1) + t.basis_vector(0)});
                    if (!e.property_verdict->has_failure(w))
                        why += " " + show(t, w) + (is_ideal(t, w) ? " is an ideal" : " is not second-maximal");
                }
                o.note("case3" + show_tuple(e.params) + " over " + f.name() + ":" + why);
            }
            roots_ok = roots_ok && ok;
        }
    }
    o.check(roots_ok, "valid case3 instances over GF(2), GF(3), GF(5), GF(7): property holds iff p(alpha) has no "
                      "root, witness span{alpha a + x} for each root (" +
                          std::to_string(valid) + " valid, " + std::to_string(rootless) + " without a root)");

    bool case4_ok = true;
    for (const auto& e : rep4.entries)
        if (e.valid) {
            case4_ok = case4_ok && e.property_P.value_or(false);
            if (!e.property_P.value_or(false) && e.property_verdict && e.property_verdict->witness) {
                const AlgebraTable t = build(FamilyName::case4, f2, e.params);
                o.note("case4" + show_tuple(e.params) + " fails the property: " +
                       show(t, e.property_verdict->witness->sub) + " maximal in " +
                       show(t, e.property_verdict->witness->parent) + " is not an ideal");
            }
        }
    o.check(case4_ok, "every valid case4 instance has the property");
    const double s = since(t0);
    o.check(s < 5.0, "runtime " + secs(s) + " < 5 s");
    return o;
}

Result criterion_6() {
    Result o;
    const auto t0 = Clock::now();
    const auto q = FieldSpec::rational();
    for (std::size_t n = 1; n <= 3; ++n) {
        const AlgebraTable t = build(FamilyName::cross_extension, q, {}, n);
        const auto rep = leibniz_check(t);
        std::string first = rep.empty() ? "none"
                                        : cli::triple_name(t, rep.violations[0].i, rep.violations[0].j,
                                                           rep.violations[0].k);
        o.check(rep.contains(0, 1, 1), "cross_extension(" + std::to_string(n) +
                                           ") fails the identity at (e1, e2, e2); first violation " + first +
                                           ", identity " + (rep.empty() ? "holds" : "fails"));
    }
    const AlgebraTable cross = build(FamilyName::cross_lie, q);
    o.check(is_leibniz(cross), "cross_lie over Q satisfies the identity");
    o.check(is_simple(cross), "cross_lie over Q is simple");
    const auto f3 = FieldSpec::prime(3);
    const AlgebraTable c3 = build(FamilyName::cross_lie, f3);
    const auto lat = build_lattice(c3);
    std::optional<Subspace> plane;
    for (const auto& s : lat.all_subalgebras)
        if (s.dim() == 2 && !plane) plane = s;
    o.check(plane.has_value(), "cross_lie over GF(3) has a 2-dimensional subalgebra" +
                                   (plane ? ": " + show(c3, *plane) : std::string()));
    const double s = since(t0);
    o.check(s < 1.0, "runtime " + secs(s) + " < 1 s");
    return o;
}

Result criterion_7() {
    Result o;
    const auto t0 = Clock::now();
    auto run = [&](std::uint32_t p, const std::vector<std::uint64_t>& want) {
        std::string got;
        bool ok = true;
        for (std::size_t n = 1; n <= want.size(); ++n) {
            std::uint64_t streamed = 0;
            for_each_subspace(FieldSpec::prime(p), n, [&](const Subspace&) { ++streamed; });
            ok = ok && streamed == want[n - 1] && subspace_count(n, p) == want[n - 1];
            got += " " + std::to_string(streamed);
        }
        o.check(ok, "GF(" + std::to_string(p) + "):" + got);
    };
    run(2, {2, 5, 16, 67, 374});
    run(3, {2, 6, 28});
    const double s = since(t0);
    o.check(s < 1.0, "runtime " + secs(s) + " < 1 s");
    return o;
}

Result criterion_8() {
    Result o;
    o.note("seed " + std::to_string(oracle::seed) + ", " + std::to_string(suites::cases) + " cases per field");
    for (const auto& suite : suites::all()) {
        const auto t0 = Clock::now();
        const int bad = suite.run();
        o.check(bad == 0, std::string(suite.name) + ": " + std::to_string(bad) + " failing cases, " + secs(since(t0)));
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion (1-8)")->check(CLI::Range(1, 8));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::function<Result()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                         criterion_5, criterion_6, criterion_7, criterion_8};
    bool all = true;
    for (int c = 1; c <= 8; ++c) {
        if (only && c != only) continue;
        const auto t0 = Clock::now();
        Result o;
        try {
            o = criteria[static_cast<std::size_t>(c - 1)]();
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << " (" << secs(since(t0)) << ")\n";
        for (const auto& line : o.lines) std::cout << line << "\n";
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
