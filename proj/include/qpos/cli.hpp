#ifndef QPOS_CLI_HPP
#define QPOS_CLI_HPP

// Command-line front end. run() parses arguments, dispatches to the library
// and writes one report. Exit status: 0 verified, 1 verification failure,
// 2 usage error.

#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qpos/families.hpp>
#include <qpos/heine.hpp>
#include <qpos/oracle.hpp>
#include <qpos/parallel.hpp>
#include <qpos/positivity.hpp>
#include <qpos/series.hpp>
#include <qpos/triangular.hpp>
#include <qpos/verdict.hpp>

namespace qpos::cli
{

enum exit_status : int
{
    exit_ok = 0,
    exit_failed = 1,
    exit_usage = 2
};

class usage_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct run_config
{
    std::string command;
    std::string target;               // verify identity or scan preset
    std::string family = "C";
    std::string kind = "signed";
    std::string form = "definitional";
    std::optional<std::size_t> k;
    std::optional<std::size_t> m;
    std::size_t order = 100;
    std::size_t nmax = 20;
    unsigned threads = 1;
    std::string format = "plain";
    std::string out;
};

using json = nlohmann::ordered_json;

struct report
{
    bool ok = true;
    json doc;
    std::string csv;
    std::string plain;
};

namespace detail
{

inline family parse_family(const std::string &s)
{
    if (s == "C" || s == "c") {
        return family::c;
    }
    if (s == "D" || s == "d") {
        return family::d;
    }
    throw usage_error("--family must be C or D, got '" + s + "'");
}

inline bool parse_signed(const std::string &s)
{
    if (s == "signed") {
        return true;
    }
    if (s == "unsigned") {
        return false;
    }
    throw usage_error("--kind must be signed or unsigned, got '" + s + "'");
}

inline const char *family_name(family f) { return f == family::c ? "C" : "D"; }

inline std::string series_label(family f, const family_params &p)
{
    return std::string(family_name(f)) + "'(" + std::to_string(p.k) + "," + std::to_string(p.m) + ")";
}

inline json coefficient_array(const series &s)
{
    json a = json::array();
    for (const auto &c : s.coefficients()) {
        a.push_back(c.str());
    }
    return a;
}

inline json verdict_json(const verdict &v)
{
    json j;
    j["check"] = v.check;
    j["ok"] = v.ok;
    j["detail"] = v.detail;
    j["index"] = v.index ? json(*v.index) : json(nullptr);
    j["expected"] = v.expected;
    j["actual"] = v.actual;
    return j;
}

inline std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

inline family_params params_of(const run_config &cfg, std::size_t default_k, std::size_t default_m)
{
    return {cfg.k.value_or(default_k), cfg.m.value_or(default_m)};
}

// --------------------------------------------------------------------------

inline report run_expand(const run_config &cfg)
{
    const auto f = parse_family(cfg.family);
    const bool sgn = parse_signed(cfg.kind);
    const auto p = params_of(cfg, 2, 1);
    const auto kind = make_kind(f, sgn);

    std::optional<series> s;
    if (cfg.form == "definitional") {
        s = family_series(kind, p, cfg.order);
    } else if (cfg.form == "closed" || cfg.form == "relation") {
        if (!sgn) {
            throw usage_error("--form " + cfg.form + " exists only for the signed series");
        }
        s = f == family::c ? cprime_closed(p, cfg.order) : dprime_via_relation(p, cfg.order);
    } else {
        throw usage_error("--form must be definitional, closed or relation, got '" + cfg.form + "'");
    }

    report r;
    r.doc["command"] = "expand";
    r.doc["family"] = family_name(f);
    r.doc["kind"] = cfg.kind;
    r.doc["form"] = cfg.form;
    r.doc["k"] = p.k;
    r.doc["m"] = p.m;
    r.doc["order"] = cfg.order;
    r.doc["coefficients"] = coefficient_array(*s);

    std::ostringstream csv;
    std::ostringstream plain;
    csv << "index,coefficient\n";
    for (std::size_t i = 0; i <= s->order(); ++i) {
        csv << i << ',' << (*s)[i].str() << '\n';
        plain << (i ? " " : "") << (*s)[i].str();
    }
    plain << '\n';
    r.csv = csv.str();
    r.plain = plain.str();
    return r;
}

// --------------------------------------------------------------------------

inline std::vector<verdict> verify_checks(const run_config &cfg)
{
    const std::string &id = cfg.target;
    const std::size_t N = cfg.order;
    std::vector<verdict> checks;

    auto over_n = [&](auto &&one) {
        return parallel_map(cfg.nmax + 1, cfg.threads, [&](std::size_t n) { return one(n); });
    };

    if (id == "thmC") {
        const auto p = params_of(cfg, 2, 1);
        checks.push_back(compare_series("thmC " + series_label(family::c, p), cprime_definitional(p, N),
                                        cprime_closed(p, N)));
    } else if (id == "thmD") {
        const auto p = params_of(cfg, 2, 1);
        checks.push_back(compare_series("thmD " + series_label(family::d, p), dprime_definitional(p, N),
                                        dprime_via_relation(p, N)));
    } else if (id == "special") {
        std::vector<family_params> pairs;
        if (cfg.k || cfg.m) {
            pairs.push_back(params_of(cfg, 2, 1));
        } else {
            pairs = {{1, 1}, {2, 1}, {2, 2}, {3, 1}};
        }
        for (const auto &p : pairs) {
            const auto forms = special_forms(p, N);
            if (forms.empty()) {
                throw usage_error("no simplified form for " + series_label(family::c, p)
                                  + "; special covers (1,1), (2,1), (2,2), (3,1)");
            }
            const auto def = cprime_definitional(p, N);
            for (const auto &form : forms) {
                checks.push_back(compare_series("special " + form.label, def, form.value));
            }
        }
    } else if (id == "heine") {
        checks.push_back(heine_chain_check(params_of(cfg, 2, 1), N));
    } else if (id == "lemma51") {
        checks = over_n([&](std::size_t n) {
            const std::string name = "lemma51 n=" + std::to_string(n);
            for (std::size_t A = 0; A <= 5; ++A) {
                auto direct = series::monomial(A, N);
                direct.over_binomial(1, -1).over_binomial(2 * n + 3);
                for (std::size_t i = 0; i <= N; ++i) {
                    if (direct[i] != lemma_a_coeff(n, A, i)) {
                        return verdict::fail(name, "closed form disagrees with expansion (A=" + std::to_string(A) + ")",
                                             i, direct[i].str(), std::to_string(lemma_a_coeff(n, A, i)));
                    }
                }
            }
            return verdict::pass(name);
        });
    } else if (id == "lemma52") {
        checks = over_n([&](std::size_t n) { return lemma52_decomposition_check(n, N); });
    } else if (id == "c23cases") {
        checks = over_n([&](std::size_t n) { return c23_case_scan(n, N); });
        checks.push_back(compare_series("c23 simplified = C'(2,3)", cprime_definitional({2, 3}, N), c23_simplified(N)));
    } else if (id == "c41decomp") {
        checks = over_n([&](std::size_t n) {
            return c41_admissible(n) ? c41_decomposition_check(n, N) : c41_factor_nonnegative(n, N);
        });
        checks.push_back(compare_series("c41 simplified = C'(4,1)", cprime_definitional({4, 1}, N), c41_simplified(N)));
    } else if (id == "gauss") {
        const auto tri = triangular_indicator(N);
        checks.push_back(compare_series("gauss product = triangular indicator", tri, gauss_product(N)));
        const auto t2 = t2_series(N);
        checks.push_back(compare_series("t2 series = indicator squared", tri * tri, t2));
        std::vector<integer> direct;
        for (std::size_t n = 0; n <= N; ++n) {
            direct.emplace_back(t2_direct(n).t2);
        }
        checks.push_back(compare_series("t2 direct = t2 series", series(std::move(direct)), t2));
    } else if (id == "keysum") {
        const auto scan = keysum_scan(N);
        const auto d21 = dprime_definitional({2, 1}, N);
        verdict holds = verdict::pass("keysum t2(N)+t2(N-2)+... <= N+1", "holds");
        verdict strict = verdict::pass("keysum strict for even 2N > 90", "holds");
        verdict link = verdict::pass("keysum margin = D'(2,1)", "equal");
        for (const auto &r : scan) {
            if (!r.holds() && holds) {
                holds = verdict::fail(holds.check, "sum exceeds N+1", r.N, std::to_string(r.bound), std::to_string(r.sum));
            }
            if (r.N % 2 == 0 && r.N > 90 && r.margin() <= 0 && strict) {
                strict = verdict::fail(strict.check, "margin not positive", r.N, "> 0", std::to_string(r.margin()));
            }
            if (d21[r.N] != r.margin() && link) {
                link = verdict::fail(link.check, "mismatch", r.N, d21[r.N].str(), std::to_string(r.margin()));
            }
        }
        checks = {holds, strict, link};
    } else if (id == "circle") {
        const auto t = t2_table(2 * N + 1);
        verdict even = verdict::pass("circle count (even) = t2 partial sums", "equal");
        verdict odd = verdict::pass("circle count (odd) = t2 partial sums", "equal");
        std::uint64_t even_sum = 0;
        std::uint64_t odd_sum = 0;
        for (std::size_t n = 0; n <= N; ++n) {
            even_sum += t[2 * n];
            odd_sum += t[2 * n + 1];
            const auto ce = circle_count(n, circle_case::even);
            const auto co = circle_count(n, circle_case::odd);
            if (ce != even_sum && even) {
                even = verdict::fail(even.check, "mismatch", n, std::to_string(even_sum), std::to_string(ce));
            }
            if (co != odd_sum && odd) {
                odd = verdict::fail(odd.check, "mismatch", n, std::to_string(odd_sum), std::to_string(co));
            }
        }
        checks = {even, odd};
        verdict bound = verdict::pass("circle bound", "holds");
        for (std::size_t n = 0; n <= N && bound; ++n) {
            if (auto v = circle_bound_check(n); !v) {
                bound = v;
            }
        }
        checks.push_back(bound);
    } else if (id == "fcalc") {
        checks = f_checks().checks;
    } else {
        throw usage_error("--identity must be one of thmC, thmD, special, heine, lemma51, lemma52, c23cases, "
                          "c41decomp, gauss, keysum, circle, fcalc; got '" + id + "'");
    }
    return checks;
}

inline report run_verify(const run_config &cfg)
{
    const auto checks = verify_checks(cfg);
    report r;
    for (const auto &c : checks) {
        r.ok = r.ok && c.ok;
    }
    const std::string status = r.ok ? "equal" : "mismatch";

    r.doc["command"] = "verify";
    r.doc["identity"] = cfg.target;
    r.doc["k"] = cfg.k ? json(*cfg.k) : json(nullptr);
    r.doc["m"] = cfg.m ? json(*cfg.m) : json(nullptr);
    r.doc["order"] = cfg.order;
    r.doc["nmax"] = cfg.nmax;
    r.doc["status"] = status;
    r.doc["checks"] = json::array();
    for (const auto &c : checks) {
        r.doc["checks"].push_back(verdict_json(c));
    }

    std::ostringstream csv;
    csv << "check,ok,detail,index,expected,actual\n";
    for (const auto &c : checks) {
        csv << csv_field(c.check) << ',' << (c.ok ? "true" : "false") << ',' << csv_field(c.detail) << ','
            << (c.index ? std::to_string(*c.index) : "") << ',' << csv_field(c.expected) << ','
            << csv_field(c.actual) << '\n';
    }
    r.csv = csv.str();

    std::ostringstream plain;
    plain << status << '\n';
    for (const auto &c : checks) {
        if (!c.ok) {
            plain << c.describe() << '\n';
        }
    }
    r.plain = plain.str();
    return r;
}

// --------------------------------------------------------------------------

struct scan_job
{
    family fam;
    family_params params;
};

inline std::vector<scan_job> scan_jobs(const run_config &cfg)
{
    std::vector<scan_job> jobs;
    auto add = [&](const conjecture_target &t) { jobs.push_back({t.series_family(), t.params()}); };
    const std::string &preset = cfg.target;
    if (preset.empty()) {
        if (!cfg.k || !cfg.m) {
            throw usage_error("scan needs --preset, or --family with both --k and --m");
        }
        jobs.push_back({parse_family(cfg.family), {*cfg.k, *cfg.m}});
    } else if (preset == "ck1") {
        for (std::size_t k = 1; k <= cfg.k.value_or(10); ++k) {
            add({conjecture::ck1, k, 1});
        }
    } else if (preset == "c24") {
        add({conjecture::c24});
    } else if (preset == "c2m") {
        add({conjecture::c2m, 2, cfg.m.value_or(5)});
    } else if (preset == "d22") {
        add({conjecture::d22});
    } else if (preset == "d23") {
        add({conjecture::d23});
    } else if (preset == "dkm") {
        if (cfg.k && *cfg.k < 2) {
            throw usage_error("--preset dkm needs --k of at least 2 (it scans every m < k)");
        }
        for (std::size_t k = 2; k <= cfg.k.value_or(4); ++k) {
            for (std::size_t m = 1; m < k; ++m) {
                add({conjecture::dkm, k, m});
            }
        }
    } else {
        throw usage_error("--preset must be one of ck1, c24, c2m, d22, d23, dkm; got '" + preset + "'");
    }
    return jobs;
}

inline report run_scan(const run_config &cfg)
{
    const auto jobs = scan_jobs(cfg);
    struct scanned
    {
        series s;
        scan_report rep;
    };
    const auto results = parallel_map(jobs.size(), cfg.threads, [&](std::size_t i) {
        const auto &j = jobs[i];
        auto s = j.fam == family::c ? cprime_definitional(j.params, cfg.order)
                                    : dprime_definitional(j.params, cfg.order);
        auto rep = negative_indices(s);
        return scanned{std::move(s), std::move(rep)};
    });

    report r;
    r.doc["command"] = "scan";
    r.doc["preset"] = cfg.target.empty() ? json(nullptr) : json(cfg.target);
    r.doc["order"] = cfg.order;
    json entries = json::array();
    std::ostringstream plain;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto &j = jobs[i];
        const auto &rep = results[i].rep;
        const bool theorem = proven_positive(j.fam, j.params);
        if (theorem && !rep.negative_indices.empty()) {
            r.ok = false;
        }
        json e;
        e["family"] = family_name(j.fam);
        e["k"] = j.params.k;
        e["m"] = j.params.m;
        e["negative_indices"] = rep.negative_indices;
        e["classification"] = to_string(rep.classification);
        e["largest_negative"] = rep.largest_negative() ? json(*rep.largest_negative()) : json(nullptr);
        e["theorem_backed"] = theorem;
        entries.push_back(std::move(e));

        plain << series_label(j.fam, j.params) << " to order " << cfg.order << ": " << to_string(rep.classification);
        if (!rep.negative_indices.empty()) {
            plain << ", negative at";
            for (auto n : rep.negative_indices) {
                plain << ' ' << n;
            }
        }
        if (theorem && !rep.negative_indices.empty()) {
            plain << " [VIOLATES THEOREM]";
        }
        plain << '\n';
    }
    r.doc["series"] = std::move(entries);
    if (cfg.target == "d23") {
        const std::vector<std::size_t> expected{10, 22};
        r.doc["expected_negatives"] = expected;
        r.doc["matches_conjecture"] = results[0].rep.negative_indices == expected;
    }
    r.doc["status"] = r.ok ? "ok" : "theorem violated";

    std::ostringstream csv;
    const bool multi = jobs.size() > 1;
    csv << (multi ? "k,m,index,coefficient,negative\n" : "index,coefficient,negative\n");
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto &s = results[i].s;
        for (std::size_t n = 0; n <= s.order(); ++n) {
            if (multi) {
                csv << jobs[i].params.k << ',' << jobs[i].params.m << ',';
            }
            csv << n << ',' << s[n].str() << ',' << (s[n] < 0 ? "true" : "false") << '\n';
        }
    }
    r.csv = csv.str();
    r.plain = plain.str();
    return r;
}

// --------------------------------------------------------------------------

inline report run_oracle(const run_config &cfg)
{
    const auto f = parse_family(cfg.family);
    const bool sgn = parse_signed(cfg.kind);
    const auto p = params_of(cfg, 2, 1);
    const auto kind = make_kind(f, sgn);
    const auto s = family_series(kind, p, cfg.nmax);
    const auto counts = parallel_map(cfg.nmax + 1, cfg.threads, [&](std::size_t n) { return weighted_counts_for(f, p, n); });

    report r;
    r.doc["command"] = "oracle";
    r.doc["family"] = family_name(f);
    r.doc["kind"] = cfg.kind;
    r.doc["k"] = p.k;
    r.doc["m"] = p.m;
    r.doc["nmax"] = cfg.nmax;
    json rows = json::array();
    std::ostringstream csv;
    std::ostringstream plain;
    csv << "index,even_weight,odd_weight,value,series,match\n";
    std::optional<std::size_t> first_bad;
    for (std::size_t n = 0; n <= cfg.nmax; ++n) {
        const integer value = sgn ? counts[n].difference() : counts[n].total();
        const bool match = value == s[n];
        if (!match && !first_bad) {
            first_bad = n;
        }
        json row;
        row["index"] = n;
        row["even_weight"] = counts[n].even_weight.str();
        row["odd_weight"] = counts[n].odd_weight.str();
        row["value"] = value.str();
        row["series"] = s[n].str();
        row["match"] = match;
        rows.push_back(std::move(row));
        csv << n << ',' << counts[n].even_weight.str() << ',' << counts[n].odd_weight.str() << ',' << value.str()
            << ',' << s[n].str() << ',' << (match ? "true" : "false") << '\n';
    }
    r.ok = !first_bad;
    r.doc["status"] = r.ok ? "match" : "mismatch";
    r.doc["rows"] = std::move(rows);
    if (first_bad) {
        const std::size_t n = *first_bad;
        const integer value = sgn ? counts[n].difference() : counts[n].total();
        plain << "mismatch at index " << n << ": series " << s[n].str() << ", enumeration " << value.str() << '\n';
    } else {
        plain << "match\n";
    }
    r.csv = csv.str();
    r.plain = plain.str();
    return r;
}

inline std::string render(const report &r, const std::string &format)
{
    if (format == "json") {
        return r.doc.dump(2) + "\n";
    }
    if (format == "csv") {
        return r.csv;
    }
    return r.plain;
}

inline void add_common_options(CLI::App &sub, run_config &cfg)
{
    sub.add_option("--k", cfg.k, "family parameter k")->check(CLI::PositiveNumber);
    sub.add_option("--m", cfg.m, "family parameter m")->check(CLI::PositiveNumber);
    sub.add_option("--order", cfg.order, "truncation order N");
    sub.add_option("--nmax", cfg.nmax, "upper bound for index sweeps and the enumeration oracle");
    sub.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    sub.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    sub.add_option("--out", cfg.out, "write the report to this file instead of standard output");
}

} // namespace detail

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    run_config cfg;
    CLI::App app{"Exact expansion, verification and sign scans of the C' and D' two-color partition series", "qpos"};
    app.require_subcommand(1);

    auto *expand = app.add_subcommand("expand", "print the coefficients of a series");
    detail::add_common_options(*expand, cfg);
    expand->add_option("--family", cfg.family, "C or D");
    expand->add_option("--kind", cfg.kind, "signed or unsigned");
    expand->add_option("--form", cfg.form, "definitional, closed (C) or relation (D)");

    auto *verify = app.add_subcommand("verify", "check an identity or coefficient argument");
    detail::add_common_options(*verify, cfg);
    verify->add_option("--identity", cfg.target, "thmC, thmD, special, heine, lemma51, lemma52, c23cases, "
                                                 "c41decomp, gauss, keysum, circle, fcalc")
        ->required();

    auto *scan = app.add_subcommand("scan", "list negative coefficients");
    detail::add_common_options(*scan, cfg);
    scan->add_option("--family", cfg.family, "C or D");
    scan->add_option("--preset", cfg.target, "ck1, c24, c2m, d22, d23, dkm");

    auto *oracle = app.add_subcommand("oracle", "compare the series with brute-force partition counts");
    detail::add_common_options(*oracle, cfg);
    oracle->add_option("--family", cfg.family, "C or D");
    oracle->add_option("--kind", cfg.kind, "signed or unsigned");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return exit_ok;
        }
        err << "qpos: " << e.what() << '\n';
        return exit_usage;
    }

    report r;
    try {
        if (expand->parsed()) {
            r = detail::run_expand(cfg);
        } else if (verify->parsed()) {
            r = detail::run_verify(cfg);
        } else if (scan->parsed()) {
            r = detail::run_scan(cfg);
        } else {
            r = detail::run_oracle(cfg);
        }
    } catch (const usage_error &e) {
        err << "qpos: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "qpos: " << e.what() << '\n';
        return exit_usage;
    } catch (const verification_error &e) {
        err << "qpos: " << e.what() << '\n';
        return exit_failed;
    }

    const std::string text = detail::render(r, cfg.format);
    if (cfg.out.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            err << "qpos: cannot open --out file '" << cfg.out << "'\n";
            return exit_usage;
        }
        file << text;
    }
    // Failures always reach stderr, even when the report went elsewhere.
    if (!r.ok && (cfg.format != "plain" || !cfg.out.empty())) {
        err << r.plain;
    }
    return r.ok ? exit_ok : exit_failed;
}

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    std::vector<const char *> argv;
    argv.push_back("qpos");
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace qpos::cli

#endif
