#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "f0f2/closed_forms.hpp"
#include "f0f2/decompose.hpp"
#include "f0f2/geometry.hpp"
#include "f0f2/kontsevich.hpp"
#include "f0f2/lattice_paths.hpp"
#include "f0f2/verify.hpp"

namespace {

using namespace f0f2;
using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
    std::string cache_path;
    bool paranoid = false;
    int jobs = 1;
};

// Returns the cache path from --cache or the F0F2_CACHE environment variable.
std::string effective_cache(const CommonOpts& o) {
    if (!o.cache_path.empty()) return o.cache_path;
    if (const char* env = std::getenv("F0F2_CACHE")) return env;
    return {};
}

struct CacheSession {
    CountTable table;
    std::string path;

    explicit CacheSession(const CommonOpts& o) : path(effective_cache(o)) {
        table.set_paranoid(o.paranoid);
        if (!path.empty() && std::ifstream(path).good()) table.load(path);
    }
    ~CacheSession() {
        if (!path.empty()) {
            try {
                table.save(path);
            } catch (const std::exception& e) {
                std::cerr << "warning: could not save cache: " << e.what() << "\n";
            }
        }
    }
};

struct CountQuery {
    SurfaceDegree deg;
    int g = 0;
    bool irreducible = false;
    std::string method = "auto"; // paths, recursion, auto
};

struct CountOutcome {
    Count value;
    std::vector<std::string> methods;
};

Count count_by_paths(const CountQuery& q, DecomposeOracle& oracle) {
    if (!q.irreducible) return oracle.tilde(q.deg.surface, q.deg.a, q.deg.class_b(), q.g);
    if (q.g < 0) throw std::invalid_argument("irreducible counts need g >= 0");
    return oracle.irreducible(q.deg.surface, q.deg.a, q.deg.class_b(), q.g);
}

Count count_by_recursion(const CountQuery& q, CountTable& table) {
    if (q.g != 0)
        throw std::invalid_argument(
            "the recursion method only covers g = 0 (no positive-genus recursion is known)");
    if (!q.irreducible)
        throw std::invalid_argument("the recursion computes irreducible counts; use --irreducible "
                                    "or the paths method");
    return q.deg.surface == Surface::F2 ? n0_f2(q.deg.a, q.deg.f, &table)
                                        : n0_f0(q.deg.a, q.deg.f, &table);
}

CountOutcome run_count_query(const CountQuery& q, CountTable& table, DecomposeOracle& oracle) {
    q.deg.validate_query();
    const bool paths_ok = !q.irreducible || (q.g >= 0 && q.deg.a <= 2);
    const bool recursion_ok = q.irreducible && q.g == 0;

    if (q.method == "paths") {
        if (!paths_ok)
            throw ScopeError("paths+decompose covers irreducible counts only for a <= 2, g >= 0");
        return {count_by_paths(q, oracle), {q.irreducible ? "paths+decompose" : "paths"}};
    }
    if (q.method == "recursion") {
        return {count_by_recursion(q, table), {"recursion"}};
    }
    if (q.method != "auto") throw std::invalid_argument("unknown method '" + q.method + "'");

    std::vector<std::pair<std::string, Count>> got;
    if (paths_ok)
        got.push_back({q.irreducible ? "paths+decompose" : "paths", count_by_paths(q, oracle)});
    if (recursion_ok) got.push_back({"recursion", count_by_recursion(q, table)});
    if (got.empty())
        throw ScopeError("no method covers this query: paths+decompose needs a <= 2 and g >= 0 "
                         "for irreducible counts, the recursion needs g = 0");
    for (size_t i = 1; i < got.size(); ++i) {
        if (got[i].second != got[0].second) {
            std::ostringstream os;
            os << "methods disagree for " << q.deg.symbol(q.g) << ": " << got[0].first << " gives "
               << got[0].second << ", " << got[i].first << " gives " << got[i].second;
            throw std::logic_error(os.str());
        }
    }
    CountOutcome out{got[0].second, {}};
    for (auto& [name, v] : got) out.methods.push_back(name);
    return out;
}

int cmd_count(const CountQuery& q, const CommonOpts& common) {
    CacheSession cache(common);
    DecomposeOracle oracle;
    CountOutcome out = run_count_query(q, cache.table, oracle);
    std::cout << out.value << "\n";
    std::cerr << (q.irreducible ? "irreducible " : "not-necessarily-irreducible ")
              << q.deg.symbol(q.g) << "; ";
    if (out.methods.size() > 1) {
        std::cerr << "methods agree: ";
        for (size_t i = 0; i < out.methods.size(); ++i)
            std::cerr << (i ? ", " : "") << out.methods[i];
    } else {
        std::cerr << "method: " << out.methods[0];
    }
    std::cerr << "\n";
    return 0;
}

struct TableOpts {
    std::vector<std::string> surfaces{"f0", "f2"};
    int max_a = 2;
    int max_f = 3;
    int max_g = 2;
    bool irreducible = false;
    std::string method = "auto";
    std::string format = "csv";
    std::string output;
};

int cmd_table(const TableOpts& t, const CommonOpts& common) {
    CacheSession cache(common);
    DecomposeOracle oracle;

    struct Row {
        std::string surface, count, method;
        int a, f, g;
        bool irreducible;
    };
    std::vector<Row> rows;
    for (const std::string& sname : t.surfaces) {
        Surface s = surface_from_string(sname);
        for (int a = 0; a <= t.max_a; ++a)
            for (int f = 0; f <= t.max_f; ++f)
                for (int g = 0; g <= t.max_g; ++g) {
                    Row row{std::string(to_string(s)), "0", "n/a", a, f, g, t.irreducible};
                    CountQuery q{{s, a, f}, g, t.irreducible, t.method};
                    try {
                        CountOutcome out = run_count_query(q, cache.table, oracle);
                        row.count = out.value.str();
                        row.method = out.methods[0];
                        for (size_t i = 1; i < out.methods.size(); ++i)
                            row.method += "+" + out.methods[i];
                    } catch (const ScopeError&) {
                        // outside the supported decomposition domain
                    } catch (const std::invalid_argument&) {
                        // degenerate/unsupported cell, keep count 0
                    }
                    rows.push_back(std::move(row));
                }
    }

    std::ostringstream os;
    if (t.format == "csv") {
        os << "surface,a,f,g,irreducible,method,count\n";
        for (const Row& r : rows)
            os << r.surface << "," << r.a << "," << r.f << "," << r.g << ","
               << (r.irreducible ? "true" : "false") << "," << r.method << "," << r.count << "\n";
    } else if (t.format == "json") {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (const Row& r : rows)
            j["rows"].push_back({{"surface", r.surface},
                                 {"a", r.a},
                                 {"f", r.f},
                                 {"g", r.g},
                                 {"irreducible", r.irreducible},
                                 {"method", r.method},
                                 {"count", r.count}});
        os << j.dump(2) << "\n";
    } else {
        throw std::invalid_argument("unknown format '" + t.format + "'");
    }

    if (t.output.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(t.output, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + t.output);
        f << os.str();
    }
    return 0;
}

struct VerifyOpts {
    std::string suite;
    std::string config;
    std::string format = "text";
    std::string output;
    bool strict = false;
    bool timing = false;
    std::optional<double> timeout_seconds;
    RangeOverrides overrides;
};

int cmd_verify(const VerifyOpts& v, const CommonOpts& common) {
    RangeOverrides o = v.overrides;
    std::optional<double> timeout = v.timeout_seconds;
    if (!v.config.empty()) {
        std::ifstream f(v.config);
        if (!f) throw std::runtime_error("cannot read config " + v.config);
        std::stringstream buf;
        buf << f.rdbuf();
        RangeOverrides from_file = overrides_from_config(buf.str(), v.suite);
        // Command-line values win over the file.
        auto merge = [](std::optional<int>& dst, const std::optional<int>& file) {
            if (!dst) dst = file;
        };
        merge(o.max_a, from_file.max_a);
        merge(o.max_b, from_file.max_b);
        merge(o.max_g, from_file.max_g);
        merge(o.max_n, from_file.max_n);
        merge(o.max_r, from_file.max_r);
        merge(o.max_s, from_file.max_s);
        merge(o.gamma0_max_b, from_file.gamma0_max_b);
        if (!timeout) timeout = from_file.timeout_seconds;
    }

    SuiteRanges ranges = apply_overrides(default_ranges(v.suite), o);
    VerificationReport report = run_suite(v.suite, ranges, common.jobs, timeout);

    std::string text =
        v.format == "json" ? report.to_json(v.timing) : report.to_text(v.timing);
    if (v.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(v.output, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + v.output);
        f << text;
    }

    if (report.summary.failed > 0) return 1;
    if (v.strict && report.summary.skipped > 0) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical enumerative invariants of the Hirzebruch surfaces F0 and F2"};
    app.require_subcommand(1);
    app.fallthrough(); // --cache/--paranoid/--jobs may follow the subcommand

    CommonOpts common;
    app.add_option("--cache", common.cache_path,
                   "memo cache file (default: $F0F2_CACHE when set)");
    app.add_flag("--paranoid", common.paranoid, "recompute cache hits and fail on mismatch");
    app.add_option("--jobs,-j", common.jobs, "worker threads for verification suites")
        ->check(CLI::PositiveNumber);

    // count
    CountQuery q;
    std::string surface = "f2";
    auto* count = app.add_subcommand("count", "compute one invariant");
    count->add_option("--surface", surface, "f0 or f2")->required();
    count->add_option("-a", q.deg.a, "coefficient of C")->required();
    count->add_option("-f", q.deg.f, "second parameter as printed (a+b on F0, b on F2)")
        ->required();
    count->add_option("-g", q.g, "genus (negative genus allowed for path counts)");
    auto* irr = count->add_flag("--irreducible", "count irreducible curves");
    count->add_flag("--all", "count not-necessarily-irreducible curves (default)")
        ->excludes(irr);
    count->add_option("--method", q.method, "paths, recursion, or auto")
        ->check(CLI::IsMember({"paths", "recursion", "auto"}));

    // table
    TableOpts t;
    auto* table = app.add_subcommand("table", "tabulate invariants over a range");
    table->add_option("--surface", t.surfaces, "surfaces to tabulate (default: both)");
    table->add_option("--max-a", t.max_a, "largest a");
    table->add_option("--max-f", t.max_f, "largest printed second parameter");
    table->add_option("--max-g", t.max_g, "largest genus");
    auto* tirr = table->add_flag("--irreducible", "tabulate irreducible counts");
    table->add_flag("--all", "tabulate not-necessarily-irreducible counts (default)")
        ->excludes(tirr);
    table->add_option("--method", t.method, "paths, recursion, or auto")
        ->check(CLI::IsMember({"paths", "recursion", "auto"}));
    table->add_option("--format", t.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--output,-o", t.output, "write to file instead of stdout");

    // verify
    VerifyOpts v;
    int vmax_a = -1, vmax_b = -1, vmax_g = -1, vmax_n = -1, vmax_r = -1, vmax_s = -1,
        vgamma0 = -1;
    double vtimeout = -1;
    auto* verify = app.add_subcommand("verify", "run an identity-verification suite");
    std::string names;
    for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
    verify->add_option("suite", v.suite, "one of: " + names)
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--config", v.config, "JSON file with per-suite ranges");
    verify->add_option("--max-a", vmax_a, "override sweep bound");
    verify->add_option("--max-b", vmax_b, "override sweep bound");
    verify->add_option("--max-g", vmax_g, "override sweep bound");
    verify->add_option("--max-n", vmax_n, "override sweep bound (lemma31/vandermonde)");
    verify->add_option("--max-r", vmax_r, "override sweep bound (F/G)");
    verify->add_option("--max-s", vmax_s, "override sweep bound (F/G)");
    verify->add_option("--gamma0-max-b", vgamma0, "override gamma0 sweep bound");
    verify->add_option("--timeout", vtimeout, "seconds before remaining checks are skipped");
    verify->add_option("--format", v.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--output,-o", v.output, "write report to file");
    verify->add_flag("--strict", v.strict, "nonzero exit when checks were skipped");
    verify->add_flag("--timing", v.timing, "include per-check runtimes in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) {
            q.deg.surface = surface_from_string(surface);
            q.irreducible = irr->count() > 0;
            return cmd_count(q, common);
        }
        if (table->parsed()) {
            t.irreducible = tirr->count() > 0;
            return cmd_table(t, common);
        }
        if (verify->parsed()) {
            if (vmax_a >= 0) v.overrides.max_a = vmax_a;
            if (vmax_b >= 0) v.overrides.max_b = vmax_b;
            if (vmax_g >= 0) v.overrides.max_g = vmax_g;
            if (vmax_n >= 0) v.overrides.max_n = vmax_n;
            if (vmax_r >= 0) v.overrides.max_r = vmax_r;
            if (vmax_s >= 0) v.overrides.max_s = vmax_s;
            if (vgamma0 >= 0) v.overrides.gamma0_max_b = vgamma0;
            if (vtimeout >= 0) v.timeout_seconds = vtimeout;
            return cmd_verify(v, common);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
