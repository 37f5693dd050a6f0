#include "f0f2/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "f0f2/closed_forms.hpp"
#include "f0f2/decompose.hpp"
#include "f0f2/geometry.hpp"
#include "f0f2/kontsevich.hpp"
#include "f0f2/lattice_paths.hpp"

namespace f0f2 {

namespace {

using json = nlohmann::ordered_json;

std::string dec(const BigInt& v) { return v.str(); }

std::string fmt(const char* pattern, auto... args) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, args...);
    return buf;
}

struct Job {
    std::string id;
    std::string inputs;
    std::function<void(CheckResult&)> run; // fills lhs/rhs/pass/note
};

class JobList {
  public:
    void add(std::string id, std::string inputs, std::function<void(CheckResult&)> run) {
        jobs_.push_back({std::move(id), std::move(inputs), std::move(run)});
    }

    void add_eq(std::string id, std::string inputs, std::function<BigInt()> lhs,
                std::function<BigInt()> rhs, std::string note = "") {
        add(std::move(id), std::move(inputs),
            [lhs = std::move(lhs), rhs = std::move(rhs), note = std::move(note)](CheckResult& c) {
                BigInt l = lhs(), r = rhs();
                c.lhs = dec(l);
                c.rhs = dec(r);
                c.pass = l == r;
                c.note = note;
            });
    }

    std::vector<Job> take() { return std::move(jobs_); }

  private:
    std::vector<Job> jobs_;
};

// ---- suite builders -------------------------------------------------------

void build_main_theorem_g0(const SuiteRanges& r, JobList& jobs,
                           const std::shared_ptr<CountTable>& table) {
    for (int a = 0; a <= r.max_a; ++a) {
        for (int b = -a; b <= r.max_b; ++b) {
            if (2 * a + b < 1) continue;
            jobs.add(fmt("a=%d b=%+03d", a, b), fmt("a=%d, b=%d, g=0", a, b),
                     [a, b, table](CheckResult& c) {
                         auto inst = main_identity_check_g0(a, b, table.get());
                         c.lhs = dec(inst.lhs);
                         c.rhs = dec(inst.rhs);
                         c.pass = inst.pass;
                         c.note = inst.witness;
                     });
        }
    }
}

void build_main_theorem_smalla(const SuiteRanges& r, JobList& jobs,
                               const std::shared_ptr<DecomposeOracle>& oracle) {
    for (int a = 0; a <= std::min(r.max_a, 2); ++a) {
        for (int b = 0; b <= r.max_b; ++b) {
            if (a + b < 1) continue;
            for (int g = 0; g <= r.max_g; ++g) {
                jobs.add_eq(
                    fmt("a=%d b=%d g=%d", a, b, g), fmt("a=%d, b=%d, g=%d", a, b, g),
                    [=] { return oracle->irreducible(Surface::F0, a, b, g); },
                    [=] {
                        BigInt rhs = 0;
                        for (int k = 0; k <= a; ++k)
                            rhs += binom(b + 2LL * k, k) *
                                   oracle->irreducible(Surface::F2, a - k, b + 2 * k, g);
                        return rhs;
                    });
            }
        }
    }
}

void build_lemma31(const SuiteRanges& r, JobList& jobs) {
    for (int n = 0; n <= r.max_n; ++n)
        for (int m = 0; m <= r.max_n; ++m)
            for (int k = 0; k <= r.max_n; ++k)
                jobs.add_eq(
                    fmt("n=%02d m=%02d k=%02d", n, m, k), fmt("n=%d, m=%d, k=%d", n, m, k),
                    [=] { return lemma31(n, m, k).lhs; }, [=] { return lemma31(n, m, k).rhs; });
}

void build_vandermonde(const SuiteRanges& r, JobList& jobs) {
    for (int n = 0; n <= r.max_n; ++n)
        for (int m = 0; m <= r.max_n; ++m)
            for (int k = 0; k <= r.max_n; ++k)
                jobs.add_eq(
                    fmt("n=%02d m=%02d k=%02d", n, m, k), fmt("n=%d, m=%d, k=%d", n, m, k),
                    [=] { return vandermonde_lhs(n, m, k); },
                    [=] { return binom(n + m, k); });
}

void build_a1_closed_form(const SuiteRanges& r, JobList& jobs) {
    // g here is the number of skipped lattice points, i.e. minus the genus
    // of the counted (reducible) curves.
    for (Surface s : {Surface::F0, Surface::F2}) {
        for (int b = 0; b <= r.max_b; ++b) {
            for (int g = 0; g <= b + 1; ++g) {
                SurfaceDegree deg{s, 1, s == Surface::F0 ? b + 1 : b};
                jobs.add_eq(fmt("%s b=%d g=%d stated", to_string(s).data(), b, g),
                            fmt("surface=%s, b=%d, g=%d", to_string(s).data(), b, g),
                            [=] { return count_tilde(deg, -g); },
                            [=] { return a1_closed_form_stated(b, g); },
                            "stated form C(2b+2-g,g)");
                jobs.add_eq(fmt("%s b=%d g=%d sum", to_string(s).data(), b, g),
                            fmt("surface=%s, b=%d, g=%d", to_string(s).data(), b, g),
                            [=] { return count_tilde(deg, -g); }, [=] { return a1_count(b, g, s); },
                            "per-path binomial sum");
            }
        }
    }
}

void build_fg_identity(const SuiteRanges& r, JobList& jobs) {
    for (int rr = 0; rr <= r.max_r; ++rr)
        for (int a1 = 0; a1 <= rr; ++a1)
            for (int t = 0; a1 + t <= rr; ++t)
                for (int s = 0; s <= r.max_s; ++s) {
                    jobs.add_eq(fmt("r=%d a1=%d t=%d s=%d", rr, a1, t, s),
                                fmt("r=%d, alpha1=%d, t=%d, s=%d", rr, a1, t, s),
                                [=] { return f_sum(rr, a1, t, s); },
                                [=] { return g_sum(rr, a1, t, s); });
                    if (s == 1)
                        jobs.add_eq(fmt("s1-form r=%d a1=%d t=%d", rr, a1, t),
                                    fmt("r=%d, alpha1=%d, t=%d, s=1", rr, a1, t),
                                    [=] { return f_sum(rr, a1, t, 1); },
                                    [=] { return fg_s1_closed_form(rr, a1, t); });
                }
}

void build_fg_recurrence(const SuiteRanges& r, JobList& jobs) {
    for (int rr = 0; rr <= r.max_r; ++rr)
        for (int a1 = 0; a1 <= rr; ++a1)
            for (int t = 0; a1 + t <= rr; ++t)
                for (int s = 0; s <= r.max_s; ++s)
                    for (FgKind kind : {FgKind::F, FgKind::G})
                        jobs.add_eq(
                            fmt("%s r=%d a1=%d t=%d s=%d", kind == FgKind::F ? "F" : "G", rr, a1,
                                t, s),
                            fmt("r=%d, alpha1=%d, t=%d, s=%d", rr, a1, t, s),
                            [=] { return fg_recurrence_residual(kind, rr, a1, t, s); },
                            [] { return BigInt(0); });
}

// All paths of all lengths in one a=2 dual polygon: the recursive
// multiplicity must match the staircase product formula, and non-staircase
// paths must have multiplicity zero.
void check_mult_oracle(Surface surface, int b, CheckResult& c) {
    const int r = b + 2;
    SurfaceDegree deg{surface, 2, surface == Surface::F0 ? r : b};
    LatticePolygon poly = dual_polygon(deg);
    PathCounter counter(poly);
    long long mismatches = 0, paths = 0;
    for (int steps = 1; steps < counter.size(); ++steps) {
        counter.enumerate(steps, StepPolicy::All, [&](PathMask mask) {
            ++paths;
            Count mu = counter.multiplicity(mask);
            LatticePath path = counter.path_of(mask);
            auto params = classify_a2_path(surface, r, path);
            Count expected =
                !params ? Count(0)
                        : (surface == Surface::F0 ? a2_mult(*params) : a2_mult_prime(*params));
            if (mu != expected) ++mismatches;
        });
    }
    c.lhs = std::to_string(mismatches);
    c.rhs = "0";
    c.pass = mismatches == 0;
    c.note = std::to_string(paths) + " paths compared";
}

// Paths grouped by (alpha, s): each block sums to
//   orderings(alpha) * (I^alpha)^2 * F_or_G(r, alpha1, t, s)
// with the zero-outside-range binomial convention (orderings = number of
// arrangements of the column-1 step multiset; blocks whose steps all have
// one length have a single arrangement).
void check_class_blocks(Surface surface, int b, int genus, CheckResult& c) {
    const int r = b + 2;
    SurfaceDegree deg{surface, 2, surface == Surface::F0 ? r : b};
    int steps = point_count(deg, genus);
    LatticePolygon poly = dual_polygon(deg);
    PathCounter counter(poly);
    std::map<std::pair<std::map<int, int>, int>, Count> blocks; // (alpha, s) -> sum of mu
    if (steps >= 1) {
        counter.enumerate(steps, StepPolicy::All, [&](PathMask mask) {
            LatticePath path = counter.path_of(mask);
            if (auto params = classify_a2_path(surface, r, path))
                blocks[{params->alpha, params->s}] += counter.multiplicity(mask);
        });
    }
    long long mismatches = 0;
    for (const auto& [key, total] : blocks) {
        const auto& [alpha, s] = key;
        A2MultiplicityParams p;
        p.r = r;
        p.alpha = alpha;
        p.s = s;
        // Arrangements of the column-1 step multiset: (sum alpha)!/prod alpha_i!.
        Count orderings = 1;
        {
            int total_steps = 0;
            for (const auto& [len, cnt] : alpha) total_steps += cnt;
            for (int i = 2; i <= total_steps; ++i) orderings *= i;
            for (const auto& [len, cnt] : alpha)
                for (int i = 2; i <= cnt; ++i) orderings /= i;
        }
        BigInt expected =
            orderings * p.i_alpha_sq() *
            (surface == Surface::F0
                 ? f_sum(r, p.alpha1(), p.t(), s, BinomialConvention::ZeroOutsideRange)
                 : g_sum(r, p.alpha1(), p.t(), s, BinomialConvention::ZeroOutsideRange));
        if (expected != total) ++mismatches;
    }
    c.lhs = std::to_string(mismatches);
    c.rhs = "0";
    c.pass = mismatches == 0;
    c.note = std::to_string(blocks.size()) + " blocks compared";
}

void build_mult_oracle(const SuiteRanges& r, JobList& jobs) {
    for (Surface s : {Surface::F0, Surface::F2})
        for (int b = 0; b <= r.max_b; ++b)
            jobs.add(fmt("paths %s b=%d", to_string(s).data(), b),
                     fmt("surface=%s, b=%d, all lengths", to_string(s).data(), b),
                     [s, b](CheckResult& c) { check_mult_oracle(s, b, c); });

    for (Surface s : {Surface::F0, Surface::F2})
        for (int b = 0; b <= std::min(r.max_b, 2); ++b)
            for (int g = 0; g <= b + 1; ++g)
                jobs.add(fmt("blocks %s b=%d g=%d", to_string(s).data(), b, g),
                         fmt("surface=%s, b=%d, g=%d", to_string(s).data(), b, g),
                         [s, b, g](CheckResult& c) { check_class_blocks(s, b, g, c); });

    for (int b = 0; b <= r.gamma0_max_b; ++b)
        jobs.add_eq(
            fmt("gamma0 b=%d", b), fmt("b=%d", b),
            [b] {
                const int rr = b + 2;
                LatticePolygon rect = dual_polygon({Surface::F0, 2, rr});
                PathCounter counter(rect);
                LatticePath g0;
                for (int y = rr; y >= 0; --y) g0.points.push_back({0, y});
                for (int y = rr; y >= 0; --y) g0.points.push_back({1, y});
                g0.points.push_back({2, 1});
                g0.points.push_back({2, 0});
                return counter.multiplicity(g0);
            },
            [b] { return BigInt(b + 2); }, "mult(gamma0) = b+2");
}

void build_transpose_symmetry(const SuiteRanges& r, JobList& jobs) {
    for (int a = 0; a <= r.max_a; ++a)
        for (int c = a + 1; c <= r.max_a; ++c)
            for (int g = 2 - 2 * a - 2 * c; g <= r.max_g; ++g)
                jobs.add_eq(
                    fmt("a=%d c=%d g=%+03d", a, c, g), fmt("a=%d, c=%d, g=%d", a, c, g),
                    [=] { return count_tilde({Surface::F0, a, c}, g); },
                    [=] { return count_tilde({Surface::F0, c, a}, g); });
}

void build_cross_method(const SuiteRanges& r, JobList& jobs,
                        const std::shared_ptr<CountTable>& table,
                        const std::shared_ptr<DecomposeOracle>& oracle) {
    jobs.add_eq(
        "anchor f2(2,0) paths", "N^0_F2(2,0) via paths+decompose",
        [=] { return oracle->irreducible(Surface::F2, 2, 0, 0); }, [] { return BigInt(10); });
    jobs.add_eq(
        "anchor f2(2,0) recursion", "N^0_F2(2,0) via recursion",
        [=] { return n0_f2(2, 0, table.get()); }, [] { return BigInt(10); });
    jobs.add_eq(
        "anchor f0(2,2) paths", "N^0_F0(2,2) via paths+decompose",
        [=] { return oracle->irreducible(Surface::F0, 2, 0, 0); }, [] { return BigInt(12); });
    jobs.add_eq(
        "anchor f0(2,2) recursion", "N^0_F0(2,2) via recursion",
        [=] { return n0_f0(2, 2, table.get()); }, [] { return BigInt(12); });

    for (int b = 0; b <= r.max_b; ++b) {
        jobs.add_eq(
            fmt("f2 a=2 b=%d", b), fmt("N^0_F2(2,%d): paths+decompose vs recursion", b),
            [=] { return oracle->irreducible(Surface::F2, 2, b, 0); },
            [=] { return n0_f2(2, b, table.get()); });
        jobs.add_eq(
            fmt("f0 a=2 b=%d", b), fmt("N^0_F0(2,%d): paths+decompose vs recursion", b + 2),
            [=] { return oracle->irreducible(Surface::F0, 2, b, 0); },
            [=] { return n0_f0(2, b + 2, table.get()); });
        jobs.add_eq(
            fmt("f2 a=1 b=%d", b + 1), fmt("N^0_F2(1,%d): paths vs recursion", b + 1),
            [=] { return oracle->irreducible(Surface::F2, 1, b + 1, 0); },
            [=] { return n0_f2(1, b + 1, table.get()); });
        // At g=0 the F0 count exceeds the F2 count by exactly b+2, which
        // matches (b+2) times the unit count Ntilde^0_F2(1, b-2).
        jobs.add_eq(
            fmt("tilde-shift b=%d", b),
            fmt("Ntilde^0_F0(2,%d) vs Ntilde^0_F2(2,%d) + (b+2)", b + 2, b),
            [=] { return oracle->tilde(Surface::F0, 2, b, 0); },
            [=] { return oracle->tilde(Surface::F2, 2, b, 0) + (b + 2); });
        for (int g = 1; g <= 2; ++g)
            jobs.add_eq(
                fmt("tilde-equal b=%d g=%d", b, g),
                fmt("Ntilde^%d_F0(2,%d) vs Ntilde^%d_F2(2,%d)", g, b + 2, g, b),
                [=] { return oracle->tilde(Surface::F0, 2, b, g); },
                [=] { return oracle->tilde(Surface::F2, 2, b, g); });
        if (b >= 2)
            jobs.add_eq(
                fmt("gamma-prime-factor b=%d", b), fmt("Ntilde^0_F2(1,%d) = 1", b - 2),
                [=] { return oracle->tilde(Surface::F2, 1, b - 2, 0); }, [] { return BigInt(1); });
    }
}

// ---- runner ---------------------------------------------------------------

void guard_ranges(const std::string& suite, const SuiteRanges& r) {
    auto refuse = [&](const std::string& what) {
        throw ScopeError("suite '" + suite + "' range exceeds the supported desk scale: " + what);
    };
    if (suite == "mult-oracle" && r.max_b > 6)
        refuse("full path sweeps need b <= 6 (2^(3b+8) paths)");
    if (suite == "mult-oracle" && r.gamma0_max_b > 16) refuse("gamma0 checks need b <= 16");
    if ((suite == "main-theorem-smalla" || suite == "cross-method") && r.max_b > 8)
        refuse("path-based decomposition sweeps need b <= 8");
    if (suite == "a1-closed-form" && r.max_b > 16) refuse("a=1 sweeps need b <= 16");
    if (suite == "transpose-symmetry" && r.max_a > 4)
        refuse("transpose sweeps need a, c <= 4 (polygon of (a+1)(c+1) points)");
    if (suite == "main-theorem-g0" && (r.max_a > 12 || r.max_b > 40))
        refuse("recursion sweeps need a <= 12, b <= 40");
    if ((suite == "lemma31" || suite == "vandermonde") && r.max_n > 60)
        refuse("binomial sweeps need n <= 60");
    if ((suite == "fg-identity" || suite == "fg-recurrence") && (r.max_r > 24 || r.max_s > 24))
        refuse("F/G sweeps need r, s <= 24");
}

std::vector<Job> build_jobs(const std::string& suite, const SuiteRanges& r) {
    JobList jobs;
    auto table = std::make_shared<CountTable>();
    auto oracle = std::make_shared<DecomposeOracle>();
    if (suite == "main-theorem-g0")
        build_main_theorem_g0(r, jobs, table);
    else if (suite == "main-theorem-smalla")
        build_main_theorem_smalla(r, jobs, oracle);
    else if (suite == "lemma31")
        build_lemma31(r, jobs);
    else if (suite == "vandermonde")
        build_vandermonde(r, jobs);
    else if (suite == "a1-closed-form")
        build_a1_closed_form(r, jobs);
    else if (suite == "fg-identity")
        build_fg_identity(r, jobs);
    else if (suite == "fg-recurrence")
        build_fg_recurrence(r, jobs);
    else if (suite == "mult-oracle")
        build_mult_oracle(r, jobs);
    else if (suite == "transpose-symmetry")
        build_transpose_symmetry(r, jobs);
    else if (suite == "cross-method")
        build_cross_method(r, jobs, table, oracle);
    else
        throw std::invalid_argument("unknown suite '" + suite + "'");
    return jobs.take();
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "main-theorem-g0", "main-theorem-smalla", "lemma31",        "vandermonde",
        "a1-closed-form",  "fg-identity",         "fg-recurrence",  "mult-oracle",
        "transpose-symmetry", "cross-method"};
    return names;
}

bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteRanges default_ranges(const std::string& suite) {
    SuiteRanges r;
    if (suite == "main-theorem-g0") {
        r.max_a = 4;
        r.max_b = 6;
    } else if (suite == "main-theorem-smalla") {
        r.max_a = 2;
        r.max_b = 5;
        r.max_g = 4;
    } else if (suite == "lemma31" || suite == "vandermonde") {
        r.max_n = 12;
    } else if (suite == "a1-closed-form") {
        r.max_b = 8;
    } else if (suite == "fg-identity" || suite == "fg-recurrence") {
        r.max_r = 8;
        r.max_s = 8;
    } else if (suite == "mult-oracle") {
        r.max_b = 4;
        r.gamma0_max_b = 8;
    } else if (suite == "transpose-symmetry") {
        r.max_a = 3;
        r.max_g = 2;
    } else if (suite == "cross-method") {
        r.max_b = 4;
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    return r;
}

SuiteRanges apply_overrides(SuiteRanges base, const RangeOverrides& o) {
    if (o.max_a) base.max_a = *o.max_a;
    if (o.max_b) base.max_b = *o.max_b;
    if (o.max_g) base.max_g = *o.max_g;
    if (o.max_n) base.max_n = *o.max_n;
    if (o.max_r) base.max_r = *o.max_r;
    if (o.max_s) base.max_s = *o.max_s;
    if (o.gamma0_max_b) base.gamma0_max_b = *o.gamma0_max_b;
    return base;
}

RangeOverrides overrides_from_config(const std::string& json_text, const std::string& suite) {
    RangeOverrides o;
    json cfg = json::parse(json_text);
    if (cfg.contains("timeout_seconds")) o.timeout_seconds = cfg["timeout_seconds"].get<double>();
    if (cfg.contains("suites") && cfg["suites"].contains(suite)) {
        const json& s = cfg["suites"][suite];
        auto get = [&](const char* key) -> std::optional<int> {
            if (s.contains(key)) return s[key].get<int>();
            return std::nullopt;
        };
        o.max_a = get("max_a");
        o.max_b = get("max_b");
        o.max_g = get("max_g");
        o.max_n = get("max_n");
        o.max_r = get("max_r");
        o.max_s = get("max_s");
        o.gamma0_max_b = get("gamma0_max_b");
    }
    return o;
}

VerificationReport run_suite(const std::string& suite, const SuiteRanges& ranges, int jobs,
                             std::optional<double> timeout_seconds) {
    guard_ranges(suite, ranges);
    std::vector<Job> work = build_jobs(suite, ranges);

    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const auto deadline =
        timeout_seconds ? std::optional(start + std::chrono::duration_cast<clock::duration>(
                                                    std::chrono::duration<double>(*timeout_seconds)))
                        : std::nullopt;

    std::vector<CheckResult> results(work.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> aborted{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= work.size() || aborted.load()) break;
            CheckResult& c = results[i];
            c.id = work[i].id;
            c.inputs = work[i].inputs;
            if (deadline && clock::now() > *deadline) {
                c.skipped = true;
                c.note = "timeout before start";
                continue;
            }
            auto t0 = clock::now();
            try {
                work[i].run(c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                aborted.store(true);
                return;
            }
            c.runtime_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        }
    };

    int n = std::max(1, jobs);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    std::sort(results.begin(), results.end(),
              [](const CheckResult& x, const CheckResult& y) { return x.id < y.id; });

    VerificationReport report;
    report.suite = suite;
    report.checks = std::move(results);
    for (const CheckResult& c : report.checks) {
        ++report.summary.total;
        if (c.skipped)
            ++report.summary.skipped;
        else if (c.pass)
            ++report.summary.passed;
        else
            ++report.summary.failed;
    }
    return report;
}

std::string VerificationReport::to_json(bool with_timing) const {
    json j;
    j["suite"] = suite;
    j["checks"] = json::array();
    for (const CheckResult& c : checks) {
        json jc;
        jc["id"] = c.id;
        jc["inputs"] = c.inputs;
        jc["lhs"] = c.lhs;
        jc["rhs"] = c.rhs;
        jc["status"] = c.skipped ? "skipped" : (c.pass ? "pass" : "fail");
        if (!c.note.empty()) jc["note"] = c.note;
        if (with_timing) jc["runtime_ms"] = c.runtime_ms;
        j["checks"].push_back(std::move(jc));
    }
    j["summary"] = {{"total", summary.total},
                    {"passed", summary.passed},
                    {"failed", summary.failed},
                    {"skipped", summary.skipped}};
    return j.dump(2) + "\n";
}

std::string VerificationReport::to_text(bool with_timing) const {
    std::ostringstream os;
    os << "suite " << suite << "\n";
    for (const CheckResult& c : checks) {
        os << "  [" << (c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL")) << "] " << c.id;
        if (!c.skipped) os << "  " << c.lhs << (c.pass ? " == " : " != ") << c.rhs;
        if (!c.note.empty()) os << "  (" << c.note << ")";
        if (with_timing) os << "  [" << c.runtime_ms << " ms]";
        os << "\n";
    }
    os << "summary: " << summary.passed << "/" << summary.total << " passed, " << summary.failed
       << " failed, " << summary.skipped << " skipped\n";
    return os.str();
}

} // namespace f0f2
