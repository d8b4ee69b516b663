// grothlab command line: compute Schubert/Grothendieck polynomials and
// supports from pipe dreams, replay the weight-raising surgery, and run
// the verification sweeps.
//
// Exit codes: 0 success, 1 claim failure found, 2 usage or parse error,
// 3 precondition violation, 4 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "grothlab/checks.hpp"
#include "grothlab/errors.hpp"
#include "grothlab/json_io.hpp"
#include "grothlab/polynomial.hpp"
#include "grothlab/trace_invariants.hpp"
#include "grothlab/weight_raiser.hpp"

namespace {

using namespace grothlab;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInvariant = 4;

std::string point_text(const Point& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i]);
    }
    return out + ")";
}

int worker_count(int jobs_flag) {
    if (const char* env = std::getenv("GROTHLAB_THREADS")) {
        try {
            const int parsed = std::stoi(env);
            if (parsed < 1) throw std::invalid_argument("nonpositive");
            return parsed;
        } catch (const std::exception&) {
            throw parse_error(std::string("GROTHLAB_THREADS is not a positive integer: ") +
                              env);
        }
    }
    if (jobs_flag > 0) return jobs_flag;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

/// One sweep instance; run() yields a failure report or nothing.
struct Instance {
    std::string label;
    std::function<std::optional<std::string>()> run;
};

struct SweepResult {
    size_t checked = 0;
    std::vector<std::pair<std::string, std::string>> failures;  // label, report
};

/// Work-stealing over the instance list via a shared counter; results
/// land in pre-assigned slots so the report order never depends on
/// scheduling.  fail_fast stops handing out new instances after the
/// first failure (in-flight work still completes).
SweepResult run_sweep(const std::vector<Instance>& instances, int jobs, bool fail_fast) {
    std::vector<std::optional<std::string>> slots(instances.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};
    std::atomic<size_t> done{0};

    auto work = [&]() {
        while (true) {
            if (fail_fast && stop.load()) break;
            const size_t k = next.fetch_add(1);
            if (k >= instances.size()) break;
            slots[k] = instances[k].run();
            done.fetch_add(1);
            if (slots[k].has_value() && fail_fast) stop.store(true);
        }
    };

    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    SweepResult result;
    result.checked = done.load();
    for (size_t k = 0; k < instances.size(); ++k)
        if (slots[k].has_value()) result.failures.emplace_back(instances[k].label, *slots[k]);
    return result;
}

std::vector<Permutation> filtered_permutations(int n, const std::string& filter,
                                               bool need_fireworks) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& w) {
        if (filter == "fireworks" && !is_fireworks(w)) return;
        if (filter == "layered" && !is_layered(w)) return;
        if (need_fireworks && !is_fireworks(w)) return;
        out.push_back(w);
    });
    return out;
}

std::optional<std::string> report_failure(const CheckReport& report) {
    if (report.ok) return std::nullopt;
    return to_json(report);
}

// ---------------------------------------------------------------- verify

std::vector<Instance> build_instances(const std::string& claim, int n,
                                      const std::string& filter, std::uint64_t seed) {
    std::vector<Instance> out;
    auto add_perm_instances =
        [&](bool need_fireworks,
            std::function<std::optional<std::string>(const Permutation&)> fn) {
            for (const Permutation& w : filtered_permutations(n, filter, need_fireworks)) {
                out.push_back(Instance{w.to_string(), [w, fn]() { return fn(w); }});
            }
        };

    if (claim == "main-support") {
        add_perm_instances(true, [](const Permutation& w) {
            return report_failure(check_support_formula(w));
        });
    } else if (claim == "m-convex") {
        add_perm_instances(true, [](const Permutation& w) -> std::optional<std::string> {
            const LatticePointSet support = grothendieck_from_pipe_dreams(w).support();
            const WeightVector cap = fireworks_max_weight(w);
            const int degree = std::accumulate(cap.begin(), cap.end(), 0);
            const auto witness = m_convex_violation(homogenize_support(support, degree));
            if (!witness) return std::nullopt;
            json j;
            j["claim"] = "m-convex";
            j["instance"] = w.to_string();
            j["ok"] = false;
            j["alpha"] = witness->alpha;
            j["beta"] = witness->beta;
            j["index"] = witness->i;
            return j.dump();
        });
    } else if (claim == "layered") {
        add_perm_instances(true, [](const Permutation& w) {
            return report_failure(check_layered_domination(w));
        });
    } else if (claim == "schub-support") {
        add_perm_instances(false, [](const Permutation& w) {
            return report_failure(check_schubert_support(w));
        });
    } else if (claim == "oracle-equiv") {
        add_perm_instances(false, [](const Permutation& w) -> std::optional<std::string> {
            if (polynomial_from_pipe_dreams(w, true) != schubert_by_recursion(w))
                return "schubert engines disagree for " + w.to_string();
            if (polynomial_from_pipe_dreams(w, false) != grothendieck_by_recursion(w))
                return "grothendieck engines disagree for " + w.to_string();
            return std::nullopt;
        });
    } else if (claim == "raise-sweep") {
        add_perm_instances(true, [](const Permutation& w) -> std::optional<std::string> {
            RaiseOptions opts;
            opts.validate_steps = true;
            const WeightVector cap = fireworks_max_weight(w);
            std::optional<std::string> failure;
            for_each_pipe_dream(w, [&](const PipeDream& p) {
                if (failure) return;
                const WeightVector wt = trace(p).weight();
                for (int a = 1; a <= w.size() && !failure; ++a) {
                    if (wt[static_cast<size_t>(a - 1)] >= cap[static_cast<size_t>(a - 1)])
                        continue;
                    try {
                        const RaiseResult res = raise_weight(p, w, a, opts);
                        const TraceResult after = trace(res.pipe_dream);
                        if (after.demazure() != w) failure = "demazure changed";
                        for (int b = 1; b <= w.size(); ++b) {
                            const int now = after.weight()[static_cast<size_t>(b - 1)];
                            const int was = wt[static_cast<size_t>(b - 1)];
                            if (b < a && res.pipe_dream.row_mask(b) != p.row_mask(b))
                                failure = "row " + std::to_string(b) + " changed";
                            if (b == a && now != was + 1) failure = "raise row off target";
                            if (b > a && now > was) failure = "weight rose below";
                        }
                    } catch (const error& e) {
                        failure = std::string("exception: ") + e.what();
                    }
                }
            });
            return failure;
        });
    } else if (claim == "psp-formula") {
        // 200 seeded random diagrams, then every nested pair with equal max
        std::uint64_t state = seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull;
        auto next = [&state]() {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            return static_cast<std::uint32_t>(state >> 33);
        };
        const int bound = std::min(n, 5);
        for (int k = 0; k < 200; ++k) {
            const int rows = 1 + static_cast<int>(next() % static_cast<unsigned>(bound));
            const int cols = 1 + static_cast<int>(next() % static_cast<unsigned>(bound));
            std::vector<Cell> cells;
            for (int i = 1; i <= rows; ++i)
                for (int j = 1; j <= cols; ++j)
                    if (next() % 2) cells.push_back(Cell{i, j});
            const Diagram d(rows, cols, cells);
            out.push_back(Instance{"diagram#" + std::to_string(k), [d]() {
                                       return report_failure(
                                           check_spanning_interval_formula(d));
                                   }});
        }
        const int top = std::min(n, 5);
        for (unsigned bmask = 1; bmask < (1u << top); ++bmask) {
            std::vector<int> b;
            for (int v = 1; v <= top; ++v)
                if ((bmask >> (v - 1)) & 1) b.push_back(v);
            for (unsigned amask = bmask;; amask = (amask - 1) & bmask) {
                if (amask == 0) break;
                std::vector<int> a;
                for (int v = 1; v <= top; ++v)
                    if ((amask >> (v - 1)) & 1) a.push_back(v);
                if (a.back() == b.back()) {
                    std::string label = "pair";
                    for (int v : a) label += "_" + std::to_string(v);
                    label += "_in";
                    for (int v : b) label += "_" + std::to_string(v);
                    const int dim = top;
                    out.push_back(
                        Instance{label, [a, b, dim]() -> std::optional<std::string> {
                                     if (check_spanning_inclusion(a, b, dim))
                                         return std::nullopt;
                                     return "spanning points not nested";
                                 }});
                }
            }
        }
    } else {
        throw parse_error("unknown claim: " + claim);
    }
    return out;
}

int cmd_verify(const std::string& claim, int n, const std::string& filter, std::uint64_t seed,
               int jobs_flag, bool fail_fast, bool as_json) {
    if (n < 1) throw precondition_error("verify: --n must be at least 1");
    const std::vector<Instance> instances = build_instances(claim, n, filter, seed);
    const int jobs = fail_fast ? 1 : worker_count(jobs_flag);
    const SweepResult result = run_sweep(instances, jobs, fail_fast);

    if (as_json) {
        json j;
        j["claim"] = claim;
        j["n"] = n;
        j["filter"] = filter;
        j["seed"] = seed;
        j["checked"] = result.checked;
        json failures = json::array();
        for (const auto& [label, report] : result.failures) {
            json f;
            f["instance"] = label;
            try {
                f["report"] = json::parse(report);
            } catch (const json::exception&) {
                f["report"] = report;
            }
            failures.push_back(std::move(f));
        }
        j["failures"] = std::move(failures);
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& [label, report] : result.failures)
            std::cout << "FAIL " << label << ": " << report << "\n";
        std::cout << "checked " << result.checked << " instances, " << result.failures.size()
                  << " failures\n";
    }
    return result.failures.empty() ? kExitOk : kExitClaimFailure;
}

// ------------------------------------------------------------------ poly

int cmd_poly(const std::string& perm_text, bool schubert, const std::string& engine,
             bool as_json) {
    const Permutation w = Permutation::parse(perm_text);
    SparsePolynomial f = [&]() {
        if (engine == "recursion")
            return schubert ? schubert_by_recursion(w) : grothendieck_by_recursion(w);
        return polynomial_from_pipe_dreams(w, schubert);
    }();
    if (as_json)
        std::cout << to_json(f) << "\n";
    else
        std::cout << f.to_text() << "\n";
    return kExitOk;
}

// --------------------------------------------------------------- support

int cmd_support(const std::string& perm_text, bool use_formula, bool as_json) {
    const Permutation w = Permutation::parse(perm_text);
    LatticePointSet support = [&]() {
        if (use_formula) {
            if (!is_fireworks(w))
                throw precondition_error("--formula requires a fireworks permutation; " +
                                         w.to_string() + " contains a 3-12 pattern");
            const WeightVector bound = row_weight(upward_closure(rothe_diagram(w)));
            return interval_union(schubert_from_pipe_dreams(w).support(), bound);
        }
        return grothendieck_from_pipe_dreams(w).support();
    }();
    if (as_json) {
        std::cout << to_json(support) << "\n";
    } else {
        for (const Point& p : support.points()) std::cout << point_text(p) << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------ pipedreams

int cmd_pipedreams(const std::string& perm_text, bool count_only, bool reduced_only,
                   bool as_json) {
    const Permutation w = Permutation::parse(perm_text);
    const auto pds = enumerate_pipe_dreams(
        w, reduced_only ? PipeDreamFilter::reduced_only : PipeDreamFilter::all);
    size_t reduced_count = 0;
    for (const PipeDream& p : pds)
        if (trace(p).reduced()) ++reduced_count;

    if (as_json) {
        json j;
        j["perm"] = w.to_string();
        j["count"] = pds.size();
        j["reduced_count"] = reduced_count;
        if (!count_only) {
            json list = json::array();
            for (const PipeDream& p : pds) list.push_back(json::parse(to_json(p)));
            j["pipe_dreams"] = std::move(list);
        }
        std::cout << j.dump() << "\n";
        return kExitOk;
    }

    if (!count_only) {
        for (const PipeDream& p : pds) {
            const TraceResult t = trace(p);
            std::cout << p.ascii() << "weight " << point_text(t.weight()) << ", "
                      << (t.reduced() ? "reduced" : "nonreduced") << "\n\n";
        }
    }
    std::cout << pds.size() << " pipe dreams (" << reduced_count << " reduced)\n";
    return kExitOk;
}

// ----------------------------------------------------------------- raise

int cmd_raise(const std::string& perm_text, int row, const std::string& file,
              bool validate) {
    const Permutation w = Permutation::parse(perm_text);
    std::string input;
    if (file.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        input = buffer.str();
    } else {
        std::ifstream in(file);
        if (!in) throw parse_error("cannot open " + file);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        input = buffer.str();
    }
    const PipeDream p = pipe_dream_from_json(input);
    RaiseOptions opts;
    if (validate) opts.validate_steps = true;
    const RaiseResult result = raise_weight(p, w, row, opts);
    std::cout << raise_run_to_json(w, row, p, result) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pipe dreams, Grothendieck supports and weight-raising surgery"};
    app.require_subcommand(1);

    // poly
    auto* poly = app.add_subcommand("poly", "print a Schubert or Grothendieck polynomial");
    std::string poly_perm;
    bool poly_schubert = false, poly_grothendieck = false, poly_json = false;
    std::string poly_engine = "pipedream";
    poly->add_option("perm", poly_perm, "permutation in one-line notation")->required();
    poly->add_flag("--schubert", poly_schubert, "the Schubert polynomial");
    poly->add_flag("--grothendieck", poly_grothendieck, "the Grothendieck polynomial");
    poly->add_option("--engine", poly_engine, "pipedream or recursion")
        ->check(CLI::IsMember({"pipedream", "recursion"}));
    poly->add_flag("--json", poly_json, "machine-readable output");

    // support
    auto* support = app.add_subcommand("support", "list the Grothendieck support");
    std::string support_perm;
    bool support_formula = false, support_json = false;
    support->add_option("perm", support_perm, "permutation in one-line notation")->required();
    support->add_flag("--formula", support_formula,
                      "use the interval-union formula (fireworks only)");
    support->add_flag("--json", support_json, "machine-readable output");

    // pipedreams
    auto* pipedreams = app.add_subcommand("pipedreams", "list or count PD(w)");
    std::string pd_perm;
    bool pd_count = false, pd_reduced = false, pd_json = false;
    pipedreams->add_option("perm", pd_perm, "permutation in one-line notation")->required();
    pipedreams->add_flag("--count", pd_count, "print counts only");
    pipedreams->add_flag("--reduced", pd_reduced, "restrict to reduced pipe dreams");
    pipedreams->add_flag("--json", pd_json, "machine-readable output");

    // raise
    auto* raise = app.add_subcommand("raise", "raise a pipe dream weight in one row");
    std::string raise_perm, raise_file;
    int raise_row = 0;
    bool raise_validate = false;
    raise->add_option("--perm", raise_perm, "permutation in one-line notation")->required();
    raise->add_option("--row", raise_row, "row whose weight goes up by one")->required();
    raise->add_option("--file", raise_file, "pipe dream JSON file (default: stdin)");
    raise->add_flag("--validate", raise_validate, "re-check every intermediate step");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    std::string verify_claim, verify_filter = "all";
    int verify_n = 5, verify_jobs = 0;
    std::uint64_t verify_seed = 0;
    bool verify_fail_fast = false, verify_json = false;
    verify
        ->add_option("claim", verify_claim,
                     "main-support | m-convex | layered | schub-support | psp-formula | "
                     "oracle-equiv | raise-sweep")
        ->required()
        ->check(CLI::IsMember({"main-support", "m-convex", "layered", "schub-support",
                               "psp-formula", "oracle-equiv", "raise-sweep"}));
    verify->add_option("--n", verify_n, "symmetric group size (default 5)");
    verify->add_option("--filter", verify_filter, "all | fireworks | layered")
        ->check(CLI::IsMember({"all", "fireworks", "layered"}));
    verify->add_option("--seed", verify_seed, "seed for randomized instances");
    verify->add_option("--jobs", verify_jobs,
                       "worker threads (GROTHLAB_THREADS overrides; default: hardware)");
    verify->add_flag("--fail-fast", verify_fail_fast,
                     "stop at the first failure (single-threaded)");
    verify->add_flag("--json", verify_json, "machine-readable output");

    try {
        app.parse(argc, argv);

        if (poly->parsed()) {
            if (poly_schubert == poly_grothendieck)
                throw CLI::ValidationError("poly",
                                           "exactly one of --schubert/--grothendieck");
            return cmd_poly(poly_perm, poly_schubert, poly_engine, poly_json);
        }
        if (support->parsed())
            return cmd_support(support_perm, support_formula, support_json);
        if (pipedreams->parsed())
            return cmd_pipedreams(pd_perm, pd_count, pd_reduced, pd_json);
        if (raise->parsed())
            return cmd_raise(raise_perm, raise_row, raise_file, raise_validate);
        if (verify->parsed())
            return cmd_verify(verify_claim, verify_n, verify_filter, verify_seed,
                              verify_jobs, verify_fail_fast, verify_json);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const invariant_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        if (!e.trace_json().empty()) std::cerr << e.trace_json() << "\n";
        return kExitInvariant;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource exhaustion: out of memory\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
