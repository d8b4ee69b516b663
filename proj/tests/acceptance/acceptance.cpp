// Acceptance suite: one criterion per line, exact values, fixed time
// budgets.  Runs single-threaded; exits nonzero when any criterion
// fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "grothlab/checks.hpp"
#include "grothlab/errors.hpp"
#include "grothlab/polynomial.hpp"
#include "grothlab/trace_invariants.hpp"
#include "grothlab/weight_raiser.hpp"

using namespace grothlab;

namespace {

struct Criterion {
    std::string name;
    std::string description;
    double budget_seconds = 0;  // 0 = no stated budget
    std::function<std::optional<std::string>()> run;
};

long g_validated_steps = 0;  // surgery steps re-checked during criterion 6

std::string weight_text(const WeightVector& w) {
    std::string out = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    return out + ")";
}

std::optional<std::string> criterion_known_2413() {
    const Permutation w = Permutation::parse("2413");
    SparsePolynomial schubert(4);
    schubert.add_term({1, 2, 0, 0}, 1);
    schubert.add_term({2, 1, 0, 0}, 1);
    SparsePolynomial grothendieck = schubert;
    grothendieck.add_term({2, 2, 0, 0}, -1);

    if (schubert_from_pipe_dreams(w) != schubert) return "Schubert polynomial off";
    if (grothendieck_from_pipe_dreams(w) != grothendieck) return "Grothendieck polynomial off";
    if (schubert_by_recursion(w) != schubert) return "Schubert recursion off";
    if (grothendieck_by_recursion(w) != grothendieck) return "Grothendieck recursion off";

    const auto pds = enumerate_pipe_dreams(w);
    if (pds.size() != 3) return "|PD(2413)| = " + std::to_string(pds.size()) + ", want 3";
    int reduced = 0;
    for (const PipeDream& p : pds)
        if (trace(p).reduced()) ++reduced;
    if (reduced != 2) return std::to_string(reduced) + " reduced pipe dreams, want 2";
    return std::nullopt;
}

std::optional<std::string> criterion_weight_31542() {
    const Permutation w = Permutation::parse("31542");
    const WeightVector expected{3, 2, 2, 1, 0};
    const WeightVector by_closure = row_weight(upward_closure(rothe_diagram(w)));
    const WeightVector by_formula = fireworks_max_weight(w);
    if (by_closure != expected) return "closure route gave " + weight_text(by_closure);
    if (by_formula != expected) return "run formula gave " + weight_text(by_formula);
    return std::nullopt;
}

std::optional<std::string> criterion_figure_trace() {
    const PipeDream figure(7, std::vector<Cell>{{1, 1}, {1, 2}, {1, 5}, {2, 2}, {2, 3},
                                                {3, 3}, {3, 4}, {4, 2}, {4, 3}, {5, 1},
                                                {6, 1}});
    const TraceResult t = trace(figure);
    if (t.demazure() != Permutation::parse("3162754"))
        return "traced to " + t.demazure().to_string();
    if (t.weight() != WeightVector{3, 2, 2, 2, 1, 1, 0})
        return "weight " + weight_text(t.weight());
    if (t.fake_crosses() != std::vector<Cell>{{4, 2}, {5, 1}, {6, 1}}) {
        std::string got = "fake crossings";
        for (const Cell& c : t.fake_crosses())
            got += " (" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
        return got;
    }
    return std::nullopt;
}

std::optional<std::string> criterion_oracle_equivalence() {
    int checked = 0;
    std::optional<std::string> failure;
    for_each_permutation(5, [&](const Permutation& w) {
        if (failure) return;
        if (polynomial_from_pipe_dreams(w, true) != schubert_by_recursion(w))
            failure = "Schubert engines disagree for " + w.to_string();
        if (polynomial_from_pipe_dreams(w, false) != grothendieck_by_recursion(w))
            failure = "Grothendieck engines disagree for " + w.to_string();
        ++checked;
    });
    if (failure) return failure;
    if (checked != 120) return "visited " + std::to_string(checked) + " permutations";
    return std::nullopt;
}

std::optional<std::string> criterion_support_formula() {
    int checked = 0;
    std::optional<std::string> failure;
    for_each_permutation(6, [&](const Permutation& w) {
        if (failure || !is_fireworks(w)) return;
        const CheckReport report = check_support_formula(w);
        if (!report.ok)
            failure = w.to_string() + " failed " + report.claim + " with " +
                      std::to_string(report.lhs_minus_rhs.size()) + "/" +
                      std::to_string(report.rhs_minus_lhs.size()) + " stray points";
        ++checked;
    });
    if (failure) return failure;
    if (checked != 203) return "visited " + std::to_string(checked) + " fireworks";
    return std::nullopt;
}

std::optional<std::string> criterion_raise_sweep() {
    RaiseOptions opts;
    opts.validate_steps = true;  // criterion 11 rides on these checks
    std::optional<std::string> failure;
    for_each_permutation(5, [&](const Permutation& w) {
        if (failure || !is_fireworks(w)) return;
        const WeightVector cap = fireworks_max_weight(w);
        for_each_pipe_dream(w, [&](const PipeDream& p) {
            if (failure) return;
            const WeightVector wt = trace(p).weight();
            for (int a = 1; a <= 5 && !failure; ++a) {
                if (wt[static_cast<size_t>(a - 1)] >= cap[static_cast<size_t>(a - 1)])
                    continue;
                try {
                    const RaiseResult res = raise_weight(p, w, a, opts);
                    g_validated_steps += static_cast<long>(res.steps.size());
                    const TraceResult after = trace(res.pipe_dream);
                    if (after.demazure() != w) {
                        failure = w.to_string() + ": demazure changed";
                        return;
                    }
                    for (int b = 1; b <= 5; ++b) {
                        const int now = after.weight()[static_cast<size_t>(b - 1)];
                        const int was = wt[static_cast<size_t>(b - 1)];
                        if (b < a && res.pipe_dream.row_mask(b) != p.row_mask(b))
                            failure = w.to_string() + ": row " + std::to_string(b) +
                                      " modified below raise row " + std::to_string(a);
                        if (b == a && now != was + 1)
                            failure = w.to_string() + ": raise row missed target";
                        if (b > a && now > was)
                            failure = w.to_string() + ": weight rose in row " +
                                      std::to_string(b);
                    }
                } catch (const error& e) {
                    failure = w.to_string() + " row " + std::to_string(a) + ": " + e.what();
                }
            }
        });
    });
    return failure;
}

std::optional<std::string> criterion_m_convex() {
    std::optional<std::string> failure;
    for_each_permutation(6, [&](const Permutation& w) {
        if (failure || !is_fireworks(w)) return;
        const LatticePointSet support = grothendieck_from_pipe_dreams(w).support();
        const WeightVector cap = fireworks_max_weight(w);
        const int degree = std::accumulate(cap.begin(), cap.end(), 0);
        const auto witness = m_convex_violation(homogenize_support(support, degree));
        if (witness) failure = w.to_string() + ": exchange fails";
    });
    return failure;
}

std::optional<std::string> criterion_layered_domination() {
    std::optional<std::string> failure;
    for_each_permutation(6, [&](const Permutation& w) {
        if (failure || !is_fireworks(w)) return;
        const CheckReport report = check_layered_domination(w);
        if (!report.ok)
            failure = report.instance + ": " +
                      std::to_string(report.lhs_minus_rhs.size()) + " points escape";
    });
    return failure;
}

std::optional<std::string> criterion_schubert_support() {
    int checked = 0;
    std::optional<std::string> failure;
    for_each_permutation(6, [&](const Permutation& w) {
        if (failure) return;
        if (!check_schubert_support(w).ok) failure = w.to_string();
        ++checked;
    });
    if (failure) return "column sumset mismatch for " + *failure;
    if (checked != 720) return "visited " + std::to_string(checked) + " permutations";
    return std::nullopt;
}

std::optional<std::string> criterion_spanning_formulas() {
    // 200 seeded random diagrams with n, m <= 5
    std::uint64_t state = 0x5eed;
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::uint32_t>(state >> 33);
    };
    for (int k = 0; k < 200; ++k) {
        const int rows = 1 + static_cast<int>(next() % 5);
        const int cols = 1 + static_cast<int>(next() % 5);
        std::vector<Cell> cells;
        for (int i = 1; i <= rows; ++i)
            for (int j = 1; j <= cols; ++j)
                if (next() % 2) cells.push_back(Cell{i, j});
        if (!check_spanning_interval_formula(Diagram(rows, cols, cells)).ok)
            return "random diagram " + std::to_string(k) + " fails the interval formula";
    }
    // every nested pair with equal maximum, max <= 5
    for (unsigned bmask = 1; bmask < (1u << 5); ++bmask) {
        std::vector<int> b;
        for (int v = 1; v <= 5; ++v)
            if ((bmask >> (v - 1)) & 1) b.push_back(v);
        for (unsigned amask = bmask;; amask = (amask - 1) & bmask) {
            if (amask == 0) break;
            std::vector<int> a;
            for (int v = 1; v <= 5; ++v)
                if ((amask >> (v - 1)) & 1) a.push_back(v);
            if (a.back() != b.back()) continue;
            if (!check_spanning_inclusion(a, b, 5)) {
                std::string msg = "inclusion fails for A={";
                for (int v : a) msg += std::to_string(v) + ",";
                msg += "} B={";
                for (int v : b) msg += std::to_string(v) + ",";
                return msg + "}";
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> criterion_structural_properties() {
    // direct checks across every tiling of the S_5 staircase
    std::vector<Cell> cells;
    for (int r = 1; r <= 5; ++r)
        for (int c = 1; c + r <= 5; ++c) cells.push_back(Cell{r, c});
    for (std::uint32_t mask = 0; mask < (1u << cells.size()); ++mask) {
        std::vector<Cell> crosses;
        for (size_t k = 0; k < cells.size(); ++k)
            if ((mask >> k) & 1) crosses.push_back(cells[k]);
        const PipeDream p(5, crosses);
        const TraceResult t = trace(p);

        if (const auto v = find_cross_primary_violation(t)) return "good-pipes: " + *v;
        if (const auto v = find_bump_descent_violation(t)) return "exists-bump: " + *v;
        if (const auto v = find_corridor_violation(t)) return "case-2-propagates: " + *v;

        // dropping the fakes lower-bounds the weight
        const PipeDream red = drop_fakes(p);
        const TraceResult after = trace(red);
        if (!after.reduced() || after.demazure() != t.demazure())
            return "groth-lower-bounded: reduction broke the trace";
        for (int r = 0; r < 5; ++r)
            if (after.weight()[static_cast<size_t>(r)] > t.weight()[static_cast<size_t>(r)])
                return "groth-lower-bounded: weight rose in row " + std::to_string(r + 1);
    }
    if (g_validated_steps == 0)
        return "criterion 6 recorded no validated surgery steps";
    return std::nullopt;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"C01", "known 2413 values: polynomials and pipe dream counts", 1.0,
         criterion_known_2413},
        {"C02", "closed Rothe weight of 31542 by both routes", 1.0, criterion_weight_31542},
        {"C03", "trace of the nonreduced 3162754 pipe dream", 1.0, criterion_figure_trace},
        {"C04", "pipe dream sums equal the recursions on all of S_5", 30.0,
         criterion_oracle_equivalence},
        {"C05", "three-way support formula for all 203 fireworks in S_6", 600.0,
         criterion_support_formula},
        {"C06", "weight raising holds for every (w, P, a) over fireworks S_5", 300.0,
         criterion_raise_sweep},
        {"C07", "homogenized supports are M-convex across fireworks S_6", 300.0,
         criterion_m_convex},
        {"C08", "run-layered supports dominate across fireworks S_6", 300.0,
         criterion_layered_domination},
        {"C09", "Schubert supports equal column base sumsets on all of S_6", 120.0,
         criterion_schubert_support},
        {"C10", "spanning interval formula and inclusion sweeps", 60.0,
         criterion_spanning_formulas},
        {"C11", "structural pipe properties over S_5 and all validated surgery steps", 0.0,
         criterion_structural_properties},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::optional<std::string> failure;
        try {
            failure = c.run();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!failure && c.budget_seconds > 0 && elapsed > c.budget_seconds)
            failure = "budget exceeded: " + std::to_string(elapsed) + "s > " +
                      std::to_string(c.budget_seconds) + "s";
        if (failure) {
            ++failures;
            std::printf("%s FAIL %s (%.2fs): %s\n", c.name.c_str(), c.description.c_str(),
                        elapsed, failure->c_str());
        } else {
            std::printf("%s PASS %s (%.2fs)\n", c.name.c_str(), c.description.c_str(),
                        elapsed);
        }
        std::fflush(stdout);
    }
    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
