#include "grothlab/checks.hpp"

#include <algorithm>

#include "grothlab/errors.hpp"
#include "grothlab/polynomial.hpp"

namespace grothlab {

namespace {

std::vector<Point> set_difference(const LatticePointSet& a, const LatticePointSet& b) {
    std::vector<Point> out;
    for (const Point& p : a.points())
        if (!b.contains(p)) out.push_back(p);
    return out;
}

CheckReport compare_sets(std::string claim, std::string instance, const LatticePointSet& lhs,
                         const LatticePointSet& rhs) {
    CheckReport report;
    report.claim = std::move(claim);
    report.instance = std::move(instance);
    report.lhs_minus_rhs = set_difference(lhs, rhs);
    report.rhs_minus_lhs = set_difference(rhs, lhs);
    report.ok = report.lhs_minus_rhs.empty() && report.rhs_minus_lhs.empty();
    return report;
}

LatticePointSet column_sumset(const Diagram& d, bool spanning) {
    std::vector<LatticePointSet> summands;
    for (int j = 1; j <= d.n_cols(); ++j) {
        const std::vector<int> column = d.column(j);
        summands.push_back(spanning ? schubert_spanning_sets(column, d.n_rows())
                                    : schubert_matroid_bases(column, d.n_rows()));
    }
    return minkowski_sumset(summands);
}

}  // namespace

CheckReport check_support_formula(const Permutation& w) {
    if (!is_fireworks(w))
        throw precondition_error("support formula: " + w.to_string() + " is not fireworks");
    const std::string instance = w.to_string();

    const LatticePointSet enumerated = grothendieck_from_pipe_dreams(w).support();
    const LatticePointSet schubert = schubert_from_pipe_dreams(w).support();
    const WeightVector bound = row_weight(upward_closure(rothe_diagram(w)));
    const LatticePointSet by_intervals = interval_union(schubert, bound);

    CheckReport report =
        compare_sets("main-support:enumeration=interval-union", instance, enumerated,
                     by_intervals);
    if (!report.ok) return report;

    const LatticePointSet by_columns = column_sumset(rothe_diagram(w), true);
    return compare_sets("main-support:enumeration=column-sumset", instance, enumerated,
                        by_columns);
}

CheckReport check_spanning_interval_formula(const Diagram& d) {
    std::string instance = "diagram " + std::to_string(d.n_rows()) + "x" +
                           std::to_string(d.n_cols()) + " with " +
                           std::to_string(d.cell_count()) + " cells;";
    for (const Cell& c : d.cells())
        instance += " (" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";

    const LatticePointSet spanning_sum = column_sumset(d, true);
    const LatticePointSet base_sum = column_sumset(d, false);
    const WeightVector bound = row_weight(upward_closure(d));
    const LatticePointSet by_intervals = interval_union(base_sum, bound);
    return compare_sets("psp-formula", std::move(instance), spanning_sum, by_intervals);
}

bool check_spanning_inclusion(const std::vector<int>& a, const std::vector<int>& b, int n) {
    if (a.empty() || b.empty())
        throw precondition_error("spanning inclusion: sets must be nonempty");
    for (int v : a)
        if (std::find(b.begin(), b.end(), v) == b.end())
            throw precondition_error("spanning inclusion: A is not contained in B");
    if (*std::max_element(a.begin(), a.end()) != *std::max_element(b.begin(), b.end()))
        throw precondition_error("spanning inclusion: max(A) differs from max(B)");
    const LatticePointSet of_a = schubert_spanning_sets(a, n);
    const LatticePointSet of_b = schubert_spanning_sets(b, n);
    for (const Point& p : of_b.points())
        if (!of_a.contains(p)) return false;
    return true;
}

CheckReport check_layered_domination(const Permutation& w) {
    if (!is_fireworks(w))
        throw precondition_error("layered domination: " + w.to_string() +
                                 " is not fireworks");
    const Permutation layered = layered_from_runs(w);
    const LatticePointSet of_w = grothendieck_from_pipe_dreams(w).support();
    const LatticePointSet of_layered = grothendieck_from_pipe_dreams(layered).support();

    CheckReport report;
    report.claim = "layered";
    report.instance = w.to_string() + " vs " + layered.to_string();
    report.lhs_minus_rhs = set_difference(of_w, of_layered);
    report.ok = report.lhs_minus_rhs.empty();
    return report;
}

CheckReport check_schubert_support(const Permutation& w) {
    const LatticePointSet enumerated = schubert_from_pipe_dreams(w).support();
    const LatticePointSet by_columns = column_sumset(rothe_diagram(w), false);
    return compare_sets("schub-support", w.to_string(), enumerated, by_columns);
}

}  // namespace grothlab
