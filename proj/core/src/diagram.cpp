#include "grothlab/diagram.hpp"

#include <algorithm>
#include <cassert>

#include "grothlab/errors.hpp"

namespace grothlab {

Diagram::Diagram(int n_rows, int n_cols, std::vector<Cell> cells)
    : n_rows_(n_rows), n_cols_(n_cols), cells_(std::move(cells)) {
    if (n_rows_ < 1 || n_cols_ < 1)
        throw precondition_error("diagram: grid dimensions must be positive");
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    for (const Cell& c : cells_) {
        if (c.row < 1 || c.row > n_rows_ || c.col < 1 || c.col > n_cols_)
            throw precondition_error("diagram: cell (" + std::to_string(c.row) + "," +
                                     std::to_string(c.col) + ") outside " +
                                     std::to_string(n_rows_) + "x" + std::to_string(n_cols_) +
                                     " grid");
    }
}

bool Diagram::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::vector<int> Diagram::column(int j) const {
    std::vector<int> rows;
    for (const Cell& c : cells_)
        if (c.col == j) rows.push_back(c.row);
    return rows;
}

Diagram rothe_diagram(const Permutation& w) {
    const int n = w.size();
    std::vector<Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i < w.inverse(j) && j < w(i)) cells.push_back(Cell{i, j});
    Diagram d(n, n, std::move(cells));
    assert(d.cell_count() == coxeter_length(w));
    return d;
}

Diagram upward_closure(const Diagram& d) {
    std::vector<int> lowest(static_cast<size_t>(d.n_cols()) + 1, 0);
    for (const Cell& c : d.cells())
        lowest[static_cast<size_t>(c.col)] = std::max(lowest[static_cast<size_t>(c.col)], c.row);
    std::vector<Cell> cells;
    for (int j = 1; j <= d.n_cols(); ++j)
        for (int i = 1; i <= lowest[static_cast<size_t>(j)]; ++i) cells.push_back(Cell{i, j});
    return Diagram(d.n_rows(), d.n_cols(), std::move(cells));
}

WeightVector row_weight(const Diagram& d) {
    WeightVector weight(static_cast<size_t>(d.n_rows()), 0);
    for (const Cell& c : d.cells()) ++weight[static_cast<size_t>(c.row - 1)];
    return weight;
}

WeightVector fireworks_max_weight(const Permutation& w) {
    if (!is_fireworks(w))
        throw precondition_error("fireworks_max_weight: " + w.to_string() +
                                 " is not fireworks");
    const int n = w.size();
    const std::vector<bool> initial = run_initial_flags(w);
    WeightVector weight(static_cast<size_t>(n), 0);
    for (int a = 1; a <= n; ++a) {
        int count = 0;
        for (int j = a + 1; j <= n; ++j)
            if (!initial[static_cast<size_t>(j - 1)]) ++count;
        weight[static_cast<size_t>(a - 1)] = count;
    }
    assert(weight == row_weight(upward_closure(rothe_diagram(w))));
    return weight;
}

}  // namespace grothlab
