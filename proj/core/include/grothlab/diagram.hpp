#ifndef GROTHLAB_DIAGRAM_HPP
#define GROTHLAB_DIAGRAM_HPP

#include <vector>

#include "grothlab/permutation.hpp"
#include "grothlab/types.hpp"

namespace grothlab {

/// A finite set of cells inside an n_rows x n_cols grid, 1-indexed.
class Diagram {
public:
    Diagram(int n_rows, int n_cols, std::vector<Cell> cells);

    int n_rows() const { return n_rows_; }
    int n_cols() const { return n_cols_; }

    /// Sorted by (row, col).
    const std::vector<Cell>& cells() const { return cells_; }

    int cell_count() const { return static_cast<int>(cells_.size()); }

    bool contains(Cell c) const;

    /// Rows occupied in column j, ascending.
    std::vector<int> column(int j) const;

    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    int n_rows_;
    int n_cols_;
    std::vector<Cell> cells_;
};

/// D(w) = {(i,j) : i < w^{-1}(j) and j < w(i)}; has exactly l(w) cells.
Diagram rothe_diagram(const Permutation& w);

/// Cells lying above some cell of D in the same column; idempotent.
Diagram upward_closure(const Diagram& d);

/// Entry a counts the cells in row a.
WeightVector row_weight(const Diagram& d);

/// wt of the upward-closed Rothe diagram of a fireworks permutation,
/// computed positionally: entry a counts positions j > a whose value
/// w(j) does not start a decreasing run.
WeightVector fireworks_max_weight(const Permutation& w);

}  // namespace grothlab

#endif
