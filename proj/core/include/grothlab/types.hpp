#ifndef GROTHLAB_TYPES_HPP
#define GROTHLAB_TYPES_HPP

#include <compare>
#include <vector>

namespace grothlab {

/// Grid cell, 1-indexed: row counts from the top, column from the left.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A tile S comes before T when pipes travelling from the top edge to the
/// left edge reach S first: rows top to bottom, columns right to left
/// within a row.
inline bool tile_before(Cell s, Cell t) {
    return s.row < t.row || (s.row == t.row && s.col > t.col);
}

inline bool tile_strictly_between(Cell x, Cell s, Cell t) {
    return tile_before(s, x) && tile_before(x, t);
}

/// Per-row cross counts of a pipe dream or per-row cell counts of a
/// diagram; entries are nonnegative.
using WeightVector = std::vector<int>;

/// Exponent vector of a monomial; entries are nonnegative.
using Exponent = std::vector<int>;

/// A point of a finite lattice-point set.
using Point = std::vector<int>;

}  // namespace grothlab

#endif
