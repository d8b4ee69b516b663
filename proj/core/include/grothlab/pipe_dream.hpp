#ifndef GROTHLAB_PIPE_DREAM_HPP
#define GROTHLAB_PIPE_DREAM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grothlab/errors.hpp"
#include "grothlab/permutation.hpp"
#include "grothlab/types.hpp"

namespace grothlab {

/// Tiling of the staircase {(i,j) : i+j <= n} by cross and bump tiles,
/// stored as one cross bitmask per row (bit col-1).  Cells on the
/// antidiagonal i+j = n+1 carry the half-bump turns and are not part of
/// the staircase.  Immutable; surgery builds modified copies.
class PipeDream {
public:
    /// All bumps.
    explicit PipeDream(int n);

    PipeDream(int n, const std::vector<Cell>& crosses);

    /// From per-row cross bitmasks (bit col-1), row_masks[r-1] for row r.
    PipeDream(int n, const std::vector<std::uint32_t>& row_masks);

    int n() const { return n_; }

    bool cross_at(int row, int col) const {
        return (rows_[static_cast<size_t>(row - 1)] >> (col - 1)) & 1u;
    }
    bool cross_at(Cell c) const { return cross_at(c.row, c.col); }

    std::uint32_t row_mask(int row) const { return rows_[static_cast<size_t>(row - 1)]; }

    PipeDream with_cross(Cell c) const;
    PipeDream without_cross(Cell c) const;

    /// Sorted by (row, col).
    std::vector<Cell> crosses() const;

    /// |P|, the number of cross tiles.
    int cross_count() const;

    /// Crosses as '+', staircase bumps as '.', one row per line.
    std::string ascii() const;

    friend bool operator==(const PipeDream&, const PipeDream&) = default;
    /// Lexicographic on the sorted cross list; the enumeration order.
    friend bool operator<(const PipeDream& a, const PipeDream& b) {
        return a.crosses() < b.crosses();
    }

private:
    void check_cell(Cell c) const;

    int n_;
    std::vector<std::uint32_t> rows_;
};

/// Pipes through one staircase tile: the primary pipe exits the bottom
/// edge, the secondary pipe exits the left edge.  Labels are the
/// entering columns along the top of the grid.
struct TilePipes {
    int primary = 0;
    int secondary = 0;
};

/// Everything the pipe trace determines.  real_crosses and fake_crosses
/// partition the cross tiles; a cross is fake when its two pipes have
/// already really crossed earlier along their travel.
class TraceResult {
public:
    TraceResult(Permutation demazure, int n, WeightVector weight,
                std::vector<Cell> real_crosses, std::vector<Cell> fake_crosses,
                std::vector<TilePipes> tiles);

    const Permutation& demazure() const { return demazure_; }
    int n() const { return n_; }
    const WeightVector& weight() const { return weight_; }
    const std::vector<Cell>& real_crosses() const { return real_crosses_; }
    const std::vector<Cell>& fake_crosses() const { return fake_crosses_; }
    bool reduced() const { return fake_crosses_.empty(); }

    const TilePipes& tile(int row, int col) const {
        return tiles_[static_cast<size_t>(row - 1) * static_cast<size_t>(n_) +
                      static_cast<size_t>(col - 1)];
    }
    const TilePipes& tile(Cell c) const { return tile(c.row, c.col); }

    bool is_real_cross(Cell c) const;
    bool is_fake_cross(Cell c) const;

    /// The unique tile where the pair {p,q} really crosses, if any.
    std::optional<Cell> real_crossing_of(int p, int q) const;

    /// The tile in the given row whose primary pipe is `pipe`, i.e. where
    /// the pipe drops into the next row; absent when the pipe exits at or
    /// above this row.
    std::optional<Cell> tile_in_row_with_primary(int row, int pipe) const;

private:
    Permutation demazure_;
    int n_;
    WeightVector weight_;
    std::vector<Cell> real_crosses_;
    std::vector<Cell> fake_crosses_;
    std::vector<TilePipes> tiles_;
};

/// Traces all n pipes from the top edge to the left edge with Demazure
/// semantics: a cross tile of an already-crossed pair routes as a bump
/// and is recorded fake.
TraceResult trace(const PipeDream& p);

/// Turns the fake crossings of P into bumps; the result is reduced and
/// traces to the same permutation.
PipeDream drop_fakes(const PipeDream& p);

enum class PipeDreamFilter { all, reduced_only };

namespace detail {

inline constexpr int kMaxTraceN = 30;

/// Depth-first enumeration of PD(w): rows top to bottom, cells right to
/// left within a row, tracking pipe order along the row boundary and the
/// really-crossed pairs; prunes whenever the pipe exiting a completed
/// row differs from w(row).  Under reduced_only the fake-cross branch is
/// skipped, which is exact: reduced pipe dreams have no fake crossings.
template <typename Fn>
class PipeDreamSearch {
public:
    PipeDreamSearch(const Permutation& w, PipeDreamFilter filter, Fn& fn)
        : w_(w), n_(w.size()), reduced_only_(filter == PipeDreamFilter::reduced_only), fn_(fn) {
        if (n_ > kMaxTraceN)
            throw precondition_error("pipe dream enumeration limited to n <= " +
                                     std::to_string(kMaxTraceN));
        for (int c = 1; c <= n_; ++c) pipes_[1][c] = c;
        for (auto& row : crossed_)
            for (bool& b : row) b = false;
        for (int r = 0; r <= n_; ++r) masks_[r] = 0;
    }

    void run() { descend_row(1); }

private:
    void descend_row(int r) {
        if (r > n_) {
            emit();
            return;
        }
        visit_cell(r, n_ - r, pipes_[r][n_ + 1 - r]);
    }

    void visit_cell(int r, int c, int moving) {
        if (c == 0) {
            if (moving == w_(r)) descend_row(r + 1);
            return;
        }
        const int from_top = pipes_[r][c];

        // bump
        pipes_[r + 1][c] = moving;
        visit_cell(r, c - 1, from_top);

        const std::uint32_t bit = 1u << (c - 1);
        if (crossed_[from_top][moving]) {
            if (!reduced_only_) {  // fake cross: routes as a bump
                masks_[r] |= bit;
                pipes_[r + 1][c] = moving;
                visit_cell(r, c - 1, from_top);
                masks_[r] &= ~bit;
            }
        } else {  // real cross
            masks_[r] |= bit;
            crossed_[from_top][moving] = crossed_[moving][from_top] = true;
            pipes_[r + 1][c] = from_top;
            visit_cell(r, c - 1, moving);
            crossed_[from_top][moving] = crossed_[moving][from_top] = false;
            masks_[r] &= ~bit;
        }
    }

    void emit() {
        const PipeDream pd(n_, std::vector<std::uint32_t>(masks_ + 1, masks_ + 1 + n_));
        fn_(pd);
    }

    const Permutation& w_;
    int n_;
    bool reduced_only_;
    Fn& fn_;
    std::uint32_t masks_[kMaxTraceN + 2];
    int pipes_[kMaxTraceN + 2][kMaxTraceN + 2];
    bool crossed_[kMaxTraceN + 2][kMaxTraceN + 2];
};

}  // namespace detail

/// Streams every P with trace(P).demazure == w exactly once, in
/// depth-first order.  Use enumerate_pipe_dreams for the canonical
/// (sorted) order.
template <typename Fn>
void for_each_pipe_dream(const Permutation& w, Fn&& fn,
                         PipeDreamFilter filter = PipeDreamFilter::all) {
    detail::PipeDreamSearch<std::remove_reference_t<Fn>> search(w, filter, fn);
    search.run();
}

/// PD(w) (or its reduced part) sorted lexicographically on cross sets.
std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& w,
                                             PipeDreamFilter filter = PipeDreamFilter::all);

}  // namespace grothlab

#endif
