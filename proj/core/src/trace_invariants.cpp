#include "grothlab/trace_invariants.hpp"

#include <map>
#include <set>

namespace grothlab {

namespace {

std::string cell_text(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

bool involves(const TilePipes& t, int p) { return t.primary == p || t.secondary == p; }

}  // namespace

std::optional<std::string> find_cross_primary_violation(const TraceResult& t) {
    const Permutation& w = t.demazure();
    for (const std::vector<Cell>* list : {&t.real_crosses(), &t.fake_crosses()}) {
        for (const Cell& c : *list) {
            const int primary = t.tile(c).primary;
            if (is_left_to_right_maximum(w, w.inverse(primary), c.row))
                return "cross " + cell_text(c) + " has primary pipe " +
                       std::to_string(primary) + ", a left-to-right maximum from row " +
                       std::to_string(c.row);
        }
    }
    return std::nullopt;
}

std::optional<std::string> find_bump_descent_violation(const TraceResult& t) {
    const int n = t.n();
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c + r <= n; ++c) {
            const Cell bump{r, c};
            if (t.is_real_cross(bump) || t.is_fake_cross(bump)) continue;
            const int p = t.tile(bump).primary;
            // highest real cross below row r with primary p
            std::optional<Cell> highest;
            for (const Cell& x : t.real_crosses())
                if (x.row > r && t.tile(x).primary == p) {
                    highest = x;
                    break;  // real_crosses is sorted by (row, col)
                }
            if (!highest) continue;
            const int q = t.tile(*highest).secondary;
            for (const std::vector<Cell>* list : {&t.real_crosses(), &t.fake_crosses()})
                for (const Cell& x : *list)
                    if (x.row >= r && x.row < highest->row && t.tile(x).primary == q)
                        return "pipe " + std::to_string(q) + " heads cross " + cell_text(x) +
                               " inside rows [" + std::to_string(r) + "," +
                               std::to_string(highest->row) + ") above " +
                               cell_text(*highest);
            for (int rr = r; rr < highest->row; ++rr) {
                const std::optional<Cell> s = t.tile_in_row_with_primary(rr, q);
                if (!s) continue;
                const int k = t.tile(*s).secondary;
                if (k >= q)
                    return "tile " + cell_text(*s) + " headed by pipe " + std::to_string(q) +
                           " has secondary " + std::to_string(k) + " >= " + std::to_string(q);
                // When k is the descending pipe itself the crossing is T';
                // otherwise it must sit strictly earlier.
                const std::optional<Cell> meet = t.real_crossing_of(q, k);
                if (!meet || tile_before(*highest, *meet))
                    return "pipes " + std::to_string(k) + "," + std::to_string(q) +
                           " from tile " + cell_text(*s) + " do not really cross before " +
                           cell_text(*highest);
            }
        }
    }
    return std::nullopt;
}

bool corridor_propagation_ok(const TraceResult& t, Cell a, Cell b, int p, int q) {
    std::set<int> crossing_p;
    std::set<int> crossing_q;
    for (const Cell& x : t.real_crosses()) {
        if (!tile_strictly_between(x, a, b)) continue;
        const TilePipes& tp = t.tile(x);
        if (involves(tp, p) && !involves(tp, q))
            crossing_p.insert(tp.primary == p ? tp.secondary : tp.primary);
        if (involves(tp, q) && !involves(tp, p))
            crossing_q.insert(tp.primary == q ? tp.secondary : tp.primary);
    }
    return crossing_p == crossing_q;
}

std::optional<std::string> find_corridor_violation(const TraceResult& t) {
    const int n = t.n();
    for (const Cell& x : t.real_crosses()) {
        const TilePipes pair = t.tile(x);
        // latest earlier tile where the same two pipes meet
        std::optional<Cell> opening;
        for (int r = 1; r <= x.row; ++r) {
            for (int c = n - r; c >= 1; --c) {
                const Cell y{r, c};
                if (!tile_before(y, x)) continue;
                const TilePipes& tp = t.tile(y);
                if (involves(tp, pair.primary) && involves(tp, pair.secondary)) {
                    if (!opening || tile_before(*opening, y)) opening = y;
                }
            }
        }
        if (!opening) continue;
        if (!corridor_propagation_ok(t, *opening, x, pair.primary, pair.secondary))
            return "pipes " + std::to_string(pair.primary) + "," +
                   std::to_string(pair.secondary) + " between " + cell_text(*opening) +
                   " and " + cell_text(x) + ": some pipe crosses only one of them";
    }
    return std::nullopt;
}

}  // namespace grothlab
