#include "grothlab/pipe_dream.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace grothlab {

PipeDream::PipeDream(int n) : n_(n) {
    if (n < 1) throw precondition_error("pipe dream: n must be positive");
    if (n > detail::kMaxTraceN)
        throw precondition_error("pipe dream: n limited to " +
                                 std::to_string(detail::kMaxTraceN));
    rows_.assign(static_cast<size_t>(n), 0u);
}

PipeDream::PipeDream(int n, const std::vector<Cell>& crosses) : PipeDream(n) {
    for (const Cell& c : crosses) {
        check_cell(c);
        rows_[static_cast<size_t>(c.row - 1)] |= 1u << (c.col - 1);
    }
}

PipeDream::PipeDream(int n, const std::vector<std::uint32_t>& row_masks) : PipeDream(n) {
    if (static_cast<int>(row_masks.size()) != n)
        throw precondition_error("pipe dream: need one row mask per row");
    for (int r = 1; r <= n; ++r) {
        const std::uint32_t mask = row_masks[static_cast<size_t>(r - 1)];
        if (n - r < 32 && (mask >> (n - r)) != 0)
            throw precondition_error("pipe dream: cross outside staircase in row " +
                                     std::to_string(r));
        rows_[static_cast<size_t>(r - 1)] = mask;
    }
}

void PipeDream::check_cell(Cell c) const {
    if (c.row < 1 || c.col < 1 || c.row + c.col > n_)
        throw precondition_error("pipe dream: cell (" + std::to_string(c.row) + "," +
                                 std::to_string(c.col) + ") outside staircase of n=" +
                                 std::to_string(n_));
}

PipeDream PipeDream::with_cross(Cell c) const {
    check_cell(c);
    PipeDream out = *this;
    out.rows_[static_cast<size_t>(c.row - 1)] |= 1u << (c.col - 1);
    return out;
}

PipeDream PipeDream::without_cross(Cell c) const {
    check_cell(c);
    PipeDream out = *this;
    out.rows_[static_cast<size_t>(c.row - 1)] &= ~(1u << (c.col - 1));
    return out;
}

std::vector<Cell> PipeDream::crosses() const {
    std::vector<Cell> out;
    for (int r = 1; r <= n_; ++r) {
        std::uint32_t mask = rows_[static_cast<size_t>(r - 1)];
        while (mask) {
            const int c = std::countr_zero(mask) + 1;
            out.push_back(Cell{r, c});
            mask &= mask - 1;
        }
    }
    return out;
}

int PipeDream::cross_count() const {
    int total = 0;
    for (std::uint32_t mask : rows_) total += std::popcount(mask);
    return total;
}

std::string PipeDream::ascii() const {
    std::string out;
    for (int r = 1; r < n_; ++r) {
        for (int c = 1; c + r <= n_; ++c) out += cross_at(r, c) ? '+' : '.';
        out += '\n';
    }
    return out;
}

TraceResult::TraceResult(Permutation demazure, int n, WeightVector weight,
                         std::vector<Cell> real_crosses, std::vector<Cell> fake_crosses,
                         std::vector<TilePipes> tiles)
    : demazure_(std::move(demazure)),
      n_(n),
      weight_(std::move(weight)),
      real_crosses_(std::move(real_crosses)),
      fake_crosses_(std::move(fake_crosses)),
      tiles_(std::move(tiles)) {}

bool TraceResult::is_real_cross(Cell c) const {
    return std::binary_search(real_crosses_.begin(), real_crosses_.end(), c);
}

bool TraceResult::is_fake_cross(Cell c) const {
    return std::binary_search(fake_crosses_.begin(), fake_crosses_.end(), c);
}

std::optional<Cell> TraceResult::real_crossing_of(int p, int q) const {
    for (const Cell& c : real_crosses_) {
        const TilePipes& t = tile(c);
        if ((t.primary == p && t.secondary == q) || (t.primary == q && t.secondary == p))
            return c;
    }
    return std::nullopt;
}

std::optional<Cell> TraceResult::tile_in_row_with_primary(int row, int pipe) const {
    for (int c = 1; c + row <= n_; ++c)
        if (tile(row, c).primary == pipe) return Cell{row, c};
    return std::nullopt;
}

TraceResult trace(const PipeDream& p) {
    const int n = p.n();
    std::vector<int> pipes(static_cast<size_t>(n) + 1);
    for (int c = 1; c <= n; ++c) pipes[static_cast<size_t>(c)] = c;

    std::vector<bool> crossed(static_cast<size_t>(n + 1) * static_cast<size_t>(n + 1), false);
    auto pair_crossed = [&](int a, int b) -> std::vector<bool>::reference {
        return crossed[static_cast<size_t>(a) * static_cast<size_t>(n + 1) +
                       static_cast<size_t>(b)];
    };

    std::vector<int> exits(static_cast<size_t>(n) + 1, 0);
    WeightVector weight(static_cast<size_t>(n), 0);
    std::vector<Cell> real_crosses;
    std::vector<Cell> fake_crosses;
    std::vector<TilePipes> tiles(static_cast<size_t>(n) * static_cast<size_t>(n));

    for (int r = 1; r <= n; ++r) {
        int moving = pipes[static_cast<size_t>(n + 1 - r)];
        for (int c = n - r; c >= 1; --c) {
            const int from_top = pipes[static_cast<size_t>(c)];
            TilePipes& tp = tiles[static_cast<size_t>(r - 1) * static_cast<size_t>(n) +
                                  static_cast<size_t>(c - 1)];
            if (p.cross_at(r, c)) {
                ++weight[static_cast<size_t>(r - 1)];
                if (pair_crossed(from_top, moving)) {
                    fake_crosses.push_back(Cell{r, c});
                    tp = TilePipes{moving, from_top};
                    pipes[static_cast<size_t>(c)] = moving;
                    moving = from_top;
                } else {
                    real_crosses.push_back(Cell{r, c});
                    tp = TilePipes{from_top, moving};
                    pair_crossed(from_top, moving) = true;
                    pair_crossed(moving, from_top) = true;
                    pipes[static_cast<size_t>(c)] = from_top;
                    // moving keeps travelling left
                }
            } else {
                tp = TilePipes{moving, from_top};
                pipes[static_cast<size_t>(c)] = moving;
                moving = from_top;
            }
        }
        exits[static_cast<size_t>(r)] = moving;
    }

    std::vector<int> images(exits.begin() + 1, exits.end());
    Permutation demazure{std::move(images)};
    std::sort(real_crosses.begin(), real_crosses.end());
    std::sort(fake_crosses.begin(), fake_crosses.end());
    assert(fake_crosses.empty() ==
           (p.cross_count() == coxeter_length(demazure)));
    return TraceResult(std::move(demazure), n, std::move(weight), std::move(real_crosses),
                       std::move(fake_crosses), std::move(tiles));
}

PipeDream drop_fakes(const PipeDream& p) {
    const TraceResult t = trace(p);
    PipeDream out = p;
    for (const Cell& c : t.fake_crosses()) out = out.without_cross(c);
    assert([&] {
        const TraceResult check = trace(out);
        return check.reduced() && check.demazure() == t.demazure();
    }());
    return out;
}

std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& w, PipeDreamFilter filter) {
    std::vector<PipeDream> out;
    for_each_pipe_dream(w, [&](const PipeDream& p) { out.push_back(p); }, filter);
    std::sort(out.begin(), out.end(),
              [](const PipeDream& a, const PipeDream& b) { return a.crosses() < b.crosses(); });
    return out;
}

}  // namespace grothlab
