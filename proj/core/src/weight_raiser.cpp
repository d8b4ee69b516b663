#include "grothlab/weight_raiser.hpp"

#include <algorithm>
#include <string>

#include "grothlab/diagram.hpp"
#include "grothlab/errors.hpp"
#include "grothlab/json_io.hpp"
#include "grothlab/trace_invariants.hpp"

namespace grothlab {

namespace {

std::string cell_text(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

bool involves(const TilePipes& t, int p, int q) {
    return t.primary == p || t.primary == q || t.secondary == p || t.secondary == q;
}

/// Shared state of one raise_weight run.
class Raiser {
public:
    Raiser(const PipeDream& p, const Permutation& w, int row, const RaiseOptions& options)
        : original_(p), w_(w), row_(row), options_(options), current_(p), trace_(trace(p)) {}

    RaiseResult run();

private:
    [[noreturn]] void bug(const std::string& msg) const {
        throw invariant_error("raise_weight(" + w_.to_string() + ", row " +
                                  std::to_string(row_) + "): " + msg,
                              raise_steps_to_json(steps_));
    }

    void check_preconditions();

    /// The bump tile in the raise row whose primary pipe is not a
    /// left-to-right maximum of the whole of w, smallest column.
    Cell select_start_tile() const;

    bool row_weight_raised() const {
        return trace_.weight()[static_cast<size_t>(row_ - 1)] == base_weight_ + 1;
    }

    std::optional<Cell> highest_real_cross_below_with_primary(int pipe) const;

    /// Adds a cross at the bump `t`; valid whenever the two pipes of `t`
    /// have already really crossed, so the new cross is fake.
    void apply_fake_cross(Cell t, int pipe_i, int pipe_j);

    /// Moves the real crossing of the two pipes from `counter` to `t`,
    /// clearing the fake crossings they pass through in between.
    void apply_rewire(int case_id, Cell t, Cell counter, int pipe_i, int pipe_j, int pipe_l,
                      int pipe_m);

    void run_case1(int pipe_i);
    void run_case2(int pipe_i);

    void check_step_budget() {
        if (static_cast<int>(steps_.size()) >
            options_.max_step_factor * w_.size() * w_.size())
            bug("step budget exceeded; surgery failed to terminate");
    }

    void check_final() const;

    const PipeDream& original_;
    const Permutation& w_;
    const int row_;
    const RaiseOptions& options_;

    PipeDream current_;
    TraceResult trace_;
    int base_weight_ = 0;
    WeightVector base_vector_;
    std::vector<RaiseStep> steps_;
    std::vector<bool> value_is_maximum_;
};

void Raiser::check_preconditions() {
    const int n = w_.size();
    if (current_.n() != n)
        throw precondition_error("raise_weight: pipe dream size " +
                                 std::to_string(current_.n()) + " differs from |w| = " +
                                 std::to_string(n));
    if (row_ < 1 || row_ > n)
        throw precondition_error("raise_weight: row " + std::to_string(row_) +
                                 " outside [1," + std::to_string(n) + "]");
    if (!is_fireworks(w_))
        throw precondition_error("raise_weight: " + w_.to_string() + " is not fireworks");
    if (trace_.demazure() != w_)
        throw precondition_error("raise_weight: pipe dream traces to " +
                                 trace_.demazure().to_string() + ", not " + w_.to_string());
    const WeightVector cap = fireworks_max_weight(w_);
    base_vector_ = trace_.weight();
    base_weight_ = base_vector_[static_cast<size_t>(row_ - 1)];
    if (base_weight_ >= cap[static_cast<size_t>(row_ - 1)])
        throw precondition_error("raise_weight: row " + std::to_string(row_) +
                                 " already at its maximum weight " +
                                 std::to_string(cap[static_cast<size_t>(row_ - 1)]));
}

Cell Raiser::select_start_tile() const {
    const int n = w_.size();
    for (int c = 1; c + row_ <= n; ++c) {
        const Cell t{row_, c};
        if (current_.cross_at(t)) continue;
        if (!value_is_maximum_[static_cast<size_t>(trace_.tile(t).primary - 1)]) return t;
    }
    bug("no bump tile in row " + std::to_string(row_) +
        " with non-maximal primary pipe; contradicts the maximal-weight count");
}

std::optional<Cell> Raiser::highest_real_cross_below_with_primary(int pipe) const {
    for (const Cell& x : trace_.real_crosses())  // sorted by (row, col)
        if (x.row > row_ && trace_.tile(x).primary == pipe) return x;
    return std::nullopt;
}

void Raiser::apply_fake_cross(Cell t, int pipe_i, int pipe_j) {
    const PipeDream next = current_.with_cross(t);
    const TraceResult next_trace = trace(next);
    if (next_trace.demazure() != w_)
        bug("fake-cross step at " + cell_text(t) + " changed the permutation to " +
            next_trace.demazure().to_string());
    if (options_.validate_steps && !next_trace.is_fake_cross(t))
        bug("new cross at " + cell_text(t) + " expected fake, traced real");
    RaiseStep step;
    step.case_id = 0;
    step.tile = t;
    step.pipe_i = pipe_i;
    step.pipe_j = pipe_j;
    steps_.push_back(std::move(step));
    current_ = next;
    trace_ = next_trace;
}

void Raiser::apply_rewire(int case_id, Cell t, Cell counter, int pipe_i, int pipe_j,
                          int pipe_l, int pipe_m) {
    if (counter.row <= row_)
        bug("counter tile " + cell_text(counter) + " not below the raise row");
    const int p = case_id == 1 ? pipe_i : pipe_l;
    const int q = case_id == 1 ? pipe_j : pipe_m;
    if (options_.validate_steps && !corridor_propagation_ok(trace_, t, counter, p, q))
        bug("corridor between " + cell_text(t) + " and " + cell_text(counter) +
            " has a pipe crossing only one of " + std::to_string(p) + "," +
            std::to_string(q));

    RaiseStep step;
    step.case_id = case_id;
    step.tile = t;
    step.counter_tile = counter;
    step.pipe_i = pipe_i;
    step.pipe_j = pipe_j;
    step.pipe_l = pipe_l;
    step.pipe_m = pipe_m;

    PipeDream next = current_.with_cross(t).without_cross(counter);
    for (const Cell& f : trace_.fake_crosses()) {
        if (!tile_strictly_between(f, t, counter)) continue;
        if (!involves(trace_.tile(f), p, q)) continue;
        if (f.row < row_) bug("surgery touched row " + std::to_string(f.row));
        next = next.without_cross(f);
        step.cleared_fakes.push_back(f);
    }

    const TraceResult next_trace = trace(next);
    if (next_trace.demazure() != w_)
        bug("rewire " + cell_text(t) + " <-> " + cell_text(counter) +
            " changed the permutation to " + next_trace.demazure().to_string());
    for (int b = 1; b <= w_.size(); ++b) {
        const int now = next_trace.weight()[static_cast<size_t>(b - 1)];
        const int before = trace_.weight()[static_cast<size_t>(b - 1)];
        if (b < row_ && now != before) bug("weight changed in row " + std::to_string(b));
        if (b == row_ && now != before && now != before + 1)
            bug("raise-row weight moved from " + std::to_string(before) + " to " +
                std::to_string(now));
        if (b > row_ && now > before) bug("weight rose in row " + std::to_string(b));
    }

    steps_.push_back(std::move(step));
    current_ = next;
    trace_ = next_trace;
}

void Raiser::run_case1(int pipe_i) {
    int previous_column = w_.size() + 1;
    while (!row_weight_raised()) {
        check_step_budget();
        const std::optional<Cell> t_opt = trace_.tile_in_row_with_primary(row_, pipe_i);
        if (!t_opt) bug("pipe " + std::to_string(pipe_i) + " no longer descends through row");
        const Cell t = *t_opt;
        if (current_.cross_at(t))
            bug("pipe " + std::to_string(pipe_i) + " descends at cross " + cell_text(t) +
                ", expected a bump");
        if (t.col >= previous_column)
            bug("tile " + cell_text(t) + " failed to move left of column " +
                std::to_string(previous_column));
        previous_column = t.col;

        const int pipe_j = trace_.tile(t).secondary;
        if (pipe_i < pipe_j) {  // the two pipes have crossed; a fake cross finishes
            apply_fake_cross(t, pipe_i, pipe_j);
            continue;
        }
        if (options_.validate_steps && highest_real_cross_below_with_primary(pipe_i))
            bug("pipe " + std::to_string(pipe_i) +
                " became primary of a real cross below the raise row");
        const std::optional<Cell> counter = trace_.real_crossing_of(pipe_i, pipe_j);
        if (!counter)
            bug("pipes " + std::to_string(pipe_i) + "," + std::to_string(pipe_j) +
                " do not really cross");
        if (counter->row <= row_)
            bug("real crossing " + cell_text(*counter) + " not below the raise row");
        if (options_.validate_steps && trace_.tile(*counter).primary != pipe_j)
            bug("real crossing " + cell_text(*counter) + " has primary " +
                std::to_string(trace_.tile(*counter).primary) + ", expected " +
                std::to_string(pipe_j));
        apply_rewire(1, t, *counter, pipe_i, pipe_j, 0, 0);
    }
}

void Raiser::run_case2(int pipe_i) {
    std::optional<Cell> anchor;    // the bump where pipe_i descends; stays put
    std::optional<int> last_pipe_l;
    int previous_gap = w_.size() + 1;
    while (!row_weight_raised()) {
        check_step_budget();
        const std::optional<Cell> t_opt = trace_.tile_in_row_with_primary(row_, pipe_i);
        if (!t_opt) bug("pipe " + std::to_string(pipe_i) + " no longer descends through row");
        const Cell t = *t_opt;
        if (options_.validate_steps) {
            if (current_.cross_at(t))
                bug("descent tile " + cell_text(t) + " of pipe " + std::to_string(pipe_i) +
                    " is a cross");
            if (anchor && t != *anchor)
                bug("descent tile moved from " + cell_text(*anchor) + " to " + cell_text(t));
        }
        anchor = t;

        const std::optional<Cell> counter = highest_real_cross_below_with_primary(pipe_i);
        if (!counter)
            bug("pipe " + std::to_string(pipe_i) +
                " lost its real cross below the raise row");
        const int pipe_l = trace_.tile(*counter).secondary;
        if (options_.validate_steps) {
            if (last_pipe_l && pipe_l != *last_pipe_l)
                bug("secondary pipe of the target crossing changed from " +
                    std::to_string(*last_pipe_l) + " to " + std::to_string(pipe_l));
            for (const std::vector<Cell>* list :
                 {&trace_.real_crosses(), &trace_.fake_crosses()})
                for (const Cell& x : *list)
                    if (x.row >= row_ && x.row < counter->row &&
                        trace_.tile(x).primary == pipe_l)
                        bug("pipe " + std::to_string(pipe_l) + " heads cross " +
                            cell_text(x) + " above " + cell_text(*counter));
        }
        last_pipe_l = pipe_l;

        const std::optional<Cell> s_opt = trace_.tile_in_row_with_primary(row_, pipe_l);
        if (!s_opt) bug("pipe " + std::to_string(pipe_l) + " does not descend through row");
        const Cell s = *s_opt;
        if (current_.cross_at(s))
            bug("descent tile " + cell_text(s) + " of pipe " + std::to_string(pipe_l) +
                " is a cross");
        const int pipe_m = trace_.tile(s).secondary;
        if (options_.validate_steps && pipe_m >= pipe_l)
            bug("secondary " + std::to_string(pipe_m) + " at " + cell_text(s) +
                " not smaller than " + std::to_string(pipe_l));

        const std::optional<Cell> meeting = trace_.real_crossing_of(pipe_l, pipe_m);
        if (!meeting)
            bug("pipes " + std::to_string(pipe_l) + "," + std::to_string(pipe_m) +
                " do not really cross");
        if (options_.validate_steps &&
            (!tile_before(s, *meeting) || tile_before(*counter, *meeting)))
            bug("crossing " + cell_text(*meeting) + " not between " + cell_text(s) +
                " and " + cell_text(*counter));

        const int gap = s.col - t.col;
        if (gap <= 0)
            bug("descent tile " + cell_text(s) + " not right of " + cell_text(t));
        if (gap >= previous_gap)
            bug("gap between " + cell_text(s) + " and " + cell_text(t) +
                " failed to shrink");
        previous_gap = gap;

        apply_rewire(2, s, *meeting, pipe_i, 0, pipe_l, pipe_m);
    }
}

void Raiser::check_final() const {
    const int n = w_.size();
    if (trace_.demazure() != w_) bug("final pipe dream traces to the wrong permutation");
    for (int b = 1; b < row_; ++b)
        if (current_.row_mask(b) != original_.row_mask(b))
            bug("final pipe dream differs from the input in row " + std::to_string(b));
    for (int b = 1; b <= n; ++b) {
        const int now = trace_.weight()[static_cast<size_t>(b - 1)];
        const int before = base_vector_[static_cast<size_t>(b - 1)];
        if (b == row_ && now != before + 1)
            bug("raise row ended at weight " + std::to_string(now) + ", expected " +
                std::to_string(before + 1));
        if (b > row_ && now > before)
            bug("final weight rose in row " + std::to_string(b));
    }
}

RaiseResult Raiser::run() {
    check_preconditions();
    value_is_maximum_.assign(static_cast<size_t>(w_.size()), false);
    const std::vector<bool> by_position = left_to_right_maxima(w_);
    for (int p = 1; p <= w_.size(); ++p)
        if (by_position[static_cast<size_t>(p - 1)])
            value_is_maximum_[static_cast<size_t>(w_(p) - 1)] = true;

    const Cell start = select_start_tile();
    const int pipe_i = trace_.tile(start).primary;
    const int pipe_j = trace_.tile(start).secondary;

    if (pipe_i < pipe_j) {
        apply_fake_cross(start, pipe_i, pipe_j);
    } else if (!highest_real_cross_below_with_primary(pipe_i)) {
        run_case1(pipe_i);
    } else {
        run_case2(pipe_i);
    }

    check_final();
    return RaiseResult{current_, std::move(steps_)};
}

}  // namespace

RaiseResult raise_weight(const PipeDream& p, const Permutation& w, int row,
                         const RaiseOptions& options) {
    Raiser raiser(p, w, row, options);
    return raiser.run();
}

PipeDream raise_to(const PipeDream& p, const Permutation& w, const WeightVector& target,
                   const RaiseOptions& options) {
    const int n = w.size();
    if (static_cast<int>(target.size()) != n)
        throw precondition_error("raise_to: target length " + std::to_string(target.size()) +
                                 " differs from n = " + std::to_string(n));
    if (!is_fireworks(w))
        throw precondition_error("raise_to: " + w.to_string() + " is not fireworks");
    const WeightVector cap = fireworks_max_weight(w);
    WeightVector weight = trace(p).weight();
    for (int b = 1; b <= n; ++b) {
        const size_t k = static_cast<size_t>(b - 1);
        if (target[k] > cap[k])
            throw precondition_error("raise_to: target exceeds the maximum weight " +
                                     std::to_string(cap[k]) + " in row " + std::to_string(b));
        if (target[k] < weight[k])
            throw precondition_error("raise_to: target below the current weight " +
                                     std::to_string(weight[k]) + " in row " +
                                     std::to_string(b));
    }

    PipeDream current = p;
    while (true) {
        int deficient = 0;
        for (int b = 1; b <= n; ++b)
            if (weight[static_cast<size_t>(b - 1)] < target[static_cast<size_t>(b - 1)]) {
                deficient = b;
                break;
            }
        if (deficient == 0) break;
        RaiseResult raised = raise_weight(current, w, deficient, options);
        current = std::move(raised.pipe_dream);
        weight = trace(current).weight();
    }
    return current;
}

}  // namespace grothlab
