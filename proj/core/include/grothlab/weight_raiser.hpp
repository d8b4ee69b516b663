#ifndef GROTHLAB_WEIGHT_RAISER_HPP
#define GROTHLAB_WEIGHT_RAISER_HPP

#include <optional>
#include <vector>

#include "grothlab/pipe_dream.hpp"
#include "grothlab/types.hpp"

namespace grothlab {

/// One rewiring of the surgery.  `tile` gains a cross; `counter_tile`
/// (cases 1 and 2) loses one; `cleared_fakes` are the fake crossings
/// between them, involving one of the rewired pipes, reverted to bumps.
/// Pipe labels not involved in the case are 0.
struct RaiseStep {
    int case_id = 0;  // 0, 1, or 2
    Cell tile;
    std::optional<Cell> counter_tile;
    int pipe_i = 0;
    int pipe_j = 0;
    int pipe_l = 0;
    int pipe_m = 0;
    std::vector<Cell> cleared_fakes;
};

struct RaiseOptions {
    /// Re-check the structural pipe properties on every intermediate
    /// pipe dream.
    /// Costs one O(n^2) pass per surgery step; defaults off in release
    /// builds, where only the final result is verified.
#ifdef NDEBUG
    bool validate_steps = false;
#else
    bool validate_steps = true;
#endif
    /// Step budget per raise: max_step_factor * n^2.  The construction
    /// terminates well inside this; exceeding it means a bug.
    int max_step_factor = 4;
};

struct RaiseResult {
    PipeDream pipe_dream;
    std::vector<RaiseStep> steps;
};

/// Given fireworks w, P in PD(w) and a row with wt(P)_row below
/// wt of the closed Rothe diagram, produces Q in PD(w) with
///   wt(Q)_b = wt(P)_b for b < row   (Q equals P there cell by cell),
///   wt(Q)_row = wt(P)_row + 1,
///   wt(Q)_b <= wt(P)_b for b > row.
/// Precondition violations raise precondition_error; a failed internal
/// step raises invariant_error carrying the step trace.
RaiseResult raise_weight(const PipeDream& p, const Permutation& w, int row,
                         const RaiseOptions& options = {});

/// Repeatedly raises the smallest deficient row until wt equals target.
/// Requires wt(P) <= target <= wt of the closed Rothe diagram.
PipeDream raise_to(const PipeDream& p, const Permutation& w, const WeightVector& target,
                   const RaiseOptions& options = {});

}  // namespace grothlab

#endif
