#ifndef GROTHLAB_JSON_IO_HPP
#define GROTHLAB_JSON_IO_HPP

#include <string>
#include <vector>

#include "grothlab/checks.hpp"
#include "grothlab/diagram.hpp"
#include "grothlab/lattice.hpp"
#include "grothlab/pipe_dream.hpp"
#include "grothlab/polynomial.hpp"
#include "grothlab/weight_raiser.hpp"

namespace grothlab {

/// Wire formats.  All emitters produce compact JSON with alphabetically
/// ordered keys and canonically sorted contents, so equal values always
/// serialize to identical bytes.

/// {"n_rows":..., "n_cols":..., "cells":[[i,j],...]} sorted lexicographically.
std::string to_json(const Diagram& d);
Diagram diagram_from_json(const std::string& text);

/// {"n":..., "crosses":[[i,j],...]} sorted lexicographically.
std::string to_json(const PipeDream& p);
PipeDream pipe_dream_from_json(const std::string& text);

/// {"n_vars":..., "terms":[{"exp":[...],"coef":...},...]} in term order.
std::string to_json(const SparsePolynomial& f);

/// {"dim":..., "points":[[...],...]} sorted lexicographically.
std::string to_json(const LatticePointSet& s);

/// {"claim":..., "instance":..., "ok":..., "lhs_minus_rhs":[...],
///  "rhs_minus_lhs":[...]}
std::string to_json(const CheckReport& report);

/// Full raise run for external replay: the inputs, the step records and
/// the final pipe dream with its weight.
std::string raise_run_to_json(const Permutation& w, int row, const PipeDream& initial,
                              const RaiseResult& result);

/// Step records alone; attached to invariant errors.
std::string raise_steps_to_json(const std::vector<RaiseStep>& steps);

}  // namespace grothlab

#endif
