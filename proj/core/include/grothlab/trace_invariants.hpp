#ifndef GROTHLAB_TRACE_INVARIANTS_HPP
#define GROTHLAB_TRACE_INVARIANTS_HPP

#include <optional>
#include <string>

#include "grothlab/pipe_dream.hpp"

namespace grothlab {

/// Structural facts about traced pipe dreams that the weight-raising
/// surgery relies on.  Each finder returns a description of the first
/// violation, or nothing when the property holds; violations signal an
/// implementation bug.

/// Every cross tile in row r must have a primary pipe that is not a
/// left-to-right maximum of w(r) w(r+1) ... w(n), where w = demazure.
std::optional<std::string> find_cross_primary_violation(const TraceResult& t);

/// For every bump tile T in row r whose primary pipe also heads the
/// highest real cross T' below (say in row r', with secondary pipe q):
///   (1) q is primary of no cross tile, real or fake, in rows [r, r');
///   (2) every tile S in rows [r, r') with primary pipe q is a bump whose
///       secondary pipe k satisfies k < q and really crosses q before T'.
std::optional<std::string> find_bump_descent_violation(const TraceResult& t);

/// Each pipe with a real crossing against p or q strictly between tiles
/// A and B (A before B) must really cross both strictly between.
bool corridor_propagation_ok(const TraceResult& t, Cell a, Cell b, int p, int q);

/// Applies the corridor check to every real crossing, taking as the
/// other endpoint the latest earlier tile where the same two pipes meet.
std::optional<std::string> find_corridor_violation(const TraceResult& t);

}  // namespace grothlab

#endif
