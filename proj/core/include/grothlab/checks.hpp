#ifndef GROTHLAB_CHECKS_HPP
#define GROTHLAB_CHECKS_HPP

#include <string>
#include <vector>

#include "grothlab/diagram.hpp"
#include "grothlab/lattice.hpp"
#include "grothlab/permutation.hpp"

namespace grothlab {

/// Outcome of one machine-checked claim on one instance.  The two
/// difference lists are empty when ok.
struct CheckReport {
    std::string claim;
    std::string instance;
    bool ok = true;
    std::vector<Point> lhs_minus_rhs;
    std::vector<Point> rhs_minus_lhs;
};

/// Support formula for a fireworks permutation: the support of the
/// Grothendieck polynomial (pipe dream enumeration) must equal both the
/// interval union over the Schubert support bounded by the closed Rothe
/// diagram weight, and the column-by-column spanning-set sumset.
CheckReport check_support_formula(const Permutation& w);

/// Spanning-set sumset of arbitrary diagram columns equals the interval
/// union over the base sumset bounded by the closed diagram weight.
CheckReport check_spanning_interval_formula(const Diagram& d);

/// For A contained in B with max(A) = max(B): the spanning-set points of
/// B are contained in those of A.
bool check_spanning_inclusion(const std::vector<int>& a, const std::vector<int>& b, int n);

/// supp(G of the run-layered permutation) contains supp(G of w), both by
/// enumeration; lhs_minus_rhs lists missing points on failure.
CheckReport check_layered_domination(const Permutation& w);

/// Schubert support equals the column-by-column base sumset.
CheckReport check_schubert_support(const Permutation& w);

}  // namespace grothlab

#endif
