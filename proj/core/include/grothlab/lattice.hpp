#ifndef GROTHLAB_LATTICE_HPP
#define GROTHLAB_LATTICE_HPP

#include <optional>
#include <set>
#include <vector>

#include "grothlab/types.hpp"

namespace grothlab {

/// A finite set of integer vectors of a common dimension.
class LatticePointSet {
public:
    explicit LatticePointSet(int dim);
    LatticePointSet(int dim, std::vector<Point> points);

    int dim() const { return dim_; }
    size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(const Point& p) const { return points_.count(p) != 0; }

    void insert(Point p);

    /// Sorted lexicographically.
    const std::set<Point>& points() const { return points_; }

    friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;

private:
    int dim_;
    std::set<Point> points_;
};

/// Indicator vectors of the bases of the Schubert matroid SM(S): sets
/// B = {b_1 < ... < b_r} in [s_r] with b_i <= s_i.  Empty S yields the
/// singleton {0}, the neutral Minkowski summand.
LatticePointSet schubert_matroid_bases(const std::vector<int>& s, int n);

/// Indicator vectors of the spanning sets: B' in [s_r] of size >= r
/// whose i-th smallest element is <= s_i for i <= r.
LatticePointSet schubert_spanning_sets(const std::vector<int>& s, int n);

/// All sums of one point per set, deduplicated.
LatticePointSet minkowski_sumset(const std::vector<LatticePointSet>& sets);

/// Union over alpha in lows of {gamma : alpha <= gamma <= high}.
LatticePointSet interval_union(const LatticePointSet& lows, const Point& high);

/// A failed exchange: alpha_i > beta_i but no index j with alpha_j <
/// beta_j admits the double move.
struct MConvexWitness {
    Point alpha;
    Point beta;
    int i = 0;
};

/// Empty result means the set satisfies the exchange axiom.
std::optional<MConvexWitness> m_convex_violation(const LatticePointSet& s);

bool is_m_convex(const LatticePointSet& s);

/// Appends d - |alpha| to every point, so all totals equal d.
LatticePointSet homogenize_support(const LatticePointSet& s, int d);

}  // namespace grothlab

#endif
