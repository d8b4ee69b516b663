#ifndef GROTHLAB_PERMUTATION_HPP
#define GROTHLAB_PERMUTATION_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "grothlab/types.hpp"

namespace grothlab {

/// A permutation of [n] in one-line notation, 1-indexed throughout.
/// Immutable after construction; the inverse is precomputed.
class Permutation {
public:
    /// images[k] = w(k+1); must be a bijection [n] -> [n].
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// The longest element w0 = n (n-1) ... 1.
    static Permutation longest_element(int n);

    /// Accepts a digit string (n <= 9) or comma-separated integers.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(images_.size()); }

    /// w(i) for 1 <= i <= n.
    int operator()(int i) const { return images_[static_cast<size_t>(i - 1)]; }

    /// w^{-1}(value) for 1 <= value <= n.
    int inverse(int value) const { return inverse_[static_cast<size_t>(value - 1)]; }

    const std::vector<int>& images() const { return images_; }

    /// One-line notation: digit string when n <= 9, else comma-separated.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
    std::vector<int> inverse_;
};

/// Maximal position interval [first, last] carrying strictly decreasing values.
struct Run {
    int first = 0;
    int last = 0;
    friend bool operator==(const Run&, const Run&) = default;
};

/// Number of inversions of w.
int coxeter_length(const Permutation& w);

/// True iff w avoids the vincular pattern 3-12, equivalently iff the
/// initial terms of its decreasing runs increase.
bool is_fireworks(const Permutation& w);

/// True iff w avoids 231 and 312, equivalently iff w is the longest
/// element of a Young subgroup.
bool is_layered(const Permutation& w);

/// Maximal decreasing runs, in order, covering [n].
std::vector<Run> descending_runs(const Permutation& w);

/// Longest element of S_{b1} x S_{b2} x ... as one-line notation
/// c1 (c1-1) ... 1 c2 (c2-1) ... (c1+1) ...
Permutation layered_from_blocks(const std::vector<int>& blocks);

/// The layered permutation whose block sizes are the descending-run
/// lengths of w.  Defined for fireworks w only.
Permutation layered_from_runs(const Permutation& w);

/// flags[p-1] is true iff w(p) > w(q) for all q < p.
std::vector<bool> left_to_right_maxima(const Permutation& w);

/// True iff w(pos) > w(q) for all from <= q < pos.
bool is_left_to_right_maximum(const Permutation& w, int pos, int from = 1);

/// flags[p-1] is true iff position p starts a decreasing run.
std::vector<bool> run_initial_flags(const Permutation& w);

/// Visits all of S_n in lexicographic order of one-line notation.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

}  // namespace grothlab

#endif
