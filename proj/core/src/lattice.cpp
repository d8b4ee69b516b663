#include "grothlab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "grothlab/errors.hpp"

namespace grothlab {

namespace {

std::string point_text(const Point& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i]);
    }
    return out + ")";
}

struct PointHash {
    size_t operator()(const Point& p) const {
        size_t h = 1469598103934665603ull;
        for (int v : p) {
            h ^= static_cast<size_t>(v) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::vector<int> checked_subset(const std::vector<int>& s, int n) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != s.size())
        throw precondition_error("schubert matroid: repeated element in column set");
    for (int v : sorted)
        if (v < 1 || v > n)
            throw precondition_error("schubert matroid: element " + std::to_string(v) +
                                     " outside [1," + std::to_string(n) + "]");
    return sorted;
}

}  // namespace

LatticePointSet::LatticePointSet(int dim) : dim_(dim) {
    if (dim < 1) throw precondition_error("lattice point set: dimension must be positive");
}

LatticePointSet::LatticePointSet(int dim, std::vector<Point> points) : LatticePointSet(dim) {
    for (Point& p : points) insert(std::move(p));
}

void LatticePointSet::insert(Point p) {
    if (static_cast<int>(p.size()) != dim_)
        throw precondition_error("lattice point set: point of dimension " +
                                 std::to_string(p.size()) + " in set of dimension " +
                                 std::to_string(dim_));
    points_.insert(std::move(p));
}

LatticePointSet schubert_matroid_bases(const std::vector<int>& s, int n) {
    LatticePointSet out(n);
    if (s.empty()) {
        out.insert(Point(static_cast<size_t>(n), 0));
        return out;
    }
    const std::vector<int> sorted = checked_subset(s, n);
    const int r = static_cast<int>(sorted.size());
    Point chosen;
    auto descend = [&](auto&& self, int k, int min_val) -> void {
        if (k == r) {
            Point indicator(static_cast<size_t>(n), 0);
            for (int b : chosen) indicator[static_cast<size_t>(b - 1)] = 1;
            out.insert(std::move(indicator));
            return;
        }
        for (int b = min_val; b <= sorted[static_cast<size_t>(k)]; ++b) {
            chosen.push_back(b);
            self(self, k + 1, b + 1);
            chosen.pop_back();
        }
    };
    descend(descend, 0, 1);
    return out;
}

LatticePointSet schubert_spanning_sets(const std::vector<int>& s, int n) {
    LatticePointSet out(n);
    if (s.empty()) {
        out.insert(Point(static_cast<size_t>(n), 0));
        return out;
    }
    const std::vector<int> sorted = checked_subset(s, n);
    const int r = static_cast<int>(sorted.size());
    const int top = sorted.back();
    if (top > 25)
        throw precondition_error("spanning sets: subset enumeration over [" +
                                 std::to_string(top) + "] is out of scale (max 25)");
    for (std::uint64_t mask = 0; mask < (1ull << top); ++mask) {
        std::vector<int> elems;
        for (int v = 1; v <= top; ++v)
            if ((mask >> (v - 1)) & 1) elems.push_back(v);
        if (static_cast<int>(elems.size()) < r) continue;
        bool ok = true;
        for (int i = 0; i < r; ++i)
            if (elems[static_cast<size_t>(i)] > sorted[static_cast<size_t>(i)]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        Point indicator(static_cast<size_t>(n), 0);
        for (int v : elems) indicator[static_cast<size_t>(v - 1)] = 1;
        out.insert(std::move(indicator));
    }
    return out;
}

LatticePointSet minkowski_sumset(const std::vector<LatticePointSet>& sets) {
    if (sets.empty())
        throw precondition_error("minkowski sumset: need at least one summand");
    const int dim = sets.front().dim();
    for (const LatticePointSet& s : sets)
        if (s.dim() != dim)
            throw precondition_error("minkowski sumset: dimension mismatch (" +
                                     std::to_string(s.dim()) + " vs " + std::to_string(dim) +
                                     ")");
    std::set<Point> acc = sets.front().points();
    for (size_t k = 1; k < sets.size(); ++k) {
        std::set<Point> next;
        for (const Point& a : acc)
            for (const Point& b : sets[k].points()) {
                Point sum = a;
                for (size_t i = 0; i < sum.size(); ++i) sum[i] += b[i];
                next.insert(std::move(sum));
            }
        acc = std::move(next);
    }
    LatticePointSet out(dim);
    for (const Point& p : acc) out.insert(p);
    return out;
}

LatticePointSet interval_union(const LatticePointSet& lows, const Point& high) {
    if (static_cast<int>(high.size()) != lows.dim())
        throw precondition_error("interval union: bound dimension mismatch");
    LatticePointSet out(lows.dim());
    for (const Point& low : lows.points()) {
        for (size_t i = 0; i < high.size(); ++i)
            if (low[i] > high[i])
                throw precondition_error("interval union: low point " + point_text(low) +
                                         " exceeds bound in coordinate " +
                                         std::to_string(i + 1));
        Point cur = low;
        while (true) {
            out.insert(cur);
            size_t i = 0;
            while (i < cur.size()) {
                if (cur[i] < high[i]) {
                    ++cur[i];
                    break;
                }
                cur[i] = low[i];
                ++i;
            }
            if (i == cur.size()) break;
        }
    }
    return out;
}

std::optional<MConvexWitness> m_convex_violation(const LatticePointSet& s) {
    std::unordered_set<Point, PointHash> members(s.points().begin(), s.points().end());
    const size_t dim = static_cast<size_t>(s.dim());
    for (const Point& alpha : s.points()) {
        for (const Point& beta : s.points()) {
            for (size_t i = 0; i < dim; ++i) {
                if (alpha[i] <= beta[i]) continue;
                bool exchanged = false;
                for (size_t j = 0; j < dim && !exchanged; ++j) {
                    if (alpha[j] >= beta[j]) continue;
                    Point a = alpha;
                    --a[i];
                    ++a[j];
                    if (!members.count(a)) continue;
                    Point b = beta;
                    ++b[i];
                    --b[j];
                    if (members.count(b)) exchanged = true;
                }
                if (!exchanged)
                    return MConvexWitness{alpha, beta, static_cast<int>(i + 1)};
            }
        }
    }
    return std::nullopt;
}

bool is_m_convex(const LatticePointSet& s) { return !m_convex_violation(s).has_value(); }

LatticePointSet homogenize_support(const LatticePointSet& s, int d) {
    LatticePointSet out(s.dim() + 1);
    for (const Point& p : s.points()) {
        const int total = std::accumulate(p.begin(), p.end(), 0);
        if (total > d)
            throw precondition_error("homogenize: degree bound " + std::to_string(d) +
                                     " below point total " + std::to_string(total));
        Point q = p;
        q.push_back(d - total);
        out.insert(std::move(q));
    }
    return out;
}

}  // namespace grothlab
