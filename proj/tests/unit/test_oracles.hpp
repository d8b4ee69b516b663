// Independent reference implementations used to cross-check the library.
// Everything here recomputes from definitions, never through the code
// paths under test.
#ifndef GROTHLAB_TEST_ORACLES_HPP
#define GROTHLAB_TEST_ORACLES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "grothlab/permutation.hpp"
#include "grothlab/pipe_dream.hpp"
#include "grothlab/polynomial.hpp"

namespace grothlab::testing {

/// Every staircase tiling of order n, by brute force over cross masks.
inline std::vector<PipeDream> all_tilings(int n) {
    std::vector<Cell> cells;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c + r <= n; ++c) cells.push_back(Cell{r, c});
    std::vector<PipeDream> out;
    const std::uint64_t limit = 1ull << cells.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::vector<Cell> crosses;
        for (size_t k = 0; k < cells.size(); ++k)
            if ((mask >> k) & 1) crosses.push_back(cells[k]);
        out.emplace_back(n, crosses);
    }
    return out;
}

/// PD(w) by filtering every tiling through the trace.
inline std::vector<PipeDream> naive_pipe_dreams(const Permutation& w,
                                                bool reduced_only = false) {
    std::vector<PipeDream> out;
    for (const PipeDream& p : all_tilings(w.size())) {
        const TraceResult t = trace(p);
        if (t.demazure() != w) continue;
        if (reduced_only && !t.reduced()) continue;
        out.push_back(p);
    }
    return out;
}

/// Fireworks via the run-initials characterization.
inline bool fireworks_by_run_initials(const Permutation& w) {
    int previous = 0;
    bool in_run = false;
    for (int p = 1; p <= w.size(); ++p) {
        const bool starts = (p == 1) || w(p) > w(p - 1);
        if (starts) {
            if (in_run && w(p) < previous) return false;
            previous = w(p);
            in_run = true;
        }
    }
    return true;
}

/// Layered via the greedy block decomposition.
inline bool layered_by_blocks(const Permutation& w) {
    int pos = 1;
    int low = 0;
    const int n = w.size();
    while (pos <= n) {
        const int top = w(pos);
        if (top <= low) return false;
        for (int v = top; v > low; --v) {
            if (pos > n || w(pos) != v) return false;
            ++pos;
        }
        low = top;
    }
    return true;
}

/// f * (x_i - x_{i+1}), from scratch.
inline SparsePolynomial multiply_by_difference(const SparsePolynomial& f, int i) {
    SparsePolynomial out(f.n_vars());
    for (const auto& [exp, coef] : f.terms()) {
        Exponent a = exp;
        ++a[static_cast<size_t>(i - 1)];
        out.add_term(a, coef);
        Exponent b = exp;
        ++b[static_cast<size_t>(i)];
        out.add_term(b, -coef);
    }
    return out;
}

/// f with x_i and x_{i+1} swapped.
inline SparsePolynomial swap_variables(const SparsePolynomial& f, int i) {
    SparsePolynomial out(f.n_vars());
    for (const auto& [exp, coef] : f.terms()) {
        Exponent e = exp;
        std::swap(e[static_cast<size_t>(i - 1)], e[static_cast<size_t>(i)]);
        out.add_term(e, coef);
    }
    return out;
}

/// f - g.
inline SparsePolynomial subtract(const SparsePolynomial& f, const SparsePolynomial& g) {
    SparsePolynomial out = f;
    for (const auto& [exp, coef] : g.terms()) out.add_term(exp, -coef);
    return out;
}

/// Deterministic small polynomial generator.
inline SparsePolynomial random_polynomial(int n_vars, int max_deg, int terms,
                                          std::uint64_t& state) {
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::uint32_t>(state >> 33);
    };
    SparsePolynomial f(n_vars);
    for (int t = 0; t < terms; ++t) {
        Exponent e(static_cast<size_t>(n_vars), 0);
        int budget = max_deg;
        for (int k = 0; k < n_vars; ++k) {
            const int v = static_cast<int>(next() % static_cast<std::uint32_t>(budget + 1));
            e[static_cast<size_t>(k)] = v;
            budget -= v;
        }
        const int coef = static_cast<int>(next() % 9) - 4;
        f.add_term(e, coef);
    }
    return f;
}

}  // namespace grothlab::testing

#endif
