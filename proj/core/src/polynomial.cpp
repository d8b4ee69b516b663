#include "grothlab/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

#include "grothlab/errors.hpp"
#include "grothlab/pipe_dream.hpp"

namespace grothlab {

namespace {

int total_degree(const Exponent& exp) { return std::accumulate(exp.begin(), exp.end(), 0); }

}  // namespace

SparsePolynomial::SparsePolynomial(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1) throw precondition_error("polynomial: n_vars must be positive");
}

SparsePolynomial SparsePolynomial::constant(int n_vars, const mpz_class& c) {
    SparsePolynomial f(n_vars);
    f.add_term(Exponent(static_cast<size_t>(n_vars), 0), c);
    return f;
}

SparsePolynomial SparsePolynomial::monomial(Exponent exp, const mpz_class& c) {
    SparsePolynomial f(static_cast<int>(exp.size()));
    f.add_term(exp, c);
    return f;
}

mpz_class SparsePolynomial::coefficient(const Exponent& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void SparsePolynomial::add_term(const Exponent& exp, const mpz_class& coef) {
    if (static_cast<int>(exp.size()) != n_vars_)
        throw precondition_error("polynomial: exponent of length " +
                                 std::to_string(exp.size()) + " in " +
                                 std::to_string(n_vars_) + " variables");
    for (int e : exp)
        if (e < 0) throw precondition_error("polynomial: negative exponent");
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    if (other.n_vars_ != n_vars_)
        throw precondition_error("polynomial: adding polynomials in different variables");
    for (const auto& [exp, coef] : other.terms_) add_term(exp, coef);
    return *this;
}

int SparsePolynomial::max_total_degree() const {
    int best = -1;
    for (const auto& [exp, coef] : terms_) best = std::max(best, total_degree(exp));
    return best;
}

int SparsePolynomial::min_total_degree() const {
    int best = -1;
    for (const auto& [exp, coef] : terms_) {
        const int d = total_degree(exp);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

SparsePolynomial SparsePolynomial::top_component() const {
    SparsePolynomial out(n_vars_);
    const int d = max_total_degree();
    for (const auto& [exp, coef] : terms_)
        if (total_degree(exp) == d) out.add_term(exp, coef);
    return out;
}

SparsePolynomial SparsePolynomial::bottom_component() const {
    SparsePolynomial out(n_vars_);
    const int d = min_total_degree();
    for (const auto& [exp, coef] : terms_)
        if (total_degree(exp) == d) out.add_term(exp, coef);
    return out;
}

LatticePointSet SparsePolynomial::support() const {
    LatticePointSet out(n_vars_);
    for (const auto& [exp, coef] : terms_) out.insert(exp);
    return out;
}

std::string SparsePolynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exp, coef] : terms_) {
        const bool negative = coef < 0;
        const mpz_class magnitude = abs(coef);
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars;
        for (size_t k = 0; k < exp.size(); ++k) {
            if (exp[k] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(k + 1);
            if (exp[k] > 1) vars += "^" + std::to_string(exp[k]);
        }
        if (vars.empty()) {
            out += magnitude.get_str();
        } else if (magnitude == 1) {
            out += vars;
        } else {
            out += magnitude.get_str() + "*" + vars;
        }
    }
    return out;
}

SparsePolynomial divided_difference(const SparsePolynomial& f, int i) {
    if (i < 1 || i >= f.n_vars())
        throw precondition_error("divided difference: index " + std::to_string(i) +
                                 " out of range [1," + std::to_string(f.n_vars() - 1) + "]");
    SparsePolynomial out(f.n_vars());
    const size_t ia = static_cast<size_t>(i - 1);
    const size_t ib = static_cast<size_t>(i);
    for (const auto& [exp, coef] : f.terms()) {
        const int a = exp[ia];
        const int b = exp[ib];
        if (a == b) continue;
        // (x^a y^b - x^b y^a)/(x - y) = sign * sum of x^t y^(a+b-1-t)
        // with t running over [min(a,b), max(a,b)-1].
        const int lo = std::min(a, b);
        const int hi = std::max(a, b);
        const mpz_class c = (a > b) ? coef : -coef;
        Exponent e = exp;
        for (int t = lo; t <= hi - 1; ++t) {
            e[ia] = t;
            e[ib] = a + b - 1 - t;
            out.add_term(e, c);
        }
    }
    return out;
}

SparsePolynomial isobaric_divided_difference(const SparsePolynomial& f, int i) {
    if (i < 1 || i >= f.n_vars())
        throw precondition_error("isobaric divided difference: index " + std::to_string(i) +
                                 " out of range [1," + std::to_string(f.n_vars() - 1) + "]");
    // (1 - x_{i+1}) f
    SparsePolynomial g = f;
    for (const auto& [exp, coef] : f.terms()) {
        Exponent e = exp;
        ++e[static_cast<size_t>(i)];
        g.add_term(e, -coef);
    }
    return divided_difference(g, i);
}

SparsePolynomial staircase_monomial(int n) {
    Exponent exp(static_cast<size_t>(n), 0);
    for (int k = 0; k < n; ++k) exp[static_cast<size_t>(k)] = n - 1 - k;
    SparsePolynomial f(n);
    f.add_term(exp, 1);
    return f;
}

namespace {

/// Positions i (smallest first) with u(i) < u(i+1), swapped on the walk
/// from w up to w0; operators are applied back down in reverse.
std::vector<int> ascent_path_to_longest(const Permutation& w) {
    std::vector<int> images = w.images();
    const int n = static_cast<int>(images.size());
    std::vector<int> path;
    while (true) {
        int ascent = 0;
        for (int i = 1; i < n; ++i)
            if (images[static_cast<size_t>(i - 1)] < images[static_cast<size_t>(i)]) {
                ascent = i;
                break;
            }
        if (ascent == 0) break;
        std::swap(images[static_cast<size_t>(ascent - 1)], images[static_cast<size_t>(ascent)]);
        path.push_back(ascent);
    }
    return path;
}

}  // namespace

SparsePolynomial schubert_by_recursion(const Permutation& w) {
    const std::vector<int> path = ascent_path_to_longest(w);
    SparsePolynomial f = staircase_monomial(w.size());
    for (auto it = path.rbegin(); it != path.rend(); ++it) f = divided_difference(f, *it);
    return f;
}

SparsePolynomial grothendieck_by_recursion(const Permutation& w) {
    const std::vector<int> path = ascent_path_to_longest(w);
    SparsePolynomial f = staircase_monomial(w.size());
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        f = isobaric_divided_difference(f, *it);
    return f;
}

SparsePolynomial polynomial_from_pipe_dreams(const Permutation& w, bool reduced_only) {
    const int n = w.size();
    SparsePolynomial out(n);
    const int length = coxeter_length(w);
    Exponent weight(static_cast<size_t>(n), 0);
    for_each_pipe_dream(
        w,
        [&](const PipeDream& p) {
            int crosses = 0;
            for (int r = 1; r <= n; ++r) {
                const int k = std::popcount(p.row_mask(r));
                weight[static_cast<size_t>(r - 1)] = k;
                crosses += k;
            }
            const int sign =
                reduced_only ? 1 : (((crosses - length) % 2 == 0) ? 1 : -1);
            out.add_term(weight, sign);
        },
        reduced_only ? PipeDreamFilter::reduced_only : PipeDreamFilter::all);
    return out;
}

SparsePolynomial schubert_from_pipe_dreams(const Permutation& w) {
    return polynomial_from_pipe_dreams(w, true);
}

SparsePolynomial grothendieck_from_pipe_dreams(const Permutation& w) {
    return polynomial_from_pipe_dreams(w, false);
}

}  // namespace grothlab
