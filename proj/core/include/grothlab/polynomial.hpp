#ifndef GROTHLAB_POLYNOMIAL_HPP
#define GROTHLAB_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <string>

#include "grothlab/lattice.hpp"
#include "grothlab/permutation.hpp"
#include "grothlab/types.hpp"

namespace grothlab {

/// Multivariate polynomial over Z with exact coefficients, stored as a
/// map from exponent vectors to nonzero coefficients in lexicographic
/// term order.
class SparsePolynomial {
public:
    using TermMap = std::map<Exponent, mpz_class>;

    explicit SparsePolynomial(int n_vars);

    static SparsePolynomial zero(int n_vars) { return SparsePolynomial(n_vars); }
    static SparsePolynomial constant(int n_vars, const mpz_class& c);
    static SparsePolynomial monomial(Exponent exp, const mpz_class& c);

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// 0 when the monomial is absent.
    mpz_class coefficient(const Exponent& exp) const;

    /// Accumulates; removes the term when the coefficient reaches zero.
    void add_term(const Exponent& exp, const mpz_class& coef);

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
        a += b;
        return a;
    }

    int max_total_degree() const;  // -1 for the zero polynomial
    int min_total_degree() const;

    /// Terms of maximal total degree.
    SparsePolynomial top_component() const;
    /// Terms of minimal total degree.
    SparsePolynomial bottom_component() const;

    LatticePointSet support() const;

    /// Human-readable form like "x1*x2^2 + x1^2*x2 - x1^2*x2^2".
    std::string to_text() const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    int n_vars_;
    TermMap terms_;
};

/// (f - s_i f)/(x_i - x_{i+1}), computed per monomial from the
/// telescoping expansion of (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a); no
/// polynomial division is involved.
SparsePolynomial divided_difference(const SparsePolynomial& f, int i);

/// divided_difference applied to (1 - x_{i+1}) f.
SparsePolynomial isobaric_divided_difference(const SparsePolynomial& f, int i);

/// x1^{n-1} x2^{n-2} ... x_{n-1}, the polynomial of the longest element.
SparsePolynomial staircase_monomial(int n);

/// Schubert polynomial via divided differences along the
/// lexicographically smallest ascent path from w up to w0.
SparsePolynomial schubert_by_recursion(const Permutation& w);

/// Grothendieck polynomial via isobaric divided differences.
SparsePolynomial grothendieck_by_recursion(const Permutation& w);

/// Pipe dream generating sums: with reduced_only the Schubert polynomial
/// sum of x^wt(P) over reduced P; otherwise the Grothendieck polynomial
/// sum of (-1)^(|P| - l(w)) x^wt(P) over all of PD(w).
SparsePolynomial polynomial_from_pipe_dreams(const Permutation& w, bool reduced_only);

SparsePolynomial schubert_from_pipe_dreams(const Permutation& w);
SparsePolynomial grothendieck_from_pipe_dreams(const Permutation& w);

}  // namespace grothlab

#endif
