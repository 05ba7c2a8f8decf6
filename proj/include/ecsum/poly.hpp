#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ecsum/field.hpp"

namespace ecsum {

// Exponent vector over a fixed, ordered variable set. Capacity is bounded so
// monomials stay flat and hashable; arity up to kMaxVars, exponents < 256.
class Monomial {
  public:
    static constexpr unsigned kMaxVars = 16;

    explicit Monomial(unsigned arity);
    static Monomial unit(unsigned arity, unsigned var, unsigned exp = 1);

    unsigned arity() const { return arity_; }
    unsigned exp(unsigned var) const;
    unsigned total_degree() const;
    bool is_constant() const { return total_degree() == 0; }

    Monomial with_exp(unsigned var, unsigned exp) const;

    // Product = exponentwise sum. ArityMismatchError on differing arity.
    Monomial operator*(const Monomial& other) const;

    // Relabels variables: exponent of var i moves to perm[i].
    Monomial permuted(std::span<const unsigned> perm) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.arity_ == b.arity_ && a.exps_ == b.exps_;
    }

    // Graded lexicographic: total degree first, then the exponent vector.
    // Variable 0 is the heaviest tie-breaker.
    friend bool grlex_less(const Monomial& a, const Monomial& b);

    size_t hash() const;

  private:
    unsigned arity_;
    std::array<uint8_t, kMaxVars> exps_{};
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Sparse multivariate polynomial with exact rational coefficients. Canonical
// form: terms sorted leading-first under grlex, no zero coefficients stored;
// equality is termwise.
class SparsePolynomial {
  public:
    struct Term {
        Monomial mono;
        mpq_class coeff;
    };

    explicit SparsePolynomial(unsigned arity);
    static SparsePolynomial constant(unsigned arity, const mpq_class& value);
    static SparsePolynomial variable(unsigned arity, unsigned var);

    unsigned arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Builds canonical form from an arbitrary term list (merges duplicates,
    // drops zeros).
    static SparsePolynomial from_terms(unsigned arity, std::vector<Term> terms);

    friend SparsePolynomial operator+(const SparsePolynomial& f, const SparsePolynomial& g);
    friend SparsePolynomial operator-(const SparsePolynomial& f, const SparsePolynomial& g);
    friend SparsePolynomial operator*(const SparsePolynomial& f, const SparsePolynomial& g);
    SparsePolynomial operator-() const;
    SparsePolynomial pow(unsigned e) const;

    friend SparsePolynomial operator*(const mpq_class& c, const SparsePolynomial& f);

    // Relabels variables through a permutation of indices.
    SparsePolynomial permuted(std::span<const unsigned> perm) const;

    unsigned total_degree() const;
    unsigned degree_in(unsigned var) const;

    // Exact evaluation; the assignment supplies one field value per variable.
    FieldValue evaluate(std::span<const FieldValue> assignment) const;

    std::string to_string(std::span<const std::string> names) const;

    friend bool operator==(const SparsePolynomial& f, const SparsePolynomial& g);
    friend bool operator!=(const SparsePolynomial& f, const SparsePolynomial& g) {
        return !(f == g);
    }

  private:
    void normalize();

    unsigned arity_;
    std::vector<Term> terms_;  // grlex-descending, nonzero coefficients
};

}  // namespace ecsum
