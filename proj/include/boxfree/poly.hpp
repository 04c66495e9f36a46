#ifndef BOXFREE_POLY_HPP
#define BOXFREE_POLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "boxfree/field.hpp"

namespace boxfree {

/// Exponent vector of a monomial x_1^{e_1} ... x_k^{e_k}.
class Monomial {
  public:
    explicit Monomial(std::vector<std::uint64_t> exponents);

    std::size_t arity() const { return exps_.size(); }
    std::uint64_t exponent(std::size_t i) const { return exps_.at(i); }
    std::span<const std::uint64_t> exponents() const { return exps_; }

    /// Sum of exponents, with an overflow check.
    std::uint64_t total_degree() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    /// Lexicographic order on exponent vectors; defines all output orders.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

  private:
    std::vector<std::uint64_t> exps_;
};

/// m1 divides m2: every exponent of m1 is bounded by the matching one of m2.
bool divides(const Monomial& m1, const Monomial& m2);

/// Sparse polynomial over a field context: a normalized map from monomials
/// to nonzero coefficients. The arity is fixed at construction and is
/// independent of the field's extension degree.
class Polynomial {
  public:
    Polynomial(const FieldCtx& ctx, std::size_t arity);

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t arity() const { return arity_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * m, accumulating with any existing term and dropping the
    /// term if the sum cancels.
    void add_term(const Monomial& m, const FieldElement& coeff);

    /// Coefficient of m (zero element if m is not a term).
    FieldElement coefficient(const Monomial& m) const;

    /// Terms in lexicographic monomial order, coefficients encoded.
    const std::map<Monomial, std::uint32_t>& terms() const { return terms_; }
    std::vector<Monomial> monomials() const;

    FieldElement evaluate(std::span<const FieldElement> point) const;
    /// Evaluation on canonical encodings; the workhorse for grid scans.
    std::uint32_t evaluate_enc(std::span<const std::uint32_t> point) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ctx_ == b.ctx_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

  private:
    const FieldCtx* ctx_;
    std::size_t arity_;
    std::map<Monomial, std::uint32_t> terms_;
};

/// Maximum total degree over the terms of a nonzero polynomial.
std::uint64_t degree(const Polynomial& f);

/// The monomials of f that divide no other monomial of f, in lexicographic
/// order. A single term is always maximal.
std::vector<Monomial> maximal_monomials(const Polynomial& f);

}  // namespace boxfree

#endif
