#ifndef BOXFREE_FIELD_HPP
#define BOXFREE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "boxfree/common.hpp"

namespace boxfree {

class FieldCtx;
class FieldElement;

/// Owning handle for a field context. Elements keep a raw pointer into the
/// context, so the handle must outlive every element created from it.
using FieldHandle = std::shared_ptr<const FieldCtx>;

/// Deterministic primality test (trial division; inputs are desk scale).
bool is_prime(std::uint64_t n);

/// Irreducibility over Z/p of a monic polynomial, by exhaustive trial
/// division against every monic polynomial of degree <= deg/2.
/// `coeffs` is low-degree-first and must have a leading coefficient of 1.
bool is_irreducible_monic(std::uint64_t p, std::span<const std::uint32_t> coeffs);

/// The lexicographically smallest monic irreducible polynomial of degree r
/// over Z/p, coefficients compared low-degree-first as a base-p tuple.
std::vector<std::uint32_t> canonical_modulus(std::uint64_t p, std::uint32_t r);

/// Builds GF(p^r) with the canonical modulus. Deterministic across runs.
FieldHandle make_field(std::uint64_t p, std::uint32_t r,
                       std::uint64_t max_order = kDefaultMaxFieldOrder);

/// Builds GF(p^r) over a caller-supplied monic irreducible modulus
/// (low-degree-first, length r+1). Used to check modulus invariance.
FieldHandle make_field_with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus,
                                    std::uint64_t max_order = kDefaultMaxFieldOrder);

/// Canonical descriptor "GF(p^r)/c0,c1,...,cr" with modulus coefficients
/// low-degree-first.
std::string field_descriptor(const FieldCtx& ctx);

/// An element of GF(p^r), stored as its canonical integer encoding
/// enc(a) = sum c_i * p^i for the coefficient vector (c_0, ..., c_{r-1}).
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(const FieldCtx& ctx, std::uint32_t enc) : ctx_(&ctx), enc_(enc) {}

    std::uint32_t encoding() const { return enc_; }
    const FieldCtx& ctx() const;
    bool is_zero() const { return enc_ == 0; }

    /// Coefficient vector (c_0, ..., c_{r-1}) over Z/p.
    std::vector<std::uint32_t> coeffs() const;

    /// True when all coefficients above c_0 vanish.
    bool in_prime_subfield() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.ctx_ == b.ctx_ && a.enc_ == b.enc_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;

  private:
    const FieldCtx* ctx_ = nullptr;
    std::uint32_t enc_ = 0;
};

FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t k);
/// a^(p^j), the j-th Frobenius iterate; requires 0 <= j < r.
FieldElement frobenius(const FieldElement& a, std::uint32_t j);
/// Trace of the extension over its prime subfield: a + a^p + ... + a^(p^(r-1)).
FieldElement trace(const FieldElement& a);

/// A concrete realization of GF(p^r): prime p, degree r, monic irreducible
/// modulus. Immutable after construction and freely shareable across threads.
class FieldCtx {
  public:
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    std::uint64_t characteristic() const { return p_; }
    std::uint32_t degree() const { return r_; }
    std::uint64_t order() const { return order_; }
    /// Modulus coefficients, low-degree-first, length r+1, leading 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {*this, 0}; }
    FieldElement one() const { return {*this, order_ > 1 ? 1u : 0u}; }
    /// Residue class of the modulus variable (the generator of the
    /// power basis; equals -c_0 when r = 1).
    FieldElement residue() const { return {*this, residue_enc_}; }

    FieldElement element(std::uint64_t enc) const;
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs_of(std::uint32_t enc) const;

    // Arithmetic on canonical encodings. The FieldElement operators wrap
    // these; bulk scans use them directly to avoid per-element overhead.
    std::uint32_t add_enc(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_enc(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_enc(std::uint32_t a) const;
    std::uint32_t mul_enc(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_enc(std::uint32_t a) const;
    std::uint32_t pow_enc(std::uint32_t a, std::uint64_t k) const;
    std::uint32_t frobenius_enc(std::uint32_t a, std::uint32_t j) const;
    std::uint32_t trace_enc(std::uint32_t a) const;

    /// Trace as a value in [0, p), computed from precomputed basis traces;
    /// agrees with trace_enc on every element.
    std::uint32_t trace_value(std::uint32_t enc) const;

    /// All elements with trace equal to c (c in [0, p)), ascending encoding.
    std::vector<FieldElement> trace_fiber(std::uint64_t c) const;

    /// Fiber cardinalities for every c in [0, p), by exhaustive enumeration.
    std::vector<std::uint64_t> trace_fiber_sizes() const;

    /// Nonzero elements in ascending canonical-encoding order.
    class UnitIterator {
      public:
        UnitIterator(const FieldCtx& ctx, std::uint32_t enc) : ctx_(&ctx), enc_(enc) {}
        FieldElement operator*() const { return {*ctx_, enc_}; }
        UnitIterator& operator++() { ++enc_; return *this; }
        bool operator==(const UnitIterator& o) const { return enc_ == o.enc_; }
      private:
        const FieldCtx* ctx_;
        std::uint32_t enc_;
    };
    struct UnitRange {
        const FieldCtx* ctx;
        UnitIterator begin() const { return {*ctx, 1}; }
        UnitIterator end() const { return {*ctx, static_cast<std::uint32_t>(ctx->order())}; }
        std::uint64_t size() const { return ctx->order() - 1; }
    };
    UnitRange units() const { return {this}; }

  private:
    FieldCtx(std::uint64_t p, std::uint32_t r, std::vector<std::uint32_t> modulus);

    void decode(std::uint32_t enc, std::uint32_t* digits) const;
    std::uint32_t encode(const std::uint64_t* digits) const;

    std::uint64_t p_;
    std::uint32_t r_;
    std::uint64_t order_;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t residue_enc_;
    // reduction_[k] = coefficient vector of x^(r+k) mod modulus, k = 0..r-2.
    std::vector<std::vector<std::uint32_t>> reduction_;
    // basis_trace_[i] = trace(x^i) as a value in [0, p).
    std::vector<std::uint32_t> basis_trace_;

    friend FieldHandle make_field(std::uint64_t, std::uint32_t, std::uint64_t);
    friend FieldHandle make_field_with_modulus(std::uint64_t, std::vector<std::uint32_t>,
                                               std::uint64_t);
};

}  // namespace boxfree

#endif
