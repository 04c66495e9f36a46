#include "boxfree/field.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace boxfree {

namespace {

constexpr std::uint32_t kMaxDeg = kMaxExtensionDegree;

// p^r with an overflow guard against the hard cap.
std::uint64_t checked_order(std::uint64_t p, std::uint32_t r) {
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        if (order > kHardMaxFieldOrder / p) {
            throw budget_error("field order p^r exceeds the hard cap 2^31");
        }
        order *= p;
    }
    return order;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible_monic(std::uint64_t p, std::span<const std::uint32_t> coeffs) {
    if (coeffs.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
    const std::uint32_t deg = static_cast<std::uint32_t>(coeffs.size()) - 1;
    if (coeffs[deg] != 1) throw std::invalid_argument("modulus must be monic");
    if (deg == 1) return true;

    std::array<std::uint64_t, 2 * kMaxDeg + 2> rem{};
    std::array<std::uint64_t, kMaxDeg + 1> div{};
    for (std::uint32_t d = 1; d <= deg / 2; ++d) {
        // All monic divisors x^d + sum t_i x^i, t enumerated as a base-p integer.
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            std::uint64_t v = t;
            for (std::uint32_t i = 0; i < d; ++i) {
                div[i] = v % p;
                v /= p;
            }
            for (std::uint32_t i = 0; i <= deg; ++i) rem[i] = coeffs[i];
            for (std::uint32_t i = deg; i >= d; --i) {
                const std::uint64_t c = rem[i];
                if (c != 0) {
                    rem[i] = 0;
                    for (std::uint32_t j = 0; j < d; ++j) {
                        const std::uint64_t sub = (c * div[j]) % p;
                        rem[i - d + j] = (rem[i - d + j] + p - sub) % p;
                    }
                }
            }
            bool zero = true;
            for (std::uint32_t i = 0; i < d; ++i) {
                if (rem[i] != 0) { zero = false; break; }
            }
            if (zero) return false;
        }
    }
    return true;
}

FieldCtx::FieldCtx(std::uint64_t p, std::uint32_t r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), order_(checked_order(p, r)), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument("p must be prime");
    if (r_ < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (r_ > kMaxDeg) throw std::invalid_argument("extension degree too large");
    if (modulus_.size() != r_ + 1) throw std::invalid_argument("modulus must have degree r");
    if (modulus_[r_] != 1) throw std::invalid_argument("modulus must be monic");
    for (std::uint32_t c : modulus_) {
        if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
    }
    if (!is_irreducible_monic(p_, modulus_)) {
        throw std::invalid_argument("modulus is reducible");
    }

    // reduction_[k] = x^(r+k) mod modulus. Row 0 is -(low part of the
    // modulus); each later row is the previous one shifted and reduced.
    if (r_ >= 2) {
        reduction_.resize(r_ - 1);
        std::vector<std::uint32_t> cur(r_);
        for (std::uint32_t i = 0; i < r_; ++i) {
            cur[i] = static_cast<std::uint32_t>((p_ - modulus_[i]) % p_);
        }
        reduction_[0] = cur;
        for (std::uint32_t k = 1; k + 1 < r_; ++k) {
            const std::uint64_t top = cur[r_ - 1];
            std::vector<std::uint32_t> next(r_);
            for (std::uint32_t i = r_ - 1; i >= 1; --i) next[i] = cur[i - 1];
            next[0] = 0;
            if (top != 0) {
                for (std::uint32_t i = 0; i < r_; ++i) {
                    next[i] = static_cast<std::uint32_t>(
                        (next[i] + top * reduction_[0][i]) % p_);
                }
            }
            reduction_[k] = next;
            cur = std::move(next);
        }
    }

    residue_enc_ = r_ >= 2 ? static_cast<std::uint32_t>(p_)
                           : static_cast<std::uint32_t>((p_ - modulus_[0]) % p_);

    basis_trace_.resize(r_);
    std::uint64_t pw = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        const std::uint32_t t = trace_enc(static_cast<std::uint32_t>(pw));
        if (t / p_ != 0) throw std::logic_error("trace left the prime subfield");
        basis_trace_[i] = t;
        pw *= p_;
    }
}

std::vector<std::uint32_t> canonical_modulus(std::uint64_t p, std::uint32_t r) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (r > kMaxDeg) throw std::invalid_argument("extension degree too large");
    const std::uint64_t order = checked_order(p, r);

    // Scan monic degree-r candidates in lexicographic order of the
    // coefficient tuple (c_0, ..., c_{r-1}); c_0 varies slowest.
    std::vector<std::uint64_t> weight(r);
    std::uint64_t w = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        weight[r - 1 - i] = w;
        w *= p;
    }
    std::vector<std::uint32_t> coeffs(r + 1);
    coeffs[r] = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
        for (std::uint32_t i = 0; i < r; ++i) {
            coeffs[i] = static_cast<std::uint32_t>((k / weight[i]) % p);
        }
        if (is_irreducible_monic(p, coeffs)) return coeffs;
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

FieldHandle make_field(std::uint64_t p, std::uint32_t r, std::uint64_t max_order) {
    const std::uint64_t order = checked_order(p, r);
    if (order > max_order) {
        throw budget_error("field order " + std::to_string(order) +
                           " exceeds the size budget " + std::to_string(max_order));
    }
    return FieldHandle(new FieldCtx(p, r, canonical_modulus(p, r)));
}

FieldHandle make_field_with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus,
                                    std::uint64_t max_order) {
    if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
    const std::uint32_t r = static_cast<std::uint32_t>(modulus.size()) - 1;
    if (r > kMaxDeg) throw std::invalid_argument("extension degree too large");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    const std::uint64_t order = checked_order(p, r);
    if (order > max_order) {
        throw budget_error("field order " + std::to_string(order) +
                           " exceeds the size budget " + std::to_string(max_order));
    }
    return FieldHandle(new FieldCtx(p, r, std::move(modulus)));
}

const FieldCtx& FieldElement::ctx() const {
    if (ctx_ == nullptr) throw std::invalid_argument("element has no field context");
    return *ctx_;
}

std::vector<std::uint32_t> FieldElement::coeffs() const { return ctx().coeffs_of(enc_); }

bool FieldElement::in_prime_subfield() const { return enc_ < ctx().characteristic(); }

namespace {

const FieldCtx& require_same_ctx(const FieldElement& a, const FieldElement& b) {
    const FieldCtx& ctx = a.ctx();
    if (&ctx != &b.ctx()) throw std::invalid_argument("operands from different field contexts");
    return ctx;
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    const FieldCtx& c = require_same_ctx(*this, rhs);
    return {c, c.add_enc(enc_, rhs.enc_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    const FieldCtx& c = require_same_ctx(*this, rhs);
    return {c, c.sub_enc(enc_, rhs.enc_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    const FieldCtx& c = require_same_ctx(*this, rhs);
    return {c, c.mul_enc(enc_, rhs.enc_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    const FieldCtx& c = require_same_ctx(*this, rhs);
    return {c, c.mul_enc(enc_, c.inv_enc(rhs.encoding()))};
}

FieldElement FieldElement::operator-() const {
    const FieldCtx& c = ctx();
    return {c, c.neg_enc(enc_)};
}

FieldElement inv(const FieldElement& a) { return {a.ctx(), a.ctx().inv_enc(a.encoding())}; }

FieldElement pow(const FieldElement& a, std::uint64_t k) {
    return {a.ctx(), a.ctx().pow_enc(a.encoding(), k)};
}

FieldElement frobenius(const FieldElement& a, std::uint32_t j) {
    return {a.ctx(), a.ctx().frobenius_enc(a.encoding(), j)};
}

FieldElement trace(const FieldElement& a) {
    return {a.ctx(), a.ctx().trace_enc(a.encoding())};
}

FieldElement FieldCtx::element(std::uint64_t enc) const {
    if (enc >= order_) throw std::invalid_argument("encoding out of range");
    return {*this, static_cast<std::uint32_t>(enc)};
}

FieldElement FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != r_) throw std::invalid_argument("coefficient vector has wrong length");
    std::uint64_t enc = 0;
    std::uint64_t pw = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        if (coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range");
        enc += coeffs[i] * pw;
        pw *= p_;
    }
    return {*this, static_cast<std::uint32_t>(enc)};
}

std::vector<std::uint32_t> FieldCtx::coeffs_of(std::uint32_t enc) const {
    std::vector<std::uint32_t> out(r_);
    std::uint64_t v = enc;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out[i] = static_cast<std::uint32_t>(v % p_);
        v /= p_;
    }
    return out;
}

void FieldCtx::decode(std::uint32_t enc, std::uint32_t* digits) const {
    std::uint64_t v = enc;
    for (std::uint32_t i = 0; i < r_; ++i) {
        digits[i] = static_cast<std::uint32_t>(v % p_);
        v /= p_;
    }
}

std::uint32_t FieldCtx::encode(const std::uint64_t* digits) const {
    std::uint64_t enc = 0;
    std::uint64_t pw = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        enc += digits[i] * pw;
        pw *= p_;
    }
    return static_cast<std::uint32_t>(enc);
}

std::uint32_t FieldCtx::add_enc(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t da[kMaxDeg], db[kMaxDeg];
    std::uint64_t out[kMaxDeg];
    decode(a, da);
    decode(b, db);
    for (std::uint32_t i = 0; i < r_; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(da[i]) + db[i];
        out[i] = s >= p_ ? s - p_ : s;
    }
    return encode(out);
}

std::uint32_t FieldCtx::sub_enc(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t da[kMaxDeg], db[kMaxDeg];
    std::uint64_t out[kMaxDeg];
    decode(a, da);
    decode(b, db);
    for (std::uint32_t i = 0; i < r_; ++i) {
        out[i] = da[i] >= db[i] ? da[i] - db[i] : da[i] + p_ - db[i];
    }
    return encode(out);
}

std::uint32_t FieldCtx::neg_enc(std::uint32_t a) const { return sub_enc(0, a); }

std::uint32_t FieldCtx::mul_enc(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t da[kMaxDeg], db[kMaxDeg];
    std::uint64_t prod[2 * kMaxDeg]{};
    decode(a, da);
    decode(b, db);
    for (std::uint32_t i = 0; i < r_; ++i) {
        if (da[i] == 0) continue;
        const std::uint64_t ai = da[i];
        for (std::uint32_t j = 0; j < r_; ++j) {
            prod[i + j] = (prod[i + j] + ai * db[j]) % p_;
        }
    }
    for (std::uint32_t k = 2 * r_ - 2; k >= r_; --k) {
        const std::uint64_t c = prod[k];
        if (c != 0) {
            prod[k] = 0;
            const auto& row = reduction_[k - r_];
            for (std::uint32_t i = 0; i < r_; ++i) {
                prod[i] = (prod[i] + c * row[i]) % p_;
            }
        }
        if (k == r_) break;  // k is unsigned
    }
    return encode(prod);
}

std::uint32_t FieldCtx::inv_enc(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow_enc(a, order_ - 2);
}

std::uint32_t FieldCtx::pow_enc(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t result = one().encoding();
    std::uint32_t base = a;
    while (k > 0) {
        if (k & 1) result = mul_enc(result, base);
        base = mul_enc(base, base);
        k >>= 1;
    }
    return result;
}

std::uint32_t FieldCtx::frobenius_enc(std::uint32_t a, std::uint32_t j) const {
    if (j >= r_) throw std::invalid_argument("frobenius index out of range");
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < j; ++i) e *= p_;
    return pow_enc(a, e);
}

std::uint32_t FieldCtx::trace_enc(std::uint32_t a) const {
    std::uint32_t acc = a;
    std::uint32_t cur = a;
    for (std::uint32_t j = 1; j < r_; ++j) {
        cur = pow_enc(cur, p_);
        acc = add_enc(acc, cur);
    }
    return acc;
}

std::uint32_t FieldCtx::trace_value(std::uint32_t enc) const {
    std::uint32_t digits[kMaxDeg];
    decode(enc, digits);
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < r_; ++i) {
        acc = (acc + static_cast<std::uint64_t>(digits[i]) * basis_trace_[i]) % p_;
    }
    return static_cast<std::uint32_t>(acc);
}

std::vector<FieldElement> FieldCtx::trace_fiber(std::uint64_t c) const {
    if (c >= p_) throw std::invalid_argument("fiber value must lie in [0, p)");
    std::vector<FieldElement> fiber;
    for (std::uint64_t enc = 0; enc < order_; ++enc) {
        if (trace_value(static_cast<std::uint32_t>(enc)) == c) {
            fiber.emplace_back(*this, static_cast<std::uint32_t>(enc));
        }
    }
    return fiber;
}

std::vector<std::uint64_t> FieldCtx::trace_fiber_sizes() const {
    std::vector<std::uint64_t> counts(p_, 0);
    for (std::uint64_t enc = 0; enc < order_; ++enc) {
        ++counts[trace_value(static_cast<std::uint32_t>(enc))];
    }
    return counts;
}

std::string field_descriptor(const FieldCtx& ctx) {
    std::string out = "GF(" + std::to_string(ctx.characteristic()) + "^" +
                      std::to_string(ctx.degree()) + ")/";
    const auto& mod = ctx.modulus();
    for (std::size_t i = 0; i < mod.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(mod[i]);
    }
    return out;
}

}  // namespace boxfree
