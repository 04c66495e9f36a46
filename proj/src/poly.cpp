#include "boxfree/poly.hpp"

#include <limits>
#include <stdexcept>

namespace boxfree {

Monomial::Monomial(std::vector<std::uint64_t> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw std::invalid_argument("monomial arity must be >= 1");
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t sum = 0;
    for (std::uint64_t e : exps_) {
        if (e > std::numeric_limits<std::uint64_t>::max() - sum) {
            throw std::overflow_error("monomial degree overflow");
        }
        sum += e;
    }
    return sum;
}

bool divides(const Monomial& m1, const Monomial& m2) {
    if (m1.arity() != m2.arity()) throw std::invalid_argument("monomial arity mismatch");
    for (std::size_t i = 0; i < m1.arity(); ++i) {
        if (m1.exponent(i) > m2.exponent(i)) return false;
    }
    return true;
}

Polynomial::Polynomial(const FieldCtx& ctx, std::size_t arity) : ctx_(&ctx), arity_(arity) {
    if (arity < 1) throw std::invalid_argument("polynomial arity must be >= 1");
}

void Polynomial::add_term(const Monomial& m, const FieldElement& coeff) {
    if (m.arity() != arity_) throw std::invalid_argument("monomial arity mismatch");
    if (&coeff.ctx() != ctx_) throw std::invalid_argument("coefficient from a different field");
    if (coeff.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff.encoding());
        return;
    }
    const std::uint32_t sum = ctx_->add_enc(it->second, coeff.encoding());
    if (sum == 0) {
        terms_.erase(it);
    } else {
        it->second = sum;
    }
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ctx_->zero() : FieldElement(*ctx_, it->second);
}

std::vector<Monomial> Polynomial::monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back(m);
    return out;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
    if (point.size() != arity_) throw std::invalid_argument("point arity mismatch");
    std::vector<std::uint32_t> encs(arity_);
    for (std::size_t i = 0; i < arity_; ++i) {
        if (&point[i].ctx() != ctx_) {
            throw std::invalid_argument("point coordinate from a different field");
        }
        encs[i] = point[i].encoding();
    }
    return {*ctx_, evaluate_enc(encs)};
}

std::uint32_t Polynomial::evaluate_enc(std::span<const std::uint32_t> point) const {
    if (point.size() != arity_) throw std::invalid_argument("point arity mismatch");
    std::uint32_t acc = 0;
    for (const auto& [m, coeff] : terms_) {
        std::uint32_t term = coeff;
        for (std::size_t i = 0; i < arity_ && term != 0; ++i) {
            term = ctx_->mul_enc(term, ctx_->pow_enc(point[i], m.exponent(i)));
        }
        acc = ctx_->add_enc(acc, term);
    }
    return acc;
}

std::uint64_t degree(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("degree of the zero polynomial");
    std::uint64_t best = 0;
    for (const auto& [m, c] : f.terms()) best = std::max(best, m.total_degree());
    return best;
}

std::vector<Monomial> maximal_monomials(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("maximal monomials of the zero polynomial");
    const auto ms = f.monomials();
    std::vector<Monomial> out;
    for (const auto& m : ms) {
        bool maximal = true;
        for (const auto& other : ms) {
            if (m != other && divides(m, other)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(m);
    }
    return out;  // ms is already lex-sorted
}

}  // namespace boxfree
