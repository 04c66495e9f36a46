#include <cstdint>
#include <random>
#include <vector>

#include "boxfree/poly.hpp"
#include "doctest.h"

using namespace boxfree;

namespace {

// Reference evaluator: repeated multiplication, no pow. Kept deliberately
// separate from Polynomial::evaluate so the two can cross-check each other.
FieldElement eval_by_repeated_mult(const Polynomial& f, const std::vector<FieldElement>& pt) {
    const FieldCtx& ctx = f.ctx();
    FieldElement acc = ctx.zero();
    for (const auto& [m, coeff] : f.terms()) {
        FieldElement term{ctx, coeff};
        for (std::size_t i = 0; i < f.arity(); ++i) {
            for (std::uint64_t k = 0; k < m.exponent(i); ++k) term = term * pt[i];
        }
        acc = acc + term;
    }
    return acc;
}

// Independent maximality check: mark every monomial that divides some other.
std::vector<Monomial> maximal_by_marking(const Polynomial& f) {
    auto ms = f.monomials();
    std::vector<bool> dominated(ms.size(), false);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = 0; j < ms.size(); ++j) {
            if (i == j) continue;
            bool leq = true;
            for (std::size_t v = 0; v < ms[i].arity(); ++v) {
                if (ms[i].exponent(v) > ms[j].exponent(v)) { leq = false; break; }
            }
            if (leq) { dominated[i] = true; break; }
        }
    }
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (!dominated[i]) out.push_back(ms[i]);
    }
    return out;
}

Polynomial random_poly(const FieldCtx& ctx, std::size_t arity, std::uint64_t max_exp,
                       std::mt19937_64& rng) {
    Polynomial f(ctx, arity);
    const std::size_t nterms = 1 + rng() % 5;
    for (std::size_t t = 0; t < nterms; ++t) {
        std::vector<std::uint64_t> exps(arity);
        for (auto& e : exps) e = rng() % (max_exp + 1);
        const std::uint32_t coeff = 1 + static_cast<std::uint32_t>(rng() % (ctx.order() - 1));
        f.add_term(Monomial(exps), ctx.element(coeff));
    }
    return f;
}

}  // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("evaluate matches hand-computed values") {
    SUBCASE("x1*x2 over GF(3) at (2,2)") {
        auto f3 = make_field(3, 1);
        Polynomial f(*f3, 2);
        f.add_term(Monomial({1, 1}), f3->one());
        auto v = f.evaluate(std::vector<FieldElement>{f3->element(2), f3->element(2)});
        CHECK(v == f3->element(1));  // 4 mod 3
    }
    SUBCASE("zero polynomial vanishes everywhere") {
        auto f5 = make_field(5, 1);
        Polynomial zero(*f5, 2);
        for (std::uint32_t a = 0; a < 5; ++a) {
            for (std::uint32_t b = 0; b < 5; ++b) {
                CHECK(zero.evaluate_enc(std::vector<std::uint32_t>{a, b}) == 0);
            }
        }
    }
    SUBCASE("x1*x2 + x1^2 + x2^2 over GF(4) at (w,w)") {
        auto f4 = make_field(2, 2);
        Polynomial f(*f4, 2);
        f.add_term(Monomial({1, 1}), f4->one());
        f.add_term(Monomial({2, 0}), f4->one());
        f.add_term(Monomial({0, 2}), f4->one());
        const FieldElement w = f4->residue();
        CHECK(f.evaluate(std::vector<FieldElement>{w, w}) == w * w);  // 3 w^2 = w^2
    }
}

TEST_CASE("evaluate agrees with the repeated-multiplication reference") {
    std::mt19937_64 rng(2024);
    for (auto [p, r] : {std::pair<std::uint64_t, std::uint32_t>{2, 1},
                        {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        auto f = make_field(p, r);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t arity = 1 + rng() % 3;
            auto poly = random_poly(*f, arity, 6, rng);
            std::vector<FieldElement> pt;
            for (std::size_t i = 0; i < arity; ++i) {
                pt.push_back(f->element(rng() % f->order()));
            }
            CHECK(poly.evaluate(pt) == eval_by_repeated_mult(poly, pt));
        }
    }
}

TEST_CASE("monomial divisibility") {
    CHECK_FALSE(divides(Monomial({1, 1}), Monomial({2, 0})));
    CHECK(divides(Monomial({1, 0}), Monomial({2, 0})));
    CHECK(divides(Monomial({2, 3}), Monomial({2, 3})));
    CHECK_THROWS_AS(divides(Monomial({1}), Monomial({1, 2})), std::invalid_argument);
}

TEST_CASE("maximal monomials follow the does-not-divide-another rule") {
    auto f3 = make_field(3, 1);

    SUBCASE("x + x^2 keeps only x^2") {
        Polynomial f(*f3, 1);
        f.add_term(Monomial({1}), f3->one());
        f.add_term(Monomial({2}), f3->one());
        auto ms = maximal_monomials(f);
        REQUIRE(ms.size() == 1);
        CHECK(ms[0] == Monomial({2}));
    }
    SUBCASE("x1x2 + x1^2 + x2^2 is pairwise incomparable") {
        Polynomial f(*f3, 2);
        f.add_term(Monomial({1, 1}), f3->one());
        f.add_term(Monomial({2, 0}), f3->one());
        f.add_term(Monomial({0, 2}), f3->one());
        CHECK(maximal_monomials(f).size() == 3);
    }
    SUBCASE("a lone constant term is maximal") {
        Polynomial f(*f3, 2);
        f.add_term(Monomial({0, 0}), f3->element(2));
        auto ms = maximal_monomials(f);
        REQUIRE(ms.size() == 1);
        CHECK(ms[0] == Monomial({0, 0}));
    }
    SUBCASE("zero polynomial is rejected") {
        Polynomial f(*f3, 2);
        CHECK_THROWS_AS(maximal_monomials(f), std::domain_error);
        CHECK_THROWS_AS(degree(f), std::domain_error);
    }
}

TEST_CASE("maximal monomials agree with an independently written oracle") {
    std::mt19937_64 rng(77);
    auto f5 = make_field(5, 1);
    for (int trial = 0; trial < 300; ++trial) {
        auto f = random_poly(*f5, 1 + rng() % 3, 4, rng);
        if (f.is_zero()) continue;
        auto got = maximal_monomials(f);
        auto expected = maximal_by_marking(f);
        CHECK(got == expected);
        // Every maximal monomial is a term, and a max-degree undominated
        // monomial always shows up.
        for (const auto& m : got) CHECK(!f.coefficient(m).is_zero());
        CHECK(!got.empty());
    }
}

TEST_CASE("degree") {
    auto f3 = make_field(3, 1);
    Polynomial f(*f3, 2);
    f.add_term(Monomial({1, 1}), f3->one());
    f.add_term(Monomial({2, 0}), f3->one());
    f.add_term(Monomial({0, 2}), f3->one());
    CHECK(degree(f) == 2);

    Polynomial c(*f3, 2);
    c.add_term(Monomial({0, 0}), f3->element(2));
    CHECK(degree(c) == 0);

    // The r = 2, p = 3 construction shape: x1x2 + x1^6 + x2^6.
    auto f9 = make_field(3, 2);
    Polynomial g(*f9, 2);
    g.add_term(Monomial({1, 1}), f9->one());
    g.add_term(Monomial({6, 0}), f9->one());
    g.add_term(Monomial({0, 6}), f9->one());
    CHECK(degree(g) == 6);
}

TEST_CASE("normalization drops cancelled terms") {
    auto f3 = make_field(3, 1);
    Polynomial f(*f3, 1);
    f.add_term(Monomial({4}), f3->element(1));
    f.add_term(Monomial({4}), f3->element(2));  // 1 + 2 = 0 mod 3
    CHECK(f.is_zero());
    f.add_term(Monomial({4}), f3->element(2));
    CHECK(f.term_count() == 1);
    CHECK(f.coefficient(Monomial({4})) == f3->element(2));
}

TEST_SUITE_END();
