#include <cmath>
#include <cstdint>
#include <queue>
#include <vector>

#include "boxfree/construction.hpp"
#include "boxfree/nullstellensatz.hpp"
#include "doctest.h"

using namespace boxfree;

namespace {

Polynomial product_minus_one(const FieldCtx& ctx) {
    Polynomial f(ctx, 2);
    f.add_term(Monomial({1, 1}), ctx.one());
    f.add_term(Monomial({0, 0}), -ctx.one());
    return f;
}

}  // namespace

TEST_SUITE_BEGIN("nullstellensatz");

TEST_CASE("zero sets by full grid scan") {
    auto f3 = make_field(3, 1);

    SUBCASE("x1*x2 - 1 over {1,2}^2") {
        const Polynomial f = product_minus_one(*f3);
        const std::vector<FieldElement> b{f3->element(1), f3->element(2)};
        const Grid grid(*f3, {b, b});
        const auto zeros = zero_set(f, grid);
        CHECK(zeros == std::vector<PointTuple>{{1, 1}, {2, 2}});
    }
    SUBCASE("nonzero constants never vanish") {
        Polynomial f(*f3, 2);
        f.add_term(Monomial({0, 0}), f3->one());
        const std::vector<FieldElement> b{f3->element(0), f3->element(1), f3->element(2)};
        CHECK(zero_set(f, Grid(*f3, {b, b})).empty());
    }
    SUBCASE("the r=2 construction zero count over GF(4) units") {
        auto f4 = make_field(2, 2);
        const auto zeros = zero_set(box_polynomial(*f4), Grid::units(*f4, 2));
        CHECK(zeros.size() == 6);  // p^(r-1)(p^r-1)^(r-1) at p = r = 2
    }
}

TEST_CASE("grid validation") {
    auto f3 = make_field(3, 1);
    auto f5 = make_field(5, 1);
    const Polynomial f = product_minus_one(*f3);

    CHECK_THROWS_AS(Grid(*f3, {{f3->element(1), f3->element(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(Grid(*f3, {{f5->element(1)}}), std::invalid_argument);

    const std::vector<FieldElement> b{f3->element(1)};
    CHECK_THROWS_AS(zero_set(f, Grid(*f3, {b, b, b})), std::invalid_argument);  // arity
    const Grid ok(*f3, {b, b});
    CHECK_THROWS_AS(zero_set(product_minus_one(*f5), ok), std::invalid_argument);  // context
    CHECK_THROWS_AS(zero_set(f, ok, /*eval_budget=*/0), budget_error);
}

TEST_CASE("hypergraph_of mirrors the zero set") {
    auto f3 = make_field(3, 1);
    const Polynomial f = product_minus_one(*f3);
    const std::vector<FieldElement> b{f3->element(1), f3->element(2)};
    const Hypergraph h = hypergraph_of(f, Grid(*f3, {b, b}));
    CHECK(h.num_edges() == 2);
    CHECK(h.num_vertices() == 4);
    CHECK(h.contains(std::vector<std::uint32_t>{0, 0}));
    CHECK(h.contains(std::vector<std::uint32_t>{1, 1}));
    CHECK_FALSE(h.contains(std::vector<std::uint32_t>{0, 1}));

    SUBCASE("empty zero set gives an edgeless hypergraph") {
        Polynomial c(*f3, 2);
        c.add_term(Monomial({0, 0}), f3->one());
        CHECK(hypergraph_of(c, Grid(*f3, {b, b})).num_edges() == 0);
    }
}

TEST_CASE("the p=2, r=2 instance is a six-cycle") {
    auto f4 = make_field(2, 2);
    const Hypergraph h = hypergraph_of(box_polynomial(*f4), Grid::units(*f4, 2));
    REQUIRE(h.num_edges() == 6);
    REQUIRE(h.part_size(0) == 3);
    REQUIRE(h.part_size(1) == 3);

    // A bipartite graph on 3+3 vertices with 6 edges is a 6-cycle iff it is
    // 2-regular and connected.
    std::vector<std::vector<std::uint32_t>> adj(6);
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        const auto edge = h.edge(e);
        adj[edge[0]].push_back(3 + edge[1]);
        adj[3 + edge[1]].push_back(edge[0]);
    }
    for (const auto& nbrs : adj) CHECK(nbrs.size() == 2);
    std::vector<bool> seen(6, false);
    std::queue<std::uint32_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 0;
    while (!q.empty()) {
        const auto v = q.front();
        q.pop();
        ++reached;
        for (auto w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                q.push(w);
            }
        }
    }
    CHECK(reached == 6);
}

TEST_CASE("non-vanishing checks on explicit instances") {
    auto f3 = make_field(3, 1);

    SUBCASE("x1*x2 - 1 with the maximal monomial x1*x2") {
        const Polynomial f = product_minus_one(*f3);
        const std::vector<FieldElement> a{f3->element(0), f3->element(1)};
        CHECK(check_lason_instance(f, Monomial({1, 1}), Grid(*f3, {a, a})));
    }
    SUBCASE("single monomial x1") {
        Polynomial f(*f3, 1);
        f.add_term(Monomial({1}), f3->one());
        const std::vector<FieldElement> a{f3->element(1), f3->element(2)};
        CHECK(check_lason_instance(f, Monomial({1}), Grid(*f3, {a})));
    }
    SUBCASE("construction polynomial on every 2x2 unit sub-grid") {
        auto f4 = make_field(2, 2);
        const Polynomial f = box_polynomial(*f4);
        const Monomial m({1, 1});
        for (std::uint32_t a = 1; a <= 3; ++a) {
            for (std::uint32_t b = static_cast<std::uint32_t>(a) + 1; b <= 3; ++b) {
                for (std::uint32_t c = 1; c <= 3; ++c) {
                    for (std::uint32_t d = c + 1; d <= 3; ++d) {
                        const std::vector<FieldElement> a1{f4->element(a), f4->element(b)};
                        const std::vector<FieldElement> a2{f4->element(c), f4->element(d)};
                        CHECK(check_lason_instance(f, m, Grid(*f4, {a1, a2})));
                    }
                }
            }
        }
    }
    SUBCASE("non-maximal monomial is a precondition error, not a false") {
        const Polynomial f = product_minus_one(*f3);
        const std::vector<FieldElement> a{f3->element(0), f3->element(1)};
        CHECK_THROWS_AS(check_lason_instance(f, Monomial({0, 0}), Grid(*f3, {a, a})),
                        std::invalid_argument);
    }
    SUBCASE("sub-grid smaller than d_i + 1 is rejected") {
        const Polynomial f = product_minus_one(*f3);
        const std::vector<FieldElement> one_elt{f3->element(0)};
        const std::vector<FieldElement> two{f3->element(0), f3->element(1)};
        CHECK_THROWS_AS(check_lason_instance(f, Monomial({1, 1}), Grid(*f3, {one_elt, two})),
                        std::invalid_argument);
    }
}

TEST_CASE("degree-condition checks on explicit instances") {
    auto f3 = make_field(3, 1);
    auto f5 = make_field(5, 1);

    SUBCASE("x1 + x2, monomial x1, A1 = {0,1}, A2 = {0}") {
        Polynomial f(*f3, 2);
        f.add_term(Monomial({1, 0}), f3->one());
        f.add_term(Monomial({0, 1}), f3->one());
        const Grid sub(*f3, {{f3->element(0), f3->element(1)}, {f3->element(0)}});
        CHECK(check_alon_instance(f, Monomial({1, 0}), sub));
    }
    SUBCASE("x1*x2 over GF(5) away from zero") {
        Polynomial f(*f5, 2);
        f.add_term(Monomial({1, 1}), f5->one());
        const std::vector<FieldElement> a{f5->element(1), f5->element(2)};
        CHECK(check_alon_instance(f, Monomial({1, 1}), Grid(*f5, {a, a})));
    }
    SUBCASE("(x1-1)(x2-1) expanded, A_i = {0,2}") {
        Polynomial f(*f3, 2);
        f.add_term(Monomial({1, 1}), f3->one());
        f.add_term(Monomial({1, 0}), -f3->one());
        f.add_term(Monomial({0, 1}), -f3->one());
        f.add_term(Monomial({0, 0}), f3->one());
        const std::vector<FieldElement> a{f3->element(0), f3->element(2)};
        CHECK(check_alon_instance(f, Monomial({1, 1}), Grid(*f3, {a, a})));
    }
    SUBCASE("degree condition violations are errors") {
        Polynomial f(*f3, 2);
        f.add_term(Monomial({1, 0}), f3->one());
        f.add_term(Monomial({1, 1}), f3->one());
        const std::vector<FieldElement> a{f3->element(0), f3->element(1)};
        // deg f = 2 > 1 + 0
        CHECK_THROWS_AS(check_alon_instance(f, Monomial({1, 0}), Grid(*f3, {a, a})),
                        std::invalid_argument);
        // not a monomial of f at all
        CHECK_THROWS_AS(check_alon_instance(f, Monomial({2, 2}), Grid(*f3, {a, a})),
                        std::invalid_argument);
    }
}

TEST_CASE("zero-density reports") {
    SUBCASE("p=2, r=2 construction") {
        auto f4 = make_field(2, 2);
        const Polynomial f = box_polynomial(*f4);
        const auto rep = corollary_report(f, Monomial({1, 1}), Grid::units(*f4, 2));
        CHECK(rep.zero_count == 6);
        CHECK(rep.part_size == 3);
        CHECK(rep.exponent == Rational(3, 2));
        CHECK(rep.ratio == doctest::Approx(6.0 / std::pow(3.0, 1.5)).epsilon(1e-12));
    }
    SUBCASE("p=3, r=2 construction") {
        auto f9 = make_field(3, 2);
        const auto rep =
            corollary_report(box_polynomial(*f9), Monomial({1, 1}), Grid::units(*f9, 2));
        CHECK(rep.zero_count == 24);
        CHECK(rep.part_size == 8);
        CHECK(rep.exponent == Rational(3, 2));
        CHECK(rep.ratio == doctest::Approx(24.0 / std::pow(8.0, 1.5)).epsilon(1e-12));
    }
    SUBCASE("nonzero constant polynomial") {
        auto f3 = make_field(3, 1);
        Polynomial f(*f3, 2);
        f.add_term(Monomial({0, 0}), f3->one());
        const std::vector<FieldElement> b{f3->element(0), f3->element(1)};
        const auto rep = corollary_report(f, Monomial({0, 0}), Grid(*f3, {b, b}));
        CHECK(rep.zero_count == 0);
        CHECK(rep.ratio == 0.0);
    }
    SUBCASE("unequal part sizes are rejected") {
        auto f3 = make_field(3, 1);
        const Polynomial f = product_minus_one(*f3);
        const Grid grid(*f3, {{f3->element(1), f3->element(2)}, {f3->element(1)}});
        CHECK_THROWS_AS(corollary_report(f, Monomial({1, 1}), grid), std::invalid_argument);
    }
}

TEST_CASE("zero set and nonzero set partition the grid") {
    auto f5 = make_field(5, 1);
    Polynomial f(*f5, 2);
    f.add_term(Monomial({2, 0}), f5->one());
    f.add_term(Monomial({0, 1}), f5->element(4));
    std::vector<FieldElement> all;
    for (std::uint32_t i = 0; i < 5; ++i) all.push_back(f5->element(i));
    const Grid grid(*f5, {all, all});
    const auto zeros = zero_set(f, grid);
    std::size_t nonzero = 0;
    for (std::uint32_t a = 0; a < 5; ++a) {
        for (std::uint32_t b = 0; b < 5; ++b) {
            if (f.evaluate_enc(std::vector<std::uint32_t>{a, b}) != 0) ++nonzero;
        }
    }
    CHECK(zeros.size() + nonzero == 25);
}

TEST_SUITE_END();
