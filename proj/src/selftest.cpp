#include "boxfree/selftest.hpp"

#include <algorithm>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "boxfree/bounds.hpp"
#include "boxfree/construction.hpp"
#include "boxfree/field.hpp"
#include "boxfree/hypergraph.hpp"
#include "boxfree/nullstellensatz.hpp"
#include "boxfree/poly.hpp"

namespace boxfree {

namespace {

using boost::multiprecision::cpp_int;

struct Checker {
    SuiteResult result;

    explicit Checker(std::string name) { result.name = std::move(name); }
    void expect(bool cond, const std::string& msg) {
        ++result.checks;
        if (!cond && result.passed) {
            result.passed = false;
            result.detail = msg;
        }
    }
    SuiteResult finish(const std::string& summary) {
        if (result.passed) result.detail = summary;
        return std::move(result);
    }
};

// rng() % n is deterministic across platforms, unlike the distribution
// templates; the tiny modulo bias is irrelevant here.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::vector<std::pair<std::uint64_t, std::uint32_t>> prime_powers_up_to(std::uint64_t cap,
                                                                        std::uint32_t min_r) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t p = 2; p <= cap; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t q = 1;
        for (std::uint32_t r = 1; r <= kMaxExtensionDegree; ++r) {
            if (q > cap / p) break;
            q *= p;
            if (r >= min_r) out.emplace_back(p, r);
        }
    }
    return out;
}

Polynomial random_bounded_poly(const FieldCtx& ctx, std::size_t arity, std::mt19937_64& rng) {
    const std::uint64_t p = ctx.characteristic();
    while (true) {
        Polynomial f(ctx, arity);
        const std::size_t nterms = 1 + bounded(rng, 4);
        for (std::size_t t = 0; t < nterms; ++t) {
            std::vector<std::uint64_t> exps(arity);
            for (auto& e : exps) e = bounded(rng, p);  // keeps d_i + 1 <= p
            const auto coeff = static_cast<std::uint32_t>(1 + bounded(rng, p - 1));
            f.add_term(Monomial(std::move(exps)), ctx.element(coeff));
        }
        if (!f.is_zero()) return f;
    }
}

std::vector<FieldElement> random_subset(const FieldCtx& ctx, std::size_t size,
                                        std::mt19937_64& rng) {
    std::vector<std::uint32_t> encs(ctx.order());
    for (std::uint32_t i = 0; i < ctx.order(); ++i) encs[i] = i;
    for (std::size_t i = 0; i < size; ++i) {  // partial Fisher-Yates
        const std::size_t j = i + bounded(rng, encs.size() - i);
        std::swap(encs[i], encs[j]);
    }
    std::vector<FieldElement> out;
    out.reserve(size);
    for (std::size_t i = 0; i < size; ++i) out.emplace_back(ctx, encs[i]);
    return out;
}

std::uint64_t formula_edges(std::uint64_t p, std::uint32_t r, std::uint64_t order) {
    cpp_int m = 1;
    for (std::uint32_t i = 0; i + 1 < r; ++i) m *= p;
    for (std::uint32_t i = 0; i + 1 < r; ++i) m *= cpp_int(order) - 1;
    return static_cast<std::uint64_t>(m);
}

}  // namespace

SuiteResult suite_field_axioms() {
    Checker c("field-axioms");
    auto fields = prime_powers_up_to(1 << 10, 2);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                            53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 257, 1009}) {
        fields.emplace_back(p, 1);
    }
    for (auto [p, r] : fields) {
        auto f = make_field(p, r);
        const auto q = static_cast<std::uint32_t>(f->order());
        const std::uint32_t one = f->one().encoding();
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                c.expect(f->add_enc(a, b) == f->add_enc(b, a), "addition not commutative");
                c.expect(f->mul_enc(a, b) == f->mul_enc(b, a), "multiplication not commutative");
                c.expect(f->mul_enc(f->mul_enc(a, b), b) == f->mul_enc(a, f->mul_enc(b, b)),
                         "multiplication not associative");
                c.expect(f->add_enc(f->add_enc(a, b), b) == f->add_enc(a, f->add_enc(b, b)),
                         "addition not associative");
                c.expect(f->mul_enc(a, f->add_enc(a, b)) ==
                             f->add_enc(f->mul_enc(a, a), f->mul_enc(a, b)),
                         "distributivity failed");
            }
            if (a != 0) c.expect(f->mul_enc(a, f->inv_enc(a)) == one, "a * inv(a) != 1");
        }
        // Full three-variable quantification on the smallest fields.
        if (q <= 64) {
            for (std::uint32_t a = 0; a < q; ++a)
                for (std::uint32_t b = 0; b < q; ++b)
                    for (std::uint32_t d = 0; d < q; ++d) {
                        c.expect(f->mul_enc(f->mul_enc(a, b), d) ==
                                     f->mul_enc(a, f->mul_enc(b, d)),
                                 "triple associativity failed");
                        c.expect(f->mul_enc(a, f->add_enc(b, d)) ==
                                     f->add_enc(f->mul_enc(a, b), f->mul_enc(a, d)),
                                 "triple distributivity failed");
                    }
        }
    }
    return c.finish("field axioms on " + std::to_string(fields.size()) + " fields");
}

SuiteResult suite_power_identity() {
    Checker c("power-identity");
    const auto fields = prime_powers_up_to(1 << 12, 1);
    for (auto [p, r] : fields) {
        auto f = make_field(p, r);
        for (std::uint64_t enc = 0; enc < f->order(); ++enc) {
            c.expect(f->pow_enc(static_cast<std::uint32_t>(enc), f->order()) == enc,
                     "a^(p^r) != a");
        }
    }
    return c.finish("a^(p^r) = a on " + std::to_string(fields.size()) + " fields");
}

SuiteResult suite_trace_properties() {
    Checker c("trace-properties");
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 2}, {2, 3}, {2, 4}, {2, 8}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {13, 1}}) {
        auto f = make_field(p, r);
        for (std::uint64_t enc = 0; enc < f->order(); ++enc) {
            const auto a = static_cast<std::uint32_t>(enc);
            const std::uint32_t t = f->trace_enc(a);
            c.expect(t < p, "trace left the prime subfield");
            c.expect(f->pow_enc(t, p) == t, "trace(a)^p != trace(a)");
            c.expect(f->trace_value(a) == t, "linear-form trace disagrees with Frobenius sum");
        }
        if (f->order() <= 256) {
            for (std::uint64_t a = 0; a < f->order(); ++a) {
                for (std::uint64_t b = 0; b < f->order(); ++b) {
                    const auto ea = static_cast<std::uint32_t>(a);
                    const auto eb = static_cast<std::uint32_t>(b);
                    c.expect(f->trace_enc(f->add_enc(ea, eb)) ==
                                 f->add_enc(f->trace_enc(ea), f->trace_enc(eb)),
                             "trace not additive");
                }
            }
        }
    }
    return c.finish("trace subfield membership and additivity");
}

SuiteResult suite_trace_fibers(std::uint64_t max_field) {
    Checker c("trace-fibers");
    const auto fields = prime_powers_up_to(max_field, 1);
    for (auto [p, r] : fields) {
        auto f = make_field(p, r, max_field);
        std::uint64_t expected = 1;
        for (std::uint32_t i = 0; i + 1 < r; ++i) expected *= p;
        const auto sizes = f->trace_fiber_sizes();
        c.expect(sizes.size() == p, "fiber-size vector has wrong length");
        for (std::uint64_t v : sizes) {
            c.expect(v == expected, "fiber size differs from p^(r-1) in GF(" +
                                        std::to_string(p) + "^" + std::to_string(r) + ")");
        }
    }
    return c.finish("all fibers have size p^(r-1) across " + std::to_string(fields.size()) +
                    " fields");
}

SuiteResult suite_encoding_roundtrip() {
    Checker c("encoding-roundtrip");
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 1}, {2, 6}, {2, 12}, {3, 5}, {5, 4}, {7, 3}, {61, 2}, {4093, 1}}) {
        auto f = make_field(p, r);
        for (std::uint64_t enc = 0; enc < f->order(); ++enc) {
            const auto e = f->element(enc);
            c.expect(f->from_coeffs(e.coeffs()) == e, "decode/encode round-trip failed");
        }
    }
    return c.finish("dec(enc(a)) = a");
}

SuiteResult suite_modulus_invariance() {
    Checker c("modulus-invariance");
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
        auto canonical = make_field(p, r);

        // The lexicographically largest irreducible, for maximal contrast.
        std::vector<std::uint32_t> alt;
        std::vector<std::uint32_t> coeffs(r + 1);
        coeffs[r] = 1;
        std::vector<std::uint64_t> weight(r);
        std::uint64_t w = 1;
        for (std::uint32_t i = 0; i < r; ++i) {
            weight[r - 1 - i] = w;
            w *= p;
        }
        for (std::uint64_t k = canonical->order(); k-- > 0;) {
            for (std::uint32_t i = 0; i < r; ++i) {
                coeffs[i] = static_cast<std::uint32_t>((k / weight[i]) % p);
            }
            if (is_irreducible_monic(p, coeffs)) {
                alt = coeffs;
                break;
            }
        }
        auto other = make_field_with_modulus(p, alt);
        c.expect(canonical->modulus() != other->modulus(), "expected a distinct modulus");
        c.expect(canonical->units().size() == other->units().size(), "unit counts differ");
        c.expect(canonical->trace_fiber_sizes() == other->trace_fiber_sizes(),
                 "fiber sizes differ between moduli");

        std::uint64_t edges_canonical = 0, edges_other = 0;
        for_each_box_edge(*canonical, [&](std::span<const std::uint32_t>) { ++edges_canonical; });
        for_each_box_edge(*other, [&](std::span<const std::uint32_t>) { ++edges_other; });
        c.expect(edges_canonical == edges_other, "construction edge counts differ");
    }
    return c.finish("unit counts, fiber sizes and edge counts are modulus-independent");
}

SuiteResult suite_lason_nonvanishing(std::uint64_t seed, std::uint32_t trials) {
    Checker c("lason-nonvanishing");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::uint64_t primes[] = {2, 3, 5};
    for (std::uint32_t t = 0; t < trials; ++t) {
        auto f = make_field(primes[t % 3], 1);
        const std::size_t arity = 2 + t % 2;
        const Polynomial poly = random_bounded_poly(*f, arity, rng);
        const auto maximal = maximal_monomials(poly);
        const Monomial& m = maximal[bounded(rng, maximal.size())];
        std::vector<std::vector<FieldElement>> parts;
        for (std::size_t i = 0; i < arity; ++i) {
            parts.push_back(random_subset(*f, static_cast<std::size_t>(m.exponent(i)) + 1, rng));
        }
        c.expect(check_lason_instance(poly, m, Grid(*f, parts)),
                 "maximal-monomial guarantee violated (implementation bug)");
    }
    return c.finish(std::to_string(trials) + " random instances, no vanishing grid");
}

SuiteResult suite_alon_nonvanishing(std::uint64_t seed, std::uint32_t trials) {
    Checker c("alon-nonvanishing");
    std::mt19937_64 rng(seed ^ 0xbf58476d1ce4e5b9ULL);
    const std::uint64_t primes[] = {2, 3, 5};
    for (std::uint32_t t = 0; t < trials; ++t) {
        auto f = make_field(primes[t % 3], 1);
        const std::size_t arity = 2 + t % 2;
        const Polynomial poly = random_bounded_poly(*f, arity, rng);
        // Any top-degree monomial satisfies deg f <= d_1 + ... + d_k.
        const auto ms = poly.monomials();
        const Monomial* m = &ms[0];
        for (const auto& cand : ms) {
            if (cand.total_degree() > m->total_degree()) m = &cand;
        }
        std::vector<std::vector<FieldElement>> parts;
        for (std::size_t i = 0; i < arity; ++i) {
            parts.push_back(
                random_subset(*f, static_cast<std::size_t>(m->exponent(i)) + 1, rng));
        }
        c.expect(check_alon_instance(poly, *m, Grid(*f, parts)),
                 "degree-condition guarantee violated (implementation bug)");
    }
    return c.finish(std::to_string(trials) + " random instances, no vanishing grid");
}

SuiteResult suite_random_boxfree(std::uint64_t seed, std::uint32_t trials) {
    Checker c("zero-set-box-freeness");
    std::mt19937_64 rng(seed ^ 0x94d049bb133111ebULL);
    const std::uint64_t primes[] = {2, 3, 5};
    for (std::uint32_t t = 0; t < trials; ++t) {
        const std::uint64_t p = primes[t % 3];
        auto f = make_field(p, 1);
        const std::size_t arity = 2 + t % 2;
        const Polynomial poly = random_bounded_poly(*f, arity, rng);
        const auto maximal = maximal_monomials(poly);
        const Monomial& m = maximal[bounded(rng, maximal.size())];

        std::vector<std::vector<FieldElement>> parts;
        std::vector<std::uint32_t> sizes;
        for (std::size_t i = 0; i < arity; ++i) {
            const auto min_size = static_cast<std::size_t>(m.exponent(i)) + 1;
            const std::size_t part_size =
                min_size + bounded(rng, static_cast<std::size_t>(p) - min_size + 1);
            parts.push_back(random_subset(*f, part_size, rng));
            sizes.push_back(static_cast<std::uint32_t>(min_size));
        }
        const Hypergraph h = hypergraph_of(poly, Grid(*f, parts));
        c.expect(!find_complete_rpartite(h, sizes).has_value(),
                 "zero set contains a forbidden complete r-partite subgraph");
    }
    return c.finish(std::to_string(trials) + " random zero-set hypergraphs stayed box-free");
}

SuiteResult suite_zero_set_oracle(std::uint64_t eval_budget) {
    Checker c("zero-set-oracle");
    // Every (p, r) whose full unit grid has at most 10^6 points.
    std::vector<std::pair<std::uint64_t, std::uint32_t>> cases;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) cases.emplace_back(p, 2);
    cases.emplace_back(2, 3);
    cases.emplace_back(3, 3);
    cases.emplace_back(2, 4);
    for (auto [p, r] : cases) {
        auto f = make_field(p, r);
        auto fast = enumerate_edges_fast(*f);
        std::sort(fast.begin(), fast.end());
        const auto naive = zero_set(box_polynomial(*f), Grid::units(*f, r), eval_budget);
        c.expect(fast == naive, "fast enumeration disagrees with the grid scan for GF(" +
                                    std::to_string(p) + "^" + std::to_string(r) + ")");
    }
    return c.finish("fast enumeration equals the naive zero set on " +
                    std::to_string(cases.size()) + " instances");
}

SuiteResult suite_edge_count_law() {
    Checker c("edge-count-law");
    std::vector<std::pair<std::uint64_t, std::uint32_t>> cases;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31}) cases.emplace_back(p, 2);
    for (std::uint64_t p : {2, 3, 5}) cases.emplace_back(p, 3);
    for (std::uint64_t p : {2, 3}) cases.emplace_back(p, 4);
    cases.emplace_back(2, 5);
    for (auto [p, r] : cases) {
        auto f = make_field(p, r);
        std::uint64_t count = 0;
        for_each_box_edge(*f, [&](std::span<const std::uint32_t>) { ++count; });
        c.expect(count == formula_edges(p, r, f->order()),
                 "edge count violates p^(r-1)(p^r-1)^(r-1) for GF(" + std::to_string(p) + "^" +
                     std::to_string(r) + ")");
    }
    return c.finish("p^(r-1)(p^r-1)^(r-1) on " + std::to_string(cases.size()) + " instances");
}

SuiteResult suite_density_law() {
    Checker c("density-law");
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 2}, {3, 2}, {5, 2}, {7, 2}, {2, 3}, {3, 3}, {2, 4}, {2, 5}, {3, 4}, {13, 2}}) {
        auto f = make_field(p, r);
        const std::uint64_t n = f->order() - 1;
        const std::uint64_t m = formula_edges(p, r, f->order());
        c.expect(density_ok_exact(m, n, r), "m^r < n^(r*r-1)");
        c.expect(density_ratio(m, n, r) >= 1.0, "density ratio below 1");
    }
    return c.finish("m >= n^(r-1/r) holds exactly");
}

SuiteResult suite_exponent_table() {
    Checker c("exponent-table");
    const auto table = comparison_table(62);
    for (const auto& rec : table) {
        const bool should_match = rec.r >= 2 && rec.r <= 4;
        c.expect(rec.matches_cpz == should_match,
                 "construction-vs-cpz equality wrong at r = " + std::to_string(rec.r));
        if (!should_match) {
            c.expect(rec.construction < rec.cpz, "construction exponent should trail cpz");
        }
        c.expect(rec.construction <= rec.erdos_two, "lower bound above the upper bound");
        c.expect((rec.construction == rec.erdos_two) == (rec.r == 2),
                 "upper/lower exponents may only coincide at r = 2");
        const Rational rr(static_cast<long long>(rec.r));
        for (const Rational& e : {rec.erdos_two, rec.cpz, rec.construction}) {
            c.expect(e > rr - Rational(1) && e < rr, "exponent outside (r-1, r)");
        }
    }
    return c.finish("exact rational exponent laws up to r = 62");
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
    std::vector<SuiteResult> results;
    results.push_back(suite_field_axioms());
    results.push_back(suite_power_identity());
    results.push_back(suite_trace_properties());
    results.push_back(suite_trace_fibers(opts.max_field));
    results.push_back(suite_encoding_roundtrip());
    results.push_back(suite_modulus_invariance());
    results.push_back(suite_lason_nonvanishing(opts.seed, opts.trials));
    results.push_back(suite_alon_nonvanishing(opts.seed, opts.trials));
    results.push_back(suite_random_boxfree(opts.seed, std::max<std::uint32_t>(1, opts.trials / 5)));
    results.push_back(suite_zero_set_oracle(opts.eval_budget));
    results.push_back(suite_edge_count_law());
    results.push_back(suite_density_law());
    results.push_back(suite_exponent_table());
    return results;
}

}  // namespace boxfree
