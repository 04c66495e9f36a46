#include "boxfree/construction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace boxfree {

namespace {

using boost::multiprecision::cpp_int;

cpp_int expected_edge_count(std::uint64_t p, std::uint32_t r, std::uint64_t order) {
    // p^(r-1) * (p^r - 1)^(r-1)
    cpp_int count = 1;
    for (std::uint32_t i = 0; i + 1 < r; ++i) count *= p;
    const cpp_int units = cpp_int(order) - 1;
    for (std::uint32_t i = 0; i + 1 < r; ++i) count *= units;
    return count;
}

}  // namespace

Polynomial box_polynomial(const FieldCtx& ctx) {
    const std::uint32_t r = ctx.degree();
    if (r < 2) throw std::invalid_argument("the construction needs extension degree r >= 2");
    const std::uint64_t p = ctx.characteristic();
    const std::uint64_t order = ctx.order();

    Polynomial f(ctx, r);
    f.add_term(Monomial(std::vector<std::uint64_t>(r, 1)), ctx.one());

    std::uint64_t pj = 1;  // p^j
    std::vector<std::uint64_t> tail_exp(r - 1);
    for (std::uint32_t j = 1; j < r; ++j) {
        pj *= p;
        tail_exp[j - 1] = order - pj;
    }
    for (std::uint32_t i = 1; i <= r; ++i) {
        std::vector<std::uint64_t> exps(r, 0);
        for (std::uint32_t j = 1; j < r; ++j) {
            exps[(i + j - 1) % r] = tail_exp[j - 1];  // variable x_{i+j}, cyclic
        }
        f.add_term(Monomial(exps), ctx.one());
    }

    const auto maximal = maximal_monomials(f);
    const Monomial product(std::vector<std::uint64_t>(r, 1));
    if (std::find(maximal.begin(), maximal.end(), product) == maximal.end()) {
        throw std::logic_error("x_1...x_r failed the maximality assertion");
    }
    return f;
}

FieldElement trace_form_eval(const FieldCtx& ctx, std::span<const FieldElement> point) {
    const std::uint32_t r = ctx.degree();
    if (r < 2) throw std::invalid_argument("the construction needs extension degree r >= 2");
    if (point.size() != r) throw std::invalid_argument("point arity mismatch");

    std::uint32_t product = ctx.one().encoding();
    std::uint32_t u = ctx.one().encoding();
    for (std::uint32_t i = 0; i < r; ++i) {
        if (&point[i].ctx() != &ctx) {
            throw std::invalid_argument("point coordinate from a different field");
        }
        if (point[i].is_zero()) {
            throw std::invalid_argument("the factored form needs nonzero coordinates");
        }
        const std::uint32_t enc = point[i].encoding();
        product = ctx.mul_enc(product, enc);
        u = ctx.mul_enc(u, ctx.frobenius_enc(ctx.inv_enc(enc), i));
    }
    const std::uint32_t one = ctx.one().encoding();
    return {ctx, ctx.mul_enc(product, ctx.add_enc(one, ctx.trace_enc(u)))};
}

void for_each_box_edge(const FieldCtx& ctx,
                       const std::function<void(std::span<const std::uint32_t>)>& emit) {
    const std::uint32_t r = ctx.degree();
    if (r < 2) throw std::invalid_argument("the construction needs extension degree r >= 2");
    const std::uint64_t p = ctx.characteristic();
    const std::uint32_t units = static_cast<std::uint32_t>(ctx.order() - 1);

    // Solutions u of Tr(u) = -1, and their inverses for the rescale step.
    const auto fiber = ctx.trace_fiber(p - 1);
    std::vector<std::uint32_t> fiber_inv(fiber.size());
    for (std::size_t i = 0; i < fiber.size(); ++i) {
        fiber_inv[i] = ctx.inv_enc(fiber[i].encoding());
    }

    // twist[i][a-1] = frobenius(inv(a), i+1): the factor a_{i+2} contributes
    // to c = a_2^{-p} a_3^{-p^2} ... a_r^{-p^(r-1)}.
    std::vector<std::vector<std::uint32_t>> twist(r - 1,
                                                  std::vector<std::uint32_t>(units));
    for (std::uint32_t i = 0; i + 1 < r; ++i) {
        for (std::uint32_t a = 1; a <= units; ++a) {
            twist[i][a - 1] = ctx.frobenius_enc(ctx.inv_enc(a), i + 1);
        }
    }

    // Odometer over tails (a_2, ..., a_r), the last coordinate fastest.
    // prefix[i] = product of twist factors for coordinates up to i.
    std::vector<std::uint32_t> tail(r - 1, 1);
    std::vector<std::uint32_t> prefix(r - 1);
    const std::uint32_t one = ctx.one().encoding();
    auto recompute_from = [&](std::uint32_t from) {
        for (std::uint32_t i = from; i + 1 < r; ++i) {
            const std::uint32_t factor = twist[i][tail[i] - 1];
            prefix[i] = i == 0 ? factor : ctx.mul_enc(prefix[i - 1], factor);
        }
    };
    recompute_from(0);

    std::vector<std::uint32_t> edge(r);
    while (true) {
        const std::uint32_t c = r >= 2 ? prefix[r - 2] : one;
        for (std::uint32_t i = 0; i + 1 < r; ++i) edge[i + 1] = tail[i];
        for (std::uint32_t k = 0; k < fiber_inv.size(); ++k) {
            edge[0] = ctx.mul_enc(c, fiber_inv[k]);
            emit(edge);
        }
        std::uint32_t i = r - 1;
        bool done = true;
        while (i > 0) {
            --i;
            if (tail[i] < units) {
                ++tail[i];
                recompute_from(i);
                done = false;
                break;
            }
            tail[i] = 1;
        }
        if (done) break;
    }
}

std::vector<PointTuple> enumerate_edges_fast(const FieldCtx& ctx, std::uint64_t max_edges) {
    const cpp_int expected =
        expected_edge_count(ctx.characteristic(), ctx.degree(), ctx.order());
    if (expected > max_edges) {
        throw budget_error("fast enumeration would emit " + expected.str() +
                           " edges, over the budget " + std::to_string(max_edges));
    }
    std::vector<PointTuple> out;
    out.reserve(static_cast<std::size_t>(expected));
    for_each_box_edge(ctx, [&](std::span<const std::uint32_t> edge) {
        out.emplace_back(edge.begin(), edge.end());
    });
    return out;
}

bool density_ok_exact(std::uint64_t num_edges, std::uint64_t n, std::uint32_t r) {
    const cpp_int lhs = boost::multiprecision::pow(cpp_int(num_edges), r);
    const cpp_int rhs = boost::multiprecision::pow(cpp_int(n), r * r - 1);
    return lhs >= rhs;
}

double density_ratio(std::uint64_t num_edges, std::uint64_t n, std::uint32_t r) {
    const double exponent = static_cast<double>(r) - 1.0 / static_cast<double>(r);
    return static_cast<double>(num_edges) / std::pow(static_cast<double>(n), exponent);
}

BoxInstance build_instance(std::uint64_t p, std::uint32_t r, const BuildOptions& opts) {
    if (r < 2) throw std::invalid_argument("the construction needs r >= 2");
    FieldHandle field = make_field(p, r, opts.max_field_order);
    const FieldCtx& ctx = *field;
    Polynomial f = box_polynomial(ctx);

    const cpp_int expected = expected_edge_count(p, r, ctx.order());
    if (expected > opts.eval_budget) {
        throw budget_error("instance has " + expected.str() + " edges, over the budget " +
                           std::to_string(opts.eval_budget));
    }
    const auto expected_u64 = static_cast<std::uint64_t>(expected);

    const std::uint64_t n = ctx.order() - 1;
    Hypergraph graph = [&] {
        if (opts.mode == BuildMode::kNaive) {
            return hypergraph_of(f, Grid::units(ctx, r), opts.eval_budget);
        }
        std::vector<std::uint32_t> labels(n);
        for (std::uint32_t v = 0; v < n; ++v) labels[v] = v + 1;
        Hypergraph h(std::vector<std::vector<std::uint32_t>>(r, labels));
        std::vector<std::uint32_t> idx(r);
        for_each_box_edge(ctx, [&](std::span<const std::uint32_t> edge) {
            for (std::uint32_t i = 0; i < r; ++i) idx[i] = edge[i] - 1;
            h.add_edge(idx);
        });
        return h;
    }();

    if (graph.num_edges() != expected_u64) {
        throw std::logic_error("edge count " + std::to_string(graph.num_edges()) +
                               " violates the p^(r-1)(p^r-1)^(r-1) law");
    }

    BoxInstance instance{std::move(field), std::move(f), std::move(graph), {}, std::nullopt};
    InstanceReport& rep = instance.report;
    rep.p = p;
    rep.r = r;
    rep.field = field_descriptor(ctx);
    rep.n_per_part = n;
    rep.num_vertices = static_cast<std::uint64_t>(r) * n;
    rep.num_edges = instance.graph.num_edges();
    rep.expected_edges = expected_u64;
    rep.mode = opts.mode;
    rep.density_ok = density_ok_exact(rep.num_edges, n, r);
    rep.density_exponent = construction_exponent(r);
    rep.density_ratio = density_ratio(rep.num_edges, n, r);

    if (opts.check_box) {
        try {
            const std::vector<std::uint32_t> twos(r, 2);
            instance.witness = find_complete_rpartite(instance.graph, twos, opts.pair_budget);
            rep.box_free = instance.witness ? BoxVerdict::kWitnessFound : BoxVerdict::kFree;
        } catch (const budget_error&) {
            rep.box_free = BoxVerdict::kSkippedBudget;
        }
    } else {
        rep.box_free = BoxVerdict::kSkippedBudget;
    }
    return instance;
}

RoteReport rote_instance_report(std::uint64_t p, std::uint64_t max_field_order) {
    FieldHandle field = make_field(p, 2, max_field_order);
    const FieldCtx& ctx = *field;
    const Polynomial f = box_polynomial(ctx);

    RoteReport rep;
    rep.p = p;
    rep.n = ctx.order() - 1;
    rep.univariate_degree = ctx.order() - p;
    rep.expected_zero_count = p * rep.n;

    // Shape x*y + P(x) + Q(y): besides the product term, every term must
    // involve a single variable.
    rep.shape_ok = f.term_count() == 3;
    for (const auto& [m, coeff] : f.terms()) {
        (void)coeff;
        const bool is_product = m == Monomial({1, 1});
        const bool is_p_term = m == Monomial({rep.univariate_degree, 0});
        const bool is_q_term = m == Monomial({0, rep.univariate_degree});
        if (!is_product && !is_p_term && !is_q_term) rep.shape_ok = false;
    }

    std::uint64_t count = 0;
    for_each_box_edge(ctx, [&](std::span<const std::uint32_t>) { ++count; });
    rep.zero_count = count;
    rep.ratio = static_cast<double>(count) / std::pow(static_cast<double>(rep.n), 1.5);
    return rep;
}

}  // namespace boxfree
