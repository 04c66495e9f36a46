#include "boxfree/nullstellensatz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace boxfree {

namespace {

void require_compatible(const Polynomial& f, const Grid& grid) {
    if (&f.ctx() != &grid.ctx()) {
        throw std::invalid_argument("polynomial and grid use different field contexts");
    }
    if (f.arity() != grid.arity()) {
        throw std::invalid_argument("polynomial and grid arity mismatch");
    }
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        if (grid.part(i).empty()) throw std::invalid_argument("grid part is empty");
    }
}

void require_budget(const Grid& grid, std::uint64_t eval_budget) {
    const std::uint64_t points = grid.num_points();
    if (points > eval_budget) {
        throw budget_error("grid scan of " + std::to_string(points) +
                           " points exceeds the evaluation budget " +
                           std::to_string(eval_budget));
    }
}

// Calls fn(point) for every grid point; the tuple buffer is reused.
template <typename Fn>
void scan_grid(const Grid& grid, Fn&& fn) {
    const std::size_t k = grid.arity();
    std::vector<std::size_t> sel(k, 0);
    PointTuple point(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) point[i] = grid.part(i)[sel[i]];
        if (!fn(point)) return;
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++sel[i] < grid.part(i).size()) break;
            sel[i] = 0;
            if (i == 0) return;
        }
    }
}

void require_subgrid_sizes(const Monomial& m, const Grid& sub) {
    for (std::size_t i = 0; i < sub.arity(); ++i) {
        if (sub.part(i).size() < m.exponent(i) + 1) {
            throw std::invalid_argument("sub-grid part " + std::to_string(i + 1) +
                                        " is smaller than d_i + 1");
        }
    }
}

bool vanishes_nowhere_on(const Polynomial& f, const Grid& sub) {
    bool nonzero_found = false;
    scan_grid(sub, [&](const PointTuple& point) {
        if (f.evaluate_enc(point) != 0) {
            nonzero_found = true;
            return false;
        }
        return true;
    });
    return nonzero_found;
}

}  // namespace

Grid::Grid(const FieldCtx& ctx, std::vector<std::vector<std::uint32_t>> parts)
    : ctx_(&ctx), parts_(std::move(parts)) {
    index_.resize(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        for (std::size_t v = 0; v < parts_[i].size(); ++v) {
            auto [it, inserted] = index_[i].emplace(parts_[i][v], static_cast<std::uint32_t>(v));
            if (!inserted) throw std::invalid_argument("grid part has repeated elements");
        }
    }
}

Grid::Grid(const FieldCtx& ctx, const std::vector<std::vector<FieldElement>>& parts)
    : Grid(ctx, [&] {
          std::vector<std::vector<std::uint32_t>> encs(parts.size());
          for (std::size_t i = 0; i < parts.size(); ++i) {
              encs[i].reserve(parts[i].size());
              for (const auto& e : parts[i]) {
                  if (&e.ctx() != &ctx) {
                      throw std::invalid_argument("grid element from a different field");
                  }
                  encs[i].push_back(e.encoding());
              }
          }
          return encs;
      }()) {}

Grid Grid::units(const FieldCtx& ctx, std::size_t arity) {
    std::vector<std::uint32_t> unit_encs;
    unit_encs.reserve(ctx.order() - 1);
    for (std::uint64_t enc = 1; enc < ctx.order(); ++enc) {
        unit_encs.push_back(static_cast<std::uint32_t>(enc));
    }
    return Grid(ctx, std::vector<std::vector<std::uint32_t>>(arity, unit_encs));
}

std::uint32_t Grid::index_of(std::size_t i, std::uint32_t enc) const {
    auto it = index_[i].find(enc);
    if (it == index_[i].end()) throw std::invalid_argument("element not in grid part");
    return it->second;
}

std::uint64_t Grid::num_points() const {
    std::uint64_t total = 1;
    for (const auto& part : parts_) {
        const std::uint64_t n = part.size();
        if (n == 0) return 0;
        if (total > UINT64_MAX / n) return UINT64_MAX;
        total *= n;
    }
    return total;
}

std::vector<PointTuple> zero_set(const Polynomial& f, const Grid& grid,
                                 std::uint64_t eval_budget) {
    require_compatible(f, grid);
    require_budget(grid, eval_budget);
    std::vector<PointTuple> zeros;
    scan_grid(grid, [&](const PointTuple& point) {
        if (f.evaluate_enc(point) == 0) zeros.push_back(point);
        return true;
    });
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

Hypergraph hypergraph_of(const Polynomial& f, const Grid& grid, std::uint64_t eval_budget) {
    const auto zeros = zero_set(f, grid, eval_budget);
    std::vector<std::vector<std::uint32_t>> labels(grid.arity());
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        labels[i].assign(grid.part(i).begin(), grid.part(i).end());
    }
    Hypergraph h(std::move(labels));
    std::vector<std::uint32_t> idx(grid.arity());
    for (const auto& point : zeros) {
        for (std::size_t i = 0; i < grid.arity(); ++i) {
            idx[i] = grid.index_of(i, point[i]);
        }
        h.add_edge(idx);
    }
    return h;
}

bool check_lason_instance(const Polynomial& f, const Monomial& m, const Grid& sub,
                          std::uint64_t eval_budget) {
    require_compatible(f, sub);
    const auto maximal = maximal_monomials(f);
    if (std::find(maximal.begin(), maximal.end(), m) == maximal.end()) {
        throw std::invalid_argument("monomial is not maximal in f");
    }
    require_subgrid_sizes(m, sub);
    require_budget(sub, eval_budget);
    return vanishes_nowhere_on(f, sub);
}

bool check_alon_instance(const Polynomial& f, const Monomial& m, const Grid& sub,
                         std::uint64_t eval_budget) {
    require_compatible(f, sub);
    if (f.coefficient(m).is_zero()) {
        throw std::invalid_argument("monomial does not appear in f");
    }
    if (degree(f) > m.total_degree()) {
        throw std::invalid_argument("degree condition deg f <= d_1 + ... + d_k violated");
    }
    require_subgrid_sizes(m, sub);
    require_budget(sub, eval_budget);
    return vanishes_nowhere_on(f, sub);
}

ZeroDensityReport corollary_report(const Polynomial& f, const Monomial& m, const Grid& grid,
                                   std::uint64_t eval_budget) {
    require_compatible(f, grid);
    const auto maximal = maximal_monomials(f);
    if (std::find(maximal.begin(), maximal.end(), m) == maximal.end()) {
        throw std::invalid_argument("monomial is not maximal in f");
    }
    const std::size_t n = grid.part(0).size();
    for (std::size_t i = 1; i < grid.arity(); ++i) {
        if (grid.part(i).size() != n) {
            throw std::invalid_argument("the density report needs equal part sizes");
        }
    }

    std::vector<std::uint64_t> degs(m.exponents().begin(), m.exponents().end());
    std::sort(degs.begin(), degs.end());
    boost::multiprecision::cpp_int product = 1;
    for (std::size_t i = 0; i + 1 < degs.size(); ++i) {
        product *= degs[i] + 1;
    }
    ZeroDensityReport report;
    report.zero_count = zero_set(f, grid, eval_budget).size();
    report.part_size = n;
    report.exponent = Rational(grid.arity()) - Rational(1, product);
    report.ratio = static_cast<double>(report.zero_count) /
                   std::pow(static_cast<double>(n), to_double(report.exponent));
    return report;
}

}  // namespace boxfree
