#ifndef BOXFREE_NULLSTELLENSATZ_HPP
#define BOXFREE_NULLSTELLENSATZ_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "boxfree/bounds.hpp"
#include "boxfree/field.hpp"
#include "boxfree/hypergraph.hpp"
#include "boxfree/poly.hpp"

namespace boxfree {

/// A Cartesian product B_1 x ... x B_k of finite subsets of one field,
/// with elements pairwise distinct inside each factor.
class Grid {
  public:
    Grid(const FieldCtx& ctx, const std::vector<std::vector<FieldElement>>& parts);

    /// Grid with every factor equal to the nonzero elements of the field.
    static Grid units(const FieldCtx& ctx, std::size_t arity);

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t arity() const { return parts_.size(); }
    std::span<const std::uint32_t> part(std::size_t i) const { return parts_[i]; }
    /// Position of an element (by encoding) inside part i.
    std::uint32_t index_of(std::size_t i, std::uint32_t enc) const;

    /// Number of grid points, or UINT64_MAX on overflow.
    std::uint64_t num_points() const;

  private:
    Grid(const FieldCtx& ctx, std::vector<std::vector<std::uint32_t>> parts);

    const FieldCtx* ctx_;
    std::vector<std::vector<std::uint32_t>> parts_;
    std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> index_;
};

/// A grid point as a tuple of canonical element encodings.
using PointTuple = std::vector<std::uint32_t>;

/// All grid points where f vanishes, sorted lexicographically by encoding.
/// Scans the full grid; refuses grids larger than `eval_budget` points.
std::vector<PointTuple> zero_set(const Polynomial& f, const Grid& grid,
                                 std::uint64_t eval_budget = kDefaultEvalBudget);

/// The zero set viewed as an r-partite r-uniform hypergraph: part i is
/// labeled by B_i, and each vanishing point contributes an edge.
Hypergraph hypergraph_of(const Polynomial& f, const Grid& grid,
                         std::uint64_t eval_budget = kDefaultEvalBudget);

/// Checks one instance of the non-vanishing guarantee for a maximal
/// monomial m = x^(d_1) ... x^(d_k) of f on a sub-grid with |A_i| >= d_i + 1:
/// returns true iff f is nonzero somewhere on the sub-grid. The guarantee
/// says this always holds; the function exists to property-test it.
bool check_lason_instance(const Polynomial& f, const Monomial& m, const Grid& sub,
                          std::uint64_t eval_budget = kDefaultEvalBudget);

/// Same shape under the classical degree condition deg f <= d_1 + ... + d_k,
/// where m only needs to be a monomial of f.
bool check_alon_instance(const Polynomial& f, const Monomial& m, const Grid& sub,
                         std::uint64_t eval_budget = kDefaultEvalBudget);

/// Zero-count report against the Schwartz-Zippel style exponent
/// k - 1/((d_1+1) ... (d_{k-1}+1)) with the d_i sorted ascending. The
/// implied constant of the underlying bound is unspecified, so this is a
/// report, not a pass/fail check.
struct ZeroDensityReport {
    std::uint64_t zero_count;
    std::uint64_t part_size;  // common size n of every factor
    Rational exponent;
    double ratio;  // zero_count / n^exponent
};

ZeroDensityReport corollary_report(const Polynomial& f, const Monomial& m, const Grid& grid,
                                   std::uint64_t eval_budget = kDefaultEvalBudget);

}  // namespace boxfree

#endif
