#ifndef BOXFREE_CONSTRUCTION_HPP
#define BOXFREE_CONSTRUCTION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boxfree/bounds.hpp"
#include "boxfree/field.hpp"
#include "boxfree/hypergraph.hpp"
#include "boxfree/nullstellensatz.hpp"
#include "boxfree/poly.hpp"

namespace boxfree {

/// The box-free construction polynomial over GF(p^r), r >= 2:
///
///     x_1 ... x_r  +  sum_{i=1..r}  prod_{j=1..r-1}  x_{i+j}^(p^r - p^j)
///
/// with variable indices wrapped cyclically into {1, ..., r}. All r+1
/// coefficients are 1, every non-product term omits one variable, and the
/// product monomial x_1 ... x_r is maximal (asserted on construction).
Polynomial box_polynomial(const FieldCtx& ctx);

/// Evaluates the construction polynomial at a tuple of nonzero elements via
/// the factored form
///
///     a_1 ... a_r * (1 + Tr(a_1^{-1} a_2^{-p} ... a_r^{-p^(r-1)})),
///
/// which agrees with the direct evaluation on every unit tuple.
FieldElement trace_form_eval(const FieldCtx& ctx, std::span<const FieldElement> point);

/// Streams every zero of the construction polynomial on (units)^r without a
/// grid scan: for each tail (a_2, ..., a_r) it solves Tr = -1 once through
/// the precomputed fiber and rescales. Tuples of canonical encodings are
/// emitted in tail-major order, p^(r-1) per tail, each zero exactly once.
void for_each_box_edge(const FieldCtx& ctx,
                       const std::function<void(std::span<const std::uint32_t>)>& emit);

/// Materialized fast enumeration; refuses outputs larger than `max_edges`.
std::vector<PointTuple> enumerate_edges_fast(const FieldCtx& ctx,
                                             std::uint64_t max_edges = kDefaultEvalBudget);

/// Exact density law m^r >= n^(r*r-1), i.e. m >= n^(r - 1/r), in integer
/// arithmetic with no floating-point tolerance.
bool density_ok_exact(std::uint64_t num_edges, std::uint64_t n, std::uint32_t r);
/// Informational ratio m / n^(r - 1/r).
double density_ratio(std::uint64_t num_edges, std::uint64_t n, std::uint32_t r);

enum class BuildMode { kFast, kNaive };
enum class BoxVerdict { kFree, kWitnessFound, kSkippedBudget };

struct InstanceReport {
    std::uint64_t p = 0;
    std::uint32_t r = 0;
    std::string field;  // canonical descriptor
    std::uint64_t n_per_part = 0;
    std::uint64_t num_vertices = 0;
    std::uint64_t num_edges = 0;
    std::uint64_t expected_edges = 0;
    BoxVerdict box_free = BoxVerdict::kSkippedBudget;
    bool density_ok = false;
    Rational density_exponent;  // r - 1/r
    double density_ratio = 0.0;
    BuildMode mode = BuildMode::kFast;
};

struct BuildOptions {
    BuildMode mode = BuildMode::kFast;
    bool check_box = true;
    std::uint64_t max_field_order = kDefaultMaxFieldOrder;
    std::uint64_t eval_budget = kDefaultEvalBudget;
    std::uint64_t pair_budget = kDefaultPairBudget;
};

/// A fully assembled instance: the field, the polynomial, the r-partite
/// hypergraph on r copies of the units, and the verification report.
struct BoxInstance {
    FieldHandle field;
    Polynomial poly;
    Hypergraph graph;
    InstanceReport report;
    std::optional<BoxWitness> witness;  // populated iff a box was found
};

BoxInstance build_instance(std::uint64_t p, std::uint32_t r, const BuildOptions& opts = {});

/// The r = 2 specialization has the additive shape x*y + P(x) + Q(y) with
/// P = Q = t^(p^2 - p), relevant to extremal zero-set questions for such
/// polynomials; reports the achieved zero count on n = p^2 - 1 against
/// n^(3/2).
struct RoteReport {
    std::uint64_t p = 0;
    std::uint64_t n = 0;                    // p^2 - 1
    std::uint64_t zero_count = 0;           // enumerated
    std::uint64_t expected_zero_count = 0;  // p * (p^2 - 1)
    bool shape_ok = false;
    std::uint64_t univariate_degree = 0;  // p^2 - p
    double ratio = 0.0;                   // zero_count / n^(3/2)
};

RoteReport rote_instance_report(std::uint64_t p,
                                std::uint64_t max_field_order = kDefaultMaxFieldOrder);

}  // namespace boxfree

#endif
