#ifndef BOXFREE_HYPERGRAPH_HPP
#define BOXFREE_HYPERGRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "boxfree/common.hpp"

namespace boxfree {

/// An r-partite r-uniform hypergraph. Vertices live in labeled parts;
/// an edge takes one vertex index per part. Edges are a set: duplicates
/// are ignored on insertion. Immutable sharing is safe once populated.
class Hypergraph {
  public:
    /// `part_labels[i]` lists the labels of part i's vertices (typically
    /// canonical field-element encodings).
    explicit Hypergraph(std::vector<std::vector<std::uint32_t>> part_labels);

    std::size_t arity() const { return labels_.size(); }
    std::size_t part_size(std::size_t part) const { return labels_[part].size(); }
    std::size_t num_vertices() const;
    std::uint32_t label(std::size_t part, std::uint32_t vertex) const {
        return labels_[part][vertex];
    }
    const std::vector<std::vector<std::uint32_t>>& part_labels() const { return labels_; }

    std::size_t num_edges() const { return edges_.size() / arity(); }
    std::span<const std::uint32_t> edge(std::size_t e) const {
        return {edges_.data() + e * arity(), arity()};
    }

    /// Inserts an edge given as per-part vertex indices. Returns false if
    /// the edge was already present.
    bool add_edge(std::span<const std::uint32_t> vertex_indices);
    bool contains(std::span<const std::uint32_t> vertex_indices) const;

    /// Mixed-radix key of an index tuple; used for O(1) membership.
    std::uint64_t edge_key(std::span<const std::uint32_t> vertex_indices) const;
    bool contains_key(std::uint64_t key) const;
    std::uint64_t stride(std::size_t part) const { return strides_[part]; }

  private:
    std::vector<std::vector<std::uint32_t>> labels_;
    std::vector<std::uint32_t> edges_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t index_space_;
    // Dense bitmap when the index space is small, hash set otherwise.
    std::vector<bool> dense_;
    std::unordered_set<std::uint64_t> sparse_;
    bool use_dense_;
};

/// A complete r-partite sub-hypergraph: s_i chosen vertices per part plus
/// every one of the s_1 * ... * s_r constituent edges.
struct BoxWitness {
    std::vector<std::vector<std::uint32_t>> part_vertices;
    std::vector<std::vector<std::uint32_t>> edges;
};

/// Searches H for a complete r-partite sub-hypergraph with the given part
/// sizes. For sizes (2, ..., 2) this scans unordered pairs of edges that
/// differ in every coordinate, bucketed by the first coordinate, and probes
/// the remaining 2^r - 2 mixed tuples; general sizes fall back to exhaustive
/// subset enumeration. Membership probes are counted against
/// `membership_budget`; a breach throws budget_error.
std::optional<BoxWitness> find_complete_rpartite(const Hypergraph& h,
                                                 std::span<const std::uint32_t> sizes,
                                                 std::uint64_t membership_budget =
                                                     kDefaultPairBudget);

}  // namespace boxfree

#endif
