#include "boxfree/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace boxfree {

namespace {

// Index spaces up to this size use a bitmap for membership.
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 26;
constexpr std::uint64_t kIndexSpaceCap = std::uint64_t{1} << 62;

}  // namespace

Hypergraph::Hypergraph(std::vector<std::vector<std::uint32_t>> part_labels)
    : labels_(std::move(part_labels)) {
    if (labels_.empty()) throw std::invalid_argument("hypergraph needs at least one part");
    if (labels_.size() > 31) throw std::invalid_argument("hypergraph arity too large");
    strides_.resize(labels_.size());
    index_space_ = 1;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        strides_[i] = index_space_;
        const std::uint64_t n = labels_[i].size();
        if (n == 0) {
            index_space_ = 0;
        } else if (index_space_ > kIndexSpaceCap / n) {
            throw std::length_error("hypergraph index space too large for membership keys");
        } else {
            index_space_ *= n;
        }
    }
    use_dense_ = index_space_ <= kDenseLimit;
    if (use_dense_) dense_.assign(index_space_, false);
}

std::size_t Hypergraph::num_vertices() const {
    std::size_t total = 0;
    for (const auto& part : labels_) total += part.size();
    return total;
}

std::uint64_t Hypergraph::edge_key(std::span<const std::uint32_t> idx) const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        key += strides_[i] * idx[i];
    }
    return key;
}

bool Hypergraph::contains_key(std::uint64_t key) const {
    return use_dense_ ? dense_[key] : sparse_.contains(key);
}

bool Hypergraph::add_edge(std::span<const std::uint32_t> idx) {
    if (idx.size() != arity()) throw std::invalid_argument("edge arity mismatch");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= labels_[i].size()) throw std::invalid_argument("vertex index out of range");
    }
    const std::uint64_t key = edge_key(idx);
    if (contains_key(key)) return false;
    if (use_dense_) {
        dense_[key] = true;
    } else {
        sparse_.insert(key);
    }
    edges_.insert(edges_.end(), idx.begin(), idx.end());
    return true;
}

bool Hypergraph::contains(std::span<const std::uint32_t> idx) const {
    if (idx.size() != arity()) throw std::invalid_argument("edge arity mismatch");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= labels_[i].size()) return false;
    }
    return contains_key(edge_key(idx));
}

namespace {

class ProbeCounter {
  public:
    explicit ProbeCounter(std::uint64_t budget) : budget_(budget) {}
    void charge() {
        if (used_ == budget_) {
            throw budget_error("membership-check budget exceeded during box search");
        }
        ++used_;
    }

  private:
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
};

BoxWitness make_witness(const std::vector<std::vector<std::uint32_t>>& chosen) {
    BoxWitness w;
    w.part_vertices = chosen;
    for (auto& part : w.part_vertices) std::sort(part.begin(), part.end());

    const std::size_t r = w.part_vertices.size();
    std::vector<std::size_t> sel(r, 0);
    std::vector<std::uint32_t> tuple(r);
    while (true) {
        for (std::size_t i = 0; i < r; ++i) tuple[i] = w.part_vertices[i][sel[i]];
        w.edges.push_back(tuple);
        std::size_t i = r;
        bool done = true;
        while (i > 0) {
            --i;
            if (++sel[i] < w.part_vertices[i].size()) { done = false; break; }
            sel[i] = 0;
        }
        if (done) break;
    }
    std::sort(w.edges.begin(), w.edges.end());
    return w;
}

// Specialized search for part sizes (2, ..., 2): every box is spanned by a
// pair of edges that disagree in all r coordinates.
std::optional<BoxWitness> pair_scan(const Hypergraph& h, ProbeCounter& probes) {
    const std::size_t r = h.arity();
    const std::size_t m = h.num_edges();
    std::vector<std::vector<std::uint32_t>> buckets(h.part_size(0));
    for (std::size_t e = 0; e < m; ++e) {
        buckets[h.edge(e)[0]].push_back(static_cast<std::uint32_t>(e));
    }

    const std::uint32_t full_mask = (1u << r) - 1;
    std::vector<std::int64_t> delta(r);

    for (std::size_t b1 = 0; b1 < buckets.size(); ++b1) {
        for (std::size_t b2 = b1 + 1; b2 < buckets.size(); ++b2) {
            for (std::uint32_t e1 : buckets[b1]) {
                const auto edge1 = h.edge(e1);
                const std::int64_t key1 = static_cast<std::int64_t>(h.edge_key(edge1));
                for (std::uint32_t e2 : buckets[b2]) {
                    const auto edge2 = h.edge(e2);
                    bool all_differ = true;
                    for (std::size_t i = 1; i < r; ++i) {
                        if (edge1[i] == edge2[i]) { all_differ = false; break; }
                    }
                    if (!all_differ) continue;

                    for (std::size_t i = 0; i < r; ++i) {
                        delta[i] = (static_cast<std::int64_t>(edge2[i]) -
                                    static_cast<std::int64_t>(edge1[i])) *
                                   static_cast<std::int64_t>(h.stride(i));
                    }

                    // Visit the 2^r - 2 proper mixtures of the two edges in
                    // Gray-code order; each step moves the key by one delta.
                    bool found = true;
                    std::uint32_t mask = 0;
                    std::int64_t key = key1;
                    for (std::uint32_t t = 1; t < (1u << r); ++t) {
                        const auto bit = static_cast<std::uint32_t>(std::countr_zero(t));
                        mask ^= 1u << bit;
                        key += (mask >> bit) & 1u ? delta[bit] : -delta[bit];
                        if (mask == full_mask) continue;  // edge2 itself
                        probes.charge();
                        if (!h.contains_key(static_cast<std::uint64_t>(key))) {
                            found = false;
                            break;
                        }
                    }
                    if (found) {
                        std::vector<std::vector<std::uint32_t>> chosen(r);
                        for (std::size_t i = 0; i < r; ++i) chosen[i] = {edge1[i], edge2[i]};
                        return make_witness(chosen);
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// Exhaustive enumeration over per-part vertex subsets; only viable for tiny
// instances, which the budget enforces.
std::optional<BoxWitness> subset_scan(const Hypergraph& h,
                                      std::span<const std::uint32_t> sizes,
                                      ProbeCounter& probes) {
    const std::size_t r = h.arity();
    std::vector<std::vector<std::uint32_t>> comb(r);
    for (std::size_t i = 0; i < r; ++i) {
        comb[i].resize(sizes[i]);
        for (std::uint32_t v = 0; v < sizes[i]; ++v) comb[i][v] = v;
    }

    // Advances comb[part] to the next k-subset of {0, ..., n-1} in
    // lexicographic order; false once exhausted.
    auto next_combination = [&h, sizes](std::vector<std::uint32_t>& c,
                                        std::size_t part) -> bool {
        const auto n = static_cast<std::uint32_t>(h.part_size(part));
        const std::uint32_t k = sizes[part];
        std::uint32_t i = k;
        while (i > 0) {
            --i;
            if (c[i] < n - (k - i)) {
                ++c[i];
                for (std::uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    auto box_present = [&](const std::vector<std::vector<std::uint32_t>>& chosen) -> bool {
        std::vector<std::size_t> sel(r, 0);
        std::vector<std::uint32_t> tuple(r);
        while (true) {
            for (std::size_t i = 0; i < r; ++i) tuple[i] = chosen[i][sel[i]];
            probes.charge();
            if (!h.contains(tuple)) return false;
            std::size_t i = r;
            while (i > 0) {
                --i;
                if (++sel[i] < chosen[i].size()) break;
                sel[i] = 0;
                if (i == 0) return true;
            }
        }
    };

    // Odometer over the per-part combinations, leftmost part slowest.
    while (true) {
        if (box_present(comb)) return make_witness(comb);
        std::size_t part = r;
        bool done = true;
        while (part > 0) {
            --part;
            if (next_combination(comb[part], part)) { done = false; break; }
            for (std::uint32_t v = 0; v < sizes[part]; ++v) comb[part][v] = v;
        }
        if (done) return std::nullopt;
    }
}

}  // namespace

std::optional<BoxWitness> find_complete_rpartite(const Hypergraph& h,
                                                 std::span<const std::uint32_t> sizes,
                                                 std::uint64_t membership_budget) {
    const std::size_t r = h.arity();
    if (sizes.size() != r) throw std::invalid_argument("sizes arity mismatch");
    std::uint64_t box_edges = 1;
    bool all_two = true;
    for (std::size_t i = 0; i < r; ++i) {
        if (sizes[i] < 1 || sizes[i] > h.part_size(i)) {
            throw std::invalid_argument("requested part size out of range");
        }
        box_edges *= sizes[i];
        if (sizes[i] != 2) all_two = false;
    }
    if (h.num_edges() < box_edges) return std::nullopt;

    ProbeCounter probes(membership_budget);
    return all_two ? pair_scan(h, probes) : subset_scan(h, sizes, probes);
}

}  // namespace boxfree
