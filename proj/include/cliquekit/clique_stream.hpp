#ifndef CLIQUEKIT_CLIQUE_STREAM_HPP
#define CLIQUEKIT_CLIQUE_STREAM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cliquekit/bitset.hpp"
#include "cliquekit/graph.hpp"
#include "cliquekit/search.hpp"

namespace cliquekit {

/// Lazy producer of all cliques of a fixed size k. Each pull resumes a
/// suspended depth-first search and stops as soon as the next clique is
/// found, so no work happens beyond the requested clique.
///
/// The suspension is an explicit stack of candidate-bitset frames plus the
/// chosen path, not a coroutine. Enumeration uses the same least-member
/// canonical order as the maximum-clique search: every clique is grown from
/// its first member under the ascending (degree, id) order, hence emitted
/// exactly once.
class CliqueStream {
public:
    CliqueStream(const Graph& g, std::size_t k)
        : g_(&g), k_(k), order_(detail::search_order(g)) {
        if (k < 1) throw std::invalid_argument("clique stream: size must be >= 1");
        if (k > g.vertex_count()) cursor_ = order_.size();  // immediately empty
    }

    std::size_t clique_size() const { return k_; }

    /// Next clique as sorted external labels, or nullopt at end of stream.
    std::optional<std::vector<vertex_label>> next() {
        if (k_ == 1) {
            if (cursor_ >= order_.size()) return std::nullopt;
            return labels_for({});  // the start vertex alone; cursor_ advanced inside
        }
        while (true) {
            if (!in_start_) {
                if (!open_next_start()) return std::nullopt;
            }
            const std::size_t depth = path_.size();
            VertexBitset& frame = frames_[depth];
            if (frame.empty() || 1 + depth + frame.count() < k_) {
                if (depth == 0) {
                    in_start_ = false;
                    ++cursor_;
                } else {
                    path_.pop_back();
                }
                continue;
            }
            const std::size_t u = frame.first();
            frame.remove(u);
            if (1 + depth + 1 == k_) return labels_for_member(u);
            frames_[depth + 1].assign_intersection(frame, local_adj_[u]);
            path_.push_back(static_cast<std::uint32_t>(u));
        }
    }

private:
    // Positions the stream on the next start vertex whose filtered
    // neighborhood can still host a k-clique, building its local adjacency.
    bool open_next_start() {
        for (; cursor_ < order_.size(); ++cursor_) {
            const vertex_id v = order_[cursor_];
            members_.clear();
            for (vertex_id u : g_->neighbors(v))
                if (before(v, u)) members_.push_back(u);
            const std::size_t m = members_.size();
            if (m + 1 < k_) continue;

            std::sort(members_.begin(), members_.end(),
                      [this](vertex_id a, vertex_id b) { return before(a, b); });
            if (local_index_.size() < g_->vertex_count())
                local_index_.assign(g_->vertex_count(), unset);
            for (std::size_t i = 0; i < m; ++i)
                local_index_[members_[i]] = static_cast<std::uint32_t>(i);

            local_adj_.clear();
            local_adj_.reserve(m);
            for (std::size_t i = 0; i < m; ++i) local_adj_.emplace_back(m);
            frames_.assign(k_ - 1, VertexBitset(m));
            for (std::size_t i = 0; i < m; ++i) {
                for (vertex_id u : g_->neighbors(members_[i])) {
                    const std::uint32_t li = local_index_[u];
                    if (li != unset) local_adj_[i].insert(li);
                }
                frames_[0].insert(i);
            }
            for (vertex_id u : members_) local_index_[u] = unset;

            path_.clear();
            in_start_ = true;
            return true;
        }
        return false;
    }

    std::vector<vertex_label> labels_for(std::initializer_list<std::size_t> extra_locals) {
        std::vector<vertex_label> labels;
        labels.push_back(g_->label(order_[cursor_]));
        for (std::uint32_t i : path_) labels.push_back(g_->label(members_[i]));
        for (std::size_t i : extra_locals) labels.push_back(g_->label(members_[i]));
        std::sort(labels.begin(), labels.end());
        if (k_ == 1) ++cursor_;
        return labels;
    }

    std::optional<std::vector<vertex_label>> labels_for_member(std::size_t u) {
        return labels_for({u});
    }

    bool before(vertex_id a, vertex_id b) const {
        const std::size_t da = g_->degree(a);
        const std::size_t db = g_->degree(b);
        return da != db ? da < db : a < b;
    }

    static constexpr std::uint32_t unset = 0xFFFFFFFFu;

    const Graph* g_;
    std::size_t k_;
    std::vector<vertex_id> order_;
    std::size_t cursor_ = 0;
    bool in_start_ = false;
    std::vector<std::uint32_t> local_index_;
    std::vector<vertex_id> members_;       // C(v) in ascending (degree, id) order
    std::vector<VertexBitset> local_adj_;  // adjacency among members_
    std::vector<VertexBitset> frames_;     // frames_[d]: candidates not yet tried at depth d
    std::vector<std::uint32_t> path_;      // chosen local indices, one per open depth
};

/// All cliques of exactly k vertices, discovered incrementally on demand.
inline CliqueStream all_cliques(const Graph& g, std::size_t k) { return CliqueStream(g, k); }

}  // namespace cliquekit

#endif
