#ifndef CLIQUEKIT_GRAPH_HPP
#define CLIQUEKIT_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cliquekit {

/// Dense 0-based vertex identifier used everywhere inside the library.
using vertex_id = std::uint32_t;

/// External vertex identifier as it appeared in the input (1-based MTX
/// indices, SNAP node ids, ...). Preserved for all user-facing output.
using vertex_label = std::int64_t;

struct EdgeRecord {
    vertex_label u;
    vertex_label v;

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Immutable undirected simple graph in compressed sparse adjacency form.
///
/// Neighbor lists are sorted ascending by internal ID, adjacency is
/// symmetric, and there are no self-loops or duplicate entries. Instances
/// are safe to share across threads after construction.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const { return labels_.size(); }

    /// Undirected edges, each counted once.
    std::size_t edge_count() const { return n_edges_; }

    std::size_t degree(vertex_id v) const {
        check_vertex(v);
        return offsets_[v + 1] - offsets_[v];
    }

    std::span<const vertex_id> neighbors(vertex_id v) const {
        check_vertex(v);
        return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    vertex_label label(vertex_id v) const {
        check_vertex(v);
        return labels_[v];
    }

    std::span<const vertex_label> labels() const { return labels_; }

    std::optional<vertex_id> find_vertex(vertex_label label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool adjacent(vertex_id u, vertex_id v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        if (degree(u) > degree(v)) std::swap(u, v);
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::size_t max_degree() const {
        std::size_t best = 0;
        for (vertex_id v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
        return best;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_ &&
               a.labels_ == b.labels_ && a.n_edges_ == b.n_edges_;
    }

    friend Graph build_graph(std::span<const EdgeRecord> edges,
                             std::span<const vertex_label> universe);

private:
    void check_vertex(vertex_id v) const {
        if (v >= labels_.size())
            throw std::out_of_range("graph: vertex id " + std::to_string(v) +
                                    " outside range [0, " + std::to_string(labels_.size()) + ")");
    }

    std::vector<std::size_t> offsets_;   // size n+1
    std::vector<vertex_id> adjacency_;   // size 2*n_edges, sorted per vertex
    std::vector<vertex_label> labels_;   // internal id -> external label
    std::unordered_map<vertex_label, vertex_id> index_;
    std::size_t n_edges_ = 0;
};

/// Builds a Graph from raw edge records. Self-loops are dropped, duplicates
/// (including reversed orientations) are merged, and adjacency is
/// symmetrized. Internal IDs are assigned 0..n-1 in first-seen order:
/// labels from `universe` first, then labels in order of appearance in the
/// edge list (u before v within a record).
inline Graph build_graph(std::span<const EdgeRecord> edges,
                         std::span<const vertex_label> universe) {
    Graph g;
    constexpr std::size_t id_limit = std::numeric_limits<vertex_id>::max();

    auto intern = [&g](vertex_label label) -> vertex_id {
        auto [it, inserted] = g.index_.try_emplace(label, static_cast<vertex_id>(g.labels_.size()));
        if (inserted) {
            if (g.labels_.size() >= id_limit)
                throw std::length_error("graph: vertex count exceeds the 32-bit id range");
            g.labels_.push_back(label);
        }
        return it->second;
    };

    for (vertex_label label : universe) intern(label);

    std::vector<std::pair<vertex_id, vertex_id>> pairs;
    pairs.reserve(edges.size());
    for (const EdgeRecord& e : edges) {
        const vertex_id a = intern(e.u);
        const vertex_id b = intern(e.v);
        if (a == b) continue;  // self-loop
        pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    const std::size_t n = g.labels_.size();
    g.n_edges_ = pairs.size();
    g.offsets_.assign(n + 1, 0);
    for (const auto& [a, b] : pairs) {
        ++g.offsets_[a + 1];
        ++g.offsets_[b + 1];
    }
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.adjacency_.resize(2 * pairs.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [a, b] : pairs) {
        g.adjacency_[cursor[a]++] = b;
        g.adjacency_[cursor[b]++] = a;
    }
    // Each neighbor list comes out ascending: the pass runs over
    // (min,max)-sorted pairs, and for any vertex all lower endpoints are
    // appended before all higher ones.
    return g;
}

inline Graph build_graph(std::span<const EdgeRecord> edges) {
    return build_graph(edges, std::span<const vertex_label>{});
}

inline Graph build_graph(std::initializer_list<EdgeRecord> edges) {
    return build_graph(std::span<const EdgeRecord>(edges.begin(), edges.size()));
}

}  // namespace cliquekit

#endif
