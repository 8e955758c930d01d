#ifndef CLIQUEKIT_SEARCH_HPP
#define CLIQUEKIT_SEARCH_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliquekit/bitset.hpp"
#include "cliquekit/graph.hpp"

namespace cliquekit {

/// Default upper bound, meaning "no cap on clique size".
inline constexpr std::size_t no_upper_bound = 0xFFFFFFFFull;  // 2^32 - 1

struct SearchParams {
    std::size_t lower_bound = 1;
    std::size_t upper_bound = no_upper_bound;
    double time_limit = 1.0;  ///< seconds of budget per call; 0 = unlimited
    bool use_heuristic = false;
    bool use_dfs = true;
    bool continue_search = false;
};

/// Resumable search position. `best_clique` holds internal vertex ids and is
/// always a valid clique of the graph it was produced from. A state is
/// single-owner; distinct states over the same Graph may run in parallel.
struct SearchState {
    std::size_t cursor = 0;  ///< index of the next start vertex in processing order
    std::vector<vertex_id> best_clique;
    bool search_done = false;
    double elapsed = 0.0;  ///< accumulated search seconds, informational
};

inline void reset_search(SearchState& state) {
    state.cursor = 0;
    state.best_clique.clear();
    state.search_done = false;
    state.elapsed = 0.0;
}

namespace detail {

using steady_clock = std::chrono::steady_clock;

struct Deadline {
    bool limited = false;
    steady_clock::time_point at{};

    static Deadline after(double seconds, steady_clock::time_point from) {
        Deadline d;
        if (seconds > 0) {
            d.limited = true;
            d.at = from + std::chrono::duration_cast<steady_clock::duration>(
                              std::chrono::duration<double>(seconds));
        }
        return d;
    }

    bool passed() const { return limited && steady_clock::now() >= at; }
};

/// Start vertices in ascending (degree, id) order. With candidate sets
/// filtered to strictly-later vertices under the same order, every clique is
/// reachable from exactly one start: its least member.
inline std::vector<vertex_id> search_order(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<vertex_id> order(n);
    if (n == 0) return order;
    const std::size_t max_deg = g.max_degree();
    std::vector<std::size_t> offset(max_deg + 2, 0);
    for (vertex_id v = 0; v < n; ++v) ++offset[g.degree(v) + 1];
    for (std::size_t d = 1; d < offset.size(); ++d) offset[d] += offset[d - 1];
    for (vertex_id v = 0; v < n; ++v) order[offset[g.degree(v)]++] = v;
    return order;
}

enum class StartOutcome { completed, upper_bound_hit, out_of_time };

/// Branch-and-bound over one start vertex at a time. For a start v the
/// candidate set is C(v) = { u in N(v) : (degree(u), u) > (degree(v), v) };
/// the subsearch runs on bitsets over a local index space of size |C(v)|,
/// and any branch with |current| + |candidates| <= |best| is pruned.
class MaxCliqueEngine {
public:
    MaxCliqueEngine(const Graph& g, std::size_t upper_bound, Deadline deadline)
        : g_(g),
          upper_bound_(upper_bound),
          deadline_(deadline),
          local_index_(g.vertex_count(), unset) {}

    StartOutcome run_start(vertex_id v, std::vector<vertex_id>& best) {
        v_ = v;
        members_.clear();
        for (vertex_id u : g_.neighbors(v))
            if (before(v, u)) members_.push_back(u);

        if (best.empty()) best.assign(1, v);
        if (best.size() >= upper_bound_) return StartOutcome::upper_bound_hit;

        const std::size_t m = members_.size();
        if (m + 1 <= best.size()) return StartOutcome::completed;

        std::sort(members_.begin(), members_.end(),
                  [this](vertex_id a, vertex_id b) { return before(a, b); });
        for (std::size_t i = 0; i < m; ++i) local_index_[members_[i]] = static_cast<std::uint32_t>(i);

        local_adj_.clear();
        local_adj_.reserve(m);
        for (std::size_t i = 0; i < m; ++i) local_adj_.emplace_back(m);
        if (depth_cand_.empty()) depth_cand_.resize(1);
        if (depth_cand_[0].capacity() != m)
            depth_cand_[0] = VertexBitset(m);
        else
            depth_cand_[0].clear();
        for (std::size_t i = 0; i < m; ++i) {
            for (vertex_id u : g_.neighbors(members_[i])) {
                const std::uint32_t li = local_index_[u];
                if (li != unset) local_adj_[i].insert(li);
            }
            depth_cand_[0].insert(i);
        }
        path_.resize(m);

        const DfsResult result = dfs(0, best);

        for (vertex_id u : members_) local_index_[u] = unset;
        switch (result) {
            case DfsResult::upper_bound_hit: return StartOutcome::upper_bound_hit;
            case DfsResult::out_of_time: return StartOutcome::out_of_time;
            default: return StartOutcome::completed;
        }
    }

private:
    static constexpr std::uint32_t unset = 0xFFFFFFFFu;
    static constexpr std::uint64_t tick_mask = 0xFFFF;  // clock checked every 2^16 expansions

    enum class DfsResult { exhausted, upper_bound_hit, out_of_time };

    // Current clique is {v_} plus path_[0..depth); depth_cand_[depth] holds
    // the local ids adjacent to every current member and after
    // path_[depth-1] in local order, so each clique corresponds to exactly
    // one DFS path. The frame vector is always accessed through the index:
    // deeper levels may grow it, which moves the storage.
    DfsResult dfs(std::size_t depth, std::vector<vertex_id>& best) {
        while (true) {
            if ((++ticks_ & tick_mask) == 0 && deadline_.passed()) return DfsResult::out_of_time;
            const std::size_t remaining = depth_cand_[depth].count();
            if (remaining == 0) return DfsResult::exhausted;
            if (depth + 1 + remaining <= best.size()) return DfsResult::exhausted;
            const std::size_t u = depth_cand_[depth].first();
            depth_cand_[depth].remove(u);
            path_[depth] = static_cast<std::uint32_t>(u);
            if (depth + 2 > best.size()) record(depth + 1, best);
            if (depth + 2 >= upper_bound_) return DfsResult::upper_bound_hit;
            if (depth_cand_.size() <= depth + 1) depth_cand_.resize(depth + 2);
            if (depth_cand_[depth + 1].capacity() != depth_cand_[depth].capacity())
                depth_cand_[depth + 1] = VertexBitset(depth_cand_[depth].capacity());
            depth_cand_[depth + 1].assign_intersection(depth_cand_[depth], local_adj_[u]);
            const DfsResult r = dfs(depth + 1, best);
            if (r != DfsResult::exhausted) return r;
        }
    }

    void record(std::size_t member_count, std::vector<vertex_id>& best) {
        best.clear();
        best.reserve(member_count + 1);
        best.push_back(v_);
        for (std::size_t i = 0; i < member_count; ++i) best.push_back(members_[path_[i]]);
    }

    bool before(vertex_id a, vertex_id b) const {
        const std::size_t da = g_.degree(a);
        const std::size_t db = g_.degree(b);
        return da != db ? da < db : a < b;
    }

    const Graph& g_;
    std::size_t upper_bound_;
    Deadline deadline_;
    std::uint64_t ticks_ = 0;
    vertex_id v_ = 0;
    std::vector<std::uint32_t> local_index_;
    std::vector<vertex_id> members_;
    std::vector<VertexBitset> local_adj_;
    std::vector<VertexBitset> depth_cand_;
    std::vector<std::uint32_t> path_;
};

inline void validate_params(const SearchParams& params) {
    if (params.lower_bound < 1) throw std::invalid_argument("search: lower_bound must be >= 1");
    if (params.lower_bound > params.upper_bound)
        throw std::invalid_argument("search: lower_bound exceeds upper_bound");
    if (params.time_limit < 0) throw std::invalid_argument("search: time_limit must be nonnegative");
}

inline void validate_state(const Graph& g, const SearchState& state) {
    if (state.cursor > g.vertex_count())
        throw std::invalid_argument("search: state cursor outside this graph");
    for (vertex_id v : state.best_clique)
        if (v >= g.vertex_count())
            throw std::invalid_argument("search: state holds a vertex outside this graph");
    for (std::size_t i = 0; i < state.best_clique.size(); ++i)
        for (std::size_t j = i + 1; j < state.best_clique.size(); ++j)
            if (!g.adjacent(state.best_clique[i], state.best_clique[j]))
                throw std::invalid_argument("search: state best_clique is not a clique of this graph");
}

inline void run_max_clique_search(const Graph& g, const SearchParams& params, SearchState& state,
                                  Deadline deadline) {
    if (state.search_done) return;
    if (state.best_clique.size() >= params.upper_bound) {
        state.search_done = true;
        return;
    }
    const std::vector<vertex_id> order = search_order(g);
    MaxCliqueEngine engine(g, params.upper_bound, deadline);
    while (state.cursor < order.size()) {
        if (deadline.passed()) return;  // cursor stays at the first unprocessed start
        const vertex_id v = order[state.cursor];
        const std::size_t deg = g.degree(v);
        if (deg + 1 <= state.best_clique.size() || deg + 1 < params.lower_bound) {
            ++state.cursor;
            continue;
        }
        const StartOutcome outcome = engine.run_start(v, state.best_clique);
        if (outcome == StartOutcome::out_of_time) return;
        ++state.cursor;
        if (outcome == StartOutcome::upper_bound_hit) {
            state.search_done = true;
            return;
        }
    }
    state.search_done = true;
}

inline std::vector<vertex_id> heuristic_order(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<vertex_id> order(n);
    if (n == 0) return order;
    const std::size_t max_deg = g.max_degree();
    std::vector<std::size_t> offset(max_deg + 2, 0);
    for (vertex_id v = 0; v < n; ++v) ++offset[max_deg - g.degree(v) + 1];
    for (std::size_t d = 1; d < offset.size(); ++d) offset[d] += offset[d - 1];
    for (vertex_id v = 0; v < n; ++v) order[offset[max_deg - g.degree(v)]++] = v;
    return order;
}

/// Greedy clique construction. Start vertices are processed in descending
/// degree; each start grows by repeatedly absorbing the highest-degree
/// vertex still adjacent to every member (ties to the smallest id). Starts
/// that cannot beat the incumbent are skipped; growth stops at size_cap.
inline std::vector<vertex_id> heuristic_clique_ids(const Graph& g, std::size_t size_cap) {
    std::vector<vertex_id> best;
    const std::size_t n = g.vertex_count();
    if (n == 0 || size_cap == 0) return best;

    VertexBitset cand(n);
    VertexBitset scratch(n);
    std::vector<vertex_id> clique;
    for (vertex_id v : heuristic_order(g)) {
        if (g.degree(v) + 1 <= best.size()) continue;
        clique.assign(1, v);
        cand.clear();
        for (vertex_id u : g.neighbors(v)) cand.insert(u);
        while (clique.size() < size_cap) {
            bool found = false;
            std::size_t pick = 0;
            std::size_t pick_deg = 0;
            cand.for_each([&](std::size_t u) {
                const std::size_t d = g.degree(static_cast<vertex_id>(u));
                if (!found || d > pick_deg) {
                    found = true;
                    pick = u;
                    pick_deg = d;
                }
            });
            if (!found) break;
            clique.push_back(static_cast<vertex_id>(pick));
            scratch.clear();
            for (vertex_id u : g.neighbors(static_cast<vertex_id>(pick))) scratch.insert(u);
            cand.intersect_with(scratch);
        }
        if (clique.size() > best.size()) best = clique;
        if (best.size() >= size_cap) break;
    }
    return best;
}

inline std::vector<vertex_label> ids_to_sorted_labels(const Graph& g,
                                                      std::span<const vertex_id> ids) {
    std::vector<vertex_label> labels;
    labels.reserve(ids.size());
    for (vertex_id v : ids) labels.push_back(g.label(v));
    std::sort(labels.begin(), labels.end());
    return labels;
}

}  // namespace detail

/// Greedy heuristic clique, returned as sorted external labels. Fast and
/// always valid, but not necessarily maximum.
inline std::vector<vertex_label> heuristic_clique(const Graph& g) {
    const auto ids = detail::heuristic_clique_ids(g, std::numeric_limits<std::size_t>::max());
    return detail::ids_to_sorted_labels(g, ids);
}

/// Runs (or resumes) the branch-and-bound search, updating `state` in
/// place. Start vertices are processed in ascending (degree, id) order from
/// state.cursor. The clock is checked at every start vertex and every 2^16
/// DFS expansions; on expiry the call returns with search_done=false and
/// the cursor at the first unprocessed start vertex.
inline void max_clique_search(const Graph& g, const SearchParams& params, SearchState& state) {
    detail::validate_params(params);
    if (!params.continue_search) reset_search(state);
    detail::validate_state(g, state);
    const auto t0 = detail::steady_clock::now();
    detail::run_max_clique_search(g, params, state,
                                  detail::Deadline::after(params.time_limit, t0));
    state.elapsed += std::chrono::duration<double>(detail::steady_clock::now() - t0).count();
}

/// One-call search front end: optionally seeds the incumbent with the
/// heuristic, then runs the branch-and-bound if use_dfs is set. Returns the
/// best clique as sorted external labels, or nullopt when the completed or
/// interrupted search has not produced a clique of at least lower_bound
/// vertices.
inline std::optional<std::vector<vertex_label>> get_max_clique(const Graph& g,
                                                               const SearchParams& params,
                                                               SearchState& state) {
    detail::validate_params(params);
    if (!params.use_heuristic && !params.use_dfs)
        throw std::invalid_argument("search: at least one of use_heuristic/use_dfs must be set");
    if (!params.continue_search) reset_search(state);
    detail::validate_state(g, state);

    const auto t0 = detail::steady_clock::now();
    const detail::Deadline deadline = detail::Deadline::after(params.time_limit, t0);

    // The heuristic seeds a fresh search once; resumed calls skip it.
    if (params.use_heuristic && !state.search_done && state.cursor == 0 &&
        state.best_clique.empty()) {
        auto seed = detail::heuristic_clique_ids(g, params.upper_bound);
        if (seed.size() > state.best_clique.size()) state.best_clique = std::move(seed);
        if (state.best_clique.size() >= params.upper_bound) state.search_done = true;
    }
    if (params.use_dfs && !state.search_done)
        detail::run_max_clique_search(g, params, state, deadline);
    state.elapsed += std::chrono::duration<double>(detail::steady_clock::now() - t0).count();

    if (state.best_clique.size() < params.lower_bound) return std::nullopt;
    std::span<const vertex_id> ids = state.best_clique;
    if (ids.size() > params.upper_bound) ids = ids.subspan(0, params.upper_bound);
    return detail::ids_to_sorted_labels(g, ids);
}

inline std::optional<std::vector<vertex_label>> get_max_clique(const Graph& g,
                                                               const SearchParams& params = {}) {
    SearchState state;
    return get_max_clique(g, params, state);
}

/// True iff the labeled vertices are pairwise adjacent. Unknown labels are
/// a usage error.
inline bool verify_clique(const Graph& g, std::span<const vertex_label> members) {
    std::vector<vertex_id> ids;
    ids.reserve(members.size());
    for (vertex_label label : members) {
        const auto v = g.find_vertex(label);
        if (!v)
            throw std::invalid_argument("verify_clique: unknown label " + std::to_string(label));
        ids.push_back(*v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (!g.adjacent(ids[i], ids[j])) return false;
    return true;
}

inline bool verify_clique(const Graph& g, std::initializer_list<vertex_label> members) {
    return verify_clique(g, std::span<const vertex_label>(members.begin(), members.size()));
}

}  // namespace cliquekit

#endif
