#ifndef CLIQUEKIT_ISOMORPHISM_HPP
#define CLIQUEKIT_ISOMORPHISM_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliquekit/correspondence.hpp"
#include "cliquekit/graph.hpp"
#include "cliquekit/search.hpp"

namespace cliquekit {

/// Partial or full embedding of G_Q into G_P, as (Q-vertex, P-vertex) label
/// pairs, injective in both coordinates.
struct IsoResult {
    std::vector<std::pair<vertex_label, vertex_label>> mapping;
    bool is_full = false;      ///< |mapping| == |V(G_Q)|
    bool search_done = false;  ///< false when the clique search was cut off by its time limit
};

/// Association-graph construction for subgraph isomorphism: vertices are
/// (P-vertex, Q-vertex) pairs, and by default an edge requires
/// (j1,j2) in E_Q  =>  (i1,i2) in E_P, so a full-size clique certifies an
/// edge-preserving (not necessarily induced) injection of G_Q into G_P.
/// With strict=true the condition is the biconditional and the certificate
/// is an induced-subgraph isomorphism.
inline CorrespondenceGraph build_iso_graph(const Graph& g_p, const Graph& g_q,
                                           bool strict = false) {
    if (g_p.vertex_count() == 0 || g_q.vertex_count() == 0)
        throw std::invalid_argument("iso graph: both graphs must be nonempty");
    const std::size_t m = g_p.vertex_count();
    const std::size_t n = g_q.vertex_count();
    return build_correspondence(m, n, [&g_p, &g_q, strict](std::size_t i1, std::size_t i2,
                                                           std::size_t j1, std::size_t j2) {
        const bool in_q = g_q.adjacent(static_cast<vertex_id>(j1), static_cast<vertex_id>(j2));
        const bool in_p = g_p.adjacent(static_cast<vertex_id>(i1), static_cast<vertex_id>(i2));
        return strict ? in_q == in_p : (!in_q || in_p);
    });
}

/// Runs the maximum-clique search over the association graph and decodes
/// the clique into a vertex mapping. A time-limited, unfinished search can
/// return is_full=false without proving non-isomorphism; only
/// search_done=true makes the negative answer conclusive.
inline IsoResult find_subgraph_isomorphism(const Graph& g_p, const Graph& g_q,
                                           const SearchParams& params = {}, bool strict = false) {
    const CorrespondenceGraph cg = build_iso_graph(g_p, g_q, strict);
    SearchState state;
    const auto clique = get_max_clique(cg.graph(), params, state);

    IsoResult result;
    result.search_done = state.search_done;
    if (!clique) return result;

    const auto pairs = extract_correspondence(cg, *clique);
    result.mapping.reserve(pairs.size());
    for (const CorrespondencePair& pr : pairs)
        result.mapping.emplace_back(g_q.label(static_cast<vertex_id>(pr.q_index)),
                                    g_p.label(static_cast<vertex_id>(pr.p_index)));
    std::sort(result.mapping.begin(), result.mapping.end());
    result.is_full = result.mapping.size() == g_q.vertex_count();
    return result;
}

}  // namespace cliquekit

#endif
