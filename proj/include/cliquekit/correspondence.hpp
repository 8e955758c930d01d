#ifndef CLIQUEKIT_CORRESPONDENCE_HPP
#define CLIQUEKIT_CORRESPONDENCE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliquekit/graph.hpp"

namespace cliquekit {

struct CorrespondencePair {
    std::size_t p_index;
    std::size_t q_index;

    friend bool operator==(const CorrespondencePair&, const CorrespondencePair&) = default;
};

/// Graph over the product of two element sets P (size M) and Q (size N).
/// Vertex (i, j) has id i*N + j; a clique decodes to a pairwise-consistent
/// partial mapping between P and Q.
class CorrespondenceGraph {
public:
    CorrespondenceGraph(Graph graph, std::size_t set_p_size, std::size_t set_q_size)
        : graph_(std::move(graph)), m_(set_p_size), n_(set_q_size) {}

    const Graph& graph() const { return graph_; }
    std::size_t set_p_size() const { return m_; }
    std::size_t set_q_size() const { return n_; }

    vertex_id encode(std::size_t i, std::size_t j) const {
        if (i >= m_ || j >= n_)
            throw std::out_of_range("correspondence: index pair (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside " + std::to_string(m_) + "x" +
                                    std::to_string(n_));
        return static_cast<vertex_id>(i * n_ + j);
    }

    CorrespondencePair decode(vertex_id v) const {
        if (v >= graph_.vertex_count())
            throw std::out_of_range("correspondence: vertex id out of range");
        return {v / n_, v % n_};
    }

private:
    Graph graph_;
    std::size_t m_;
    std::size_t n_;
};

/// Element-set sizes plus the edge-condition predicate. The predicate is
/// only ever invoked with i1 != i2 and j1 != j2 (and with i1 < i2); the
/// builder enforces the side conditions itself. Element access happens
/// inside the predicate. Symmetry of the condition is the caller's
/// responsibility, and the predicate must tolerate concurrent invocation.
struct CorrespondenceSpec {
    std::size_t set_p_size;
    std::size_t set_q_size;
    std::function<bool(std::size_t i1, std::size_t i2, std::size_t j1, std::size_t j2)> condition;
};

/// Distance functions over element indices plus the matching tolerance.
/// Both metrics are expected to be symmetric and nonnegative.
struct MetricPair {
    std::function<double(std::size_t, std::size_t)> distance_p;
    std::function<double(std::size_t, std::size_t)> distance_q;
    double epsilon = 0.0;
};

using PointSet = std::vector<std::vector<double>>;

/// Builds the correspondence graph on V = P x Q with an edge between
/// (i1, j1) and (i2, j2) iff i1 != i2, j1 != j2 and the condition holds.
/// The condition is evaluated once per unordered vertex pair, with i1 < i2.
template <typename Condition>
CorrespondenceGraph build_correspondence(std::size_t m, std::size_t n, Condition&& condition) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("correspondence: element sets must be nonempty");
    constexpr std::size_t id_limit = std::numeric_limits<vertex_id>::max();
    if (m > id_limit / n)
        throw std::length_error("correspondence: M*N exceeds the vertex id range");

    const std::size_t total = m * n;
    std::vector<EdgeRecord> edges;
    for (std::size_t v1 = 0; v1 < total; ++v1) {
        const std::size_t i1 = v1 / n;
        const std::size_t j1 = v1 % n;
        for (std::size_t v2 = v1 + 1; v2 < total; ++v2) {
            const std::size_t i2 = v2 / n;
            const std::size_t j2 = v2 % n;
            if (i1 == i2 || j1 == j2) continue;
            if (condition(i1, i2, j1, j2))
                edges.push_back({static_cast<vertex_label>(v1), static_cast<vertex_label>(v2)});
        }
    }
    std::vector<vertex_label> universe(total);
    std::iota(universe.begin(), universe.end(), vertex_label{0});
    return CorrespondenceGraph(build_graph(edges, universe), m, n);
}

inline CorrespondenceGraph build_correspondence(const CorrespondenceSpec& spec) {
    if (!spec.condition) throw std::invalid_argument("correspondence: condition is empty");
    return build_correspondence(spec.set_p_size, spec.set_q_size, spec.condition);
}

/// Metric specialization: edge iff |d_P(i1,i2) - d_Q(j1,j2)| <= epsilon.
/// Distances are tabulated up front so each is computed once.
inline CorrespondenceGraph build_correspondence_metric(std::size_t m, std::size_t n,
                                                       const MetricPair& metric) {
    if (metric.epsilon < 0)
        throw std::invalid_argument("correspondence: epsilon must be nonnegative");
    if (!metric.distance_p || !metric.distance_q)
        throw std::invalid_argument("correspondence: both metrics are required");

    auto tabulate = [](std::size_t count, const std::function<double(std::size_t, std::size_t)>& d) {
        std::vector<double> table(count * count, 0.0);
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = a + 1; b < count; ++b)
                table[a * count + b] = table[b * count + a] = d(a, b);
        return table;
    };
    const std::vector<double> dp = tabulate(m, metric.distance_p);
    const std::vector<double> dq = tabulate(n, metric.distance_q);
    const double eps = metric.epsilon;
    return build_correspondence(m, n, [&](std::size_t i1, std::size_t i2, std::size_t j1,
                                          std::size_t j2) {
        return std::abs(dp[i1 * m + i2] - dq[j1 * n + j2]) <= eps;
    });
}

inline double euclidean_distance(const PointSet& points, std::size_t a, std::size_t b) {
    double sum = 0.0;
    for (std::size_t d = 0; d < points[a].size(); ++d) {
        const double diff = points[a][d] - points[b][d];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

namespace detail {

inline void check_point_set(const PointSet& points, const char* name) {
    if (points.empty()) throw std::invalid_argument(std::string("correspondence: point set ") +
                                                    name + " is empty");
    for (const auto& row : points)
        if (row.size() != points.front().size())
            throw std::invalid_argument(std::string("correspondence: point set ") + name +
                                        " has rows of mixed dimension");
}

}  // namespace detail

/// Point-cloud specialization with Euclidean metrics on both sides.
inline CorrespondenceGraph build_correspondence_metric(const PointSet& p, const PointSet& q,
                                                       double epsilon) {
    detail::check_point_set(p, "P");
    detail::check_point_set(q, "Q");
    if (p.front().size() != q.front().size())
        throw std::invalid_argument("correspondence: point sets have different dimensions");
    MetricPair metric{
        [&p](std::size_t a, std::size_t b) { return euclidean_distance(p, a, b); },
        [&q](std::size_t a, std::size_t b) { return euclidean_distance(q, a, b); },
        epsilon,
    };
    return build_correspondence_metric(p.size(), q.size(), metric);
}

/// Decodes a clique of the correspondence graph into (P-index, Q-index)
/// pairs sorted by P-index. The input must be a clique; the decoded pairs
/// are injective in both coordinates by construction, which is re-checked.
inline std::vector<CorrespondencePair> extract_correspondence(
    const CorrespondenceGraph& cg, std::span<const vertex_label> clique) {
    const Graph& g = cg.graph();
    std::vector<vertex_id> ids;
    ids.reserve(clique.size());
    for (vertex_label label : clique) {
        const auto v = g.find_vertex(label);
        if (!v)
            throw std::invalid_argument("correspondence: unknown vertex label " +
                                        std::to_string(label));
        ids.push_back(*v);
    }
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (!g.adjacent(ids[i], ids[j]))
                throw std::invalid_argument("correspondence: input is not a clique");

    std::vector<CorrespondencePair> pairs;
    pairs.reserve(ids.size());
    for (vertex_id v : ids) pairs.push_back(cg.decode(v));
    std::sort(pairs.begin(), pairs.end(), [](const CorrespondencePair& a,
                                             const CorrespondencePair& b) {
        return a.p_index < b.p_index;
    });
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].p_index == pairs[i - 1].p_index)
            throw std::logic_error("correspondence: clique decoded to a repeated P-index");
    std::vector<std::size_t> qs;
    for (const auto& pr : pairs) qs.push_back(pr.q_index);
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end())
        throw std::logic_error("correspondence: clique decoded to a repeated Q-index");
    return pairs;
}

inline std::vector<CorrespondencePair> extract_correspondence(
    const CorrespondenceGraph& cg, std::initializer_list<vertex_label> clique) {
    return extract_correspondence(cg,
                                  std::span<const vertex_label>(clique.begin(), clique.size()));
}

/// Composes an edge condition with a per-element candidate restriction:
/// the result holds iff the base condition holds and j1 is among the first
/// k ranked matches of i1, and j2 among the first k of i2.
template <typename Condition>
auto top_k_filter(Condition base, const std::vector<std::vector<std::size_t>>& ranked_matches,
                  std::size_t k) {
    if (k < 1) throw std::invalid_argument("top_k_filter: k must be >= 1");
    auto allowed = std::make_shared<std::vector<std::vector<std::size_t>>>();
    allowed->reserve(ranked_matches.size());
    for (const auto& row : ranked_matches) {
        std::vector<std::size_t> top(row.begin(),
                                     row.begin() + static_cast<std::ptrdiff_t>(
                                                       std::min(k, row.size())));
        std::sort(top.begin(), top.end());
        allowed->push_back(std::move(top));
    }
    return [base = std::move(base), allowed](std::size_t i1, std::size_t i2, std::size_t j1,
                                             std::size_t j2) -> bool {
        const auto& a1 = allowed->at(i1);
        const auto& a2 = allowed->at(i2);
        return std::binary_search(a1.begin(), a1.end(), j1) &&
               std::binary_search(a2.begin(), a2.end(), j2) && base(i1, i2, j1, j2);
    };
}

}  // namespace cliquekit

#endif
