#include "orcml/curvature.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orcml {

namespace {

constexpr double kInfCost = 1e18;

/// Transportation problem via successive shortest paths. Masses are scaled
/// to integer units (lcm of support sizes), so the optimum is exact.
double transport_cost(std::size_t n_src, std::size_t n_snk,
                      const std::vector<std::vector<double>>& cost) {
    const std::uint64_t units = std::lcm<std::uint64_t>(n_src, n_snk);
    std::vector<std::uint64_t> supply(n_src, units / n_src);
    std::vector<std::uint64_t> demand(n_snk, units / n_snk);
    // flow[i][j] in integer units
    std::vector<std::vector<std::uint64_t>> flow(
        n_src, std::vector<std::uint64_t>(n_snk, 0));

    const std::size_t n_nodes = n_src + n_snk;
    std::vector<double> dist(n_nodes);
    std::vector<int> prev(n_nodes);

    std::uint64_t remaining = units;
    while (remaining > 0) {
        // Bellman-Ford over the residual graph; instances are tiny.
        std::fill(dist.begin(), dist.end(), kInfCost * 2);
        std::fill(prev.begin(), prev.end(), -1);
        for (std::size_t i = 0; i < n_src; ++i)
            if (supply[i] > 0) dist[i] = 0.0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < n_src; ++i) {
                for (std::size_t j = 0; j < n_snk; ++j) {
                    const std::size_t js = n_src + j;
                    if (dist[i] + cost[i][j] < dist[js] - 1e-15) {
                        dist[js] = dist[i] + cost[i][j];
                        prev[js] = static_cast<int>(i);
                        changed = true;
                    }
                    if (flow[i][j] > 0 && dist[js] - cost[i][j] < dist[i] - 1e-15) {
                        dist[i] = dist[js] - cost[i][j];
                        prev[i] = static_cast<int>(js);
                        changed = true;
                    }
                }
            }
        }
        // cheapest reachable sink with remaining demand
        int best = -1;
        for (std::size_t j = 0; j < n_snk; ++j) {
            if (demand[j] == 0) continue;
            const std::size_t js = n_src + j;
            if (best < 0 || dist[js] < dist[static_cast<std::size_t>(best)])
                best = static_cast<int>(js);
        }
        // trace back to find the bottleneck
        std::uint64_t push = remaining;
        {
            int node = best;
            while (prev[node] >= 0) {
                const int p = prev[node];
                if (node >= static_cast<int>(n_src)) {
                    // nothing: forward arcs are uncapacitated
                } else {
                    const std::size_t i = static_cast<std::size_t>(node);
                    const std::size_t j = static_cast<std::size_t>(p) - n_src;
                    push = std::min(push, flow[i][j]);
                }
                node = p;
            }
            const std::size_t snk = static_cast<std::size_t>(best) - n_src;
            push = std::min(push, demand[snk]);
            push = std::min(push, supply[static_cast<std::size_t>(node)]);
        }
        // apply
        {
            int node = best;
            while (prev[node] >= 0) {
                const int p = prev[node];
                if (node >= static_cast<int>(n_src)) {
                    const std::size_t i = static_cast<std::size_t>(p);
                    const std::size_t j = static_cast<std::size_t>(node) - n_src;
                    flow[i][j] += push;
                } else {
                    const std::size_t i = static_cast<std::size_t>(node);
                    const std::size_t j = static_cast<std::size_t>(p) - n_src;
                    flow[i][j] -= push;
                }
                node = p;
            }
            const std::size_t snk = static_cast<std::size_t>(best) - n_src;
            demand[snk] -= push;
            supply[static_cast<std::size_t>(node)] -= push;
            remaining -= push;
        }
    }

    double total = 0.0;
    for (std::size_t i = 0; i < n_src; ++i)
        for (std::size_t j = 0; j < n_snk; ++j)
            if (flow[i][j] > 0)
                total += static_cast<double>(flow[i][j]) * cost[i][j];
    return total / static_cast<double>(units);
}

/// Scratch buffers for the per-edge unit-metric BFS.
struct OrcWorkspace {
    std::vector<int> dist;         // -1 = untouched
    std::vector<Vertex> touched;
    std::vector<Vertex> frontier, next;

    explicit OrcWorkspace(std::size_t n) : dist(n, -1) {}

    /// Unit shortest-path distances from source, truncated at max_depth.
    void bfs(const NeighborGraph& graph, Vertex source, int max_depth) {
        for (Vertex v : touched) dist[v] = -1;
        touched.clear();
        dist[source] = 0;
        touched.push_back(source);
        frontier.assign(1, source);
        for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
            next.clear();
            for (Vertex v : frontier) {
                for (const auto& [w, weight] : graph.neighbors(v)) {
                    (void)weight;
                    if (dist[w] < 0) {
                        dist[w] = depth + 1;
                        touched.push_back(w);
                        next.push_back(w);
                    }
                }
            }
            std::swap(frontier, next);
        }
    }
};

double orc_edge_impl(const NeighborGraph& graph, Vertex x, Vertex y,
                     OrcWorkspace& ws) {
    NeighborMeasure mu, nu;
    for (const auto& [w, weight] : graph.neighbors(x)) {
        (void)weight;
        if (w != y) mu.atoms.push_back(w);
    }
    for (const auto& [w, weight] : graph.neighbors(y)) {
        (void)weight;
        if (w != x) nu.atoms.push_back(w);
    }
    if (mu.atoms.empty() || nu.atoms.empty()) return kIndeterminate;

    // With (x,y) present, d(a,b) <= 3 for a in N(x), b in N(y).
    std::vector<std::vector<double>> ground(
        mu.atoms.size(), std::vector<double>(nu.atoms.size(), kInfCost));
    for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
        ws.bfs(graph, mu.atoms[i], 3);
        for (std::size_t j = 0; j < nu.atoms.size(); ++j) {
            const int d = ws.dist[nu.atoms[j]];
            if (d >= 0) ground[i][j] = static_cast<double>(d);
        }
    }
    const double w1 = transport_cost(mu.atoms.size(), nu.atoms.size(), ground);
    if (w1 >= kInfCost / 2) return -2.0;  // disconnected supports
    const double kappa = 1.0 - w1;       // unit metric: d_G(x,y) = 1
    return std::max(kappa, -2.0);
}

}  // namespace

double wasserstein1(const NeighborMeasure& mu, const NeighborMeasure& nu,
                    const std::vector<std::vector<double>>& ground) {
    if (mu.atoms.empty() || nu.atoms.empty())
        throw InvalidConfig("wasserstein1: empty support");
    return transport_cost(mu.atoms.size(), nu.atoms.size(), ground);
}

double orc_edge(const NeighborGraph& graph, Vertex x, Vertex y) {
    OrcWorkspace ws(graph.n_vertices());
    return orc_edge_impl(graph, x, y, ws);
}

CurvatureMap orc_all(const NeighborGraph& graph) {
    const auto& edges = graph.edges();
    CurvatureMap map;
    map.kappa.resize(edges.size());
#pragma omp parallel
    {
        OrcWorkspace ws(graph.n_vertices());
#pragma omp for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(edges.size()); ++i) {
            const auto idx = static_cast<std::size_t>(i);
            map.kappa[idx] = orc_edge_impl(graph, edges[idx].u, edges[idx].v, ws);
        }
    }
    return map;
}

CurvatureMap orc_all_serial(const NeighborGraph& graph) {
    const auto& edges = graph.edges();
    CurvatureMap map;
    map.kappa.resize(edges.size());
    OrcWorkspace ws(graph.n_vertices());
    for (std::size_t i = 0; i < edges.size(); ++i)
        map.kappa[i] = orc_edge_impl(graph, edges[i].u, edges[i].v, ws);
    return map;
}

}  // namespace orcml
