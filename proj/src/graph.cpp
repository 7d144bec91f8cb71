#include "orcml/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace orcml {

NeighborGraph::NeighborGraph(std::size_t n_vertices, std::vector<Edge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u == e.v) throw InvalidConfig("self-loop in edge list");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw InvalidConfig("duplicate edge in edge list");
    }
    adjacency_.resize(n_vertices_);
    for (const auto& e : edges_) {
        adjacency_[e.u].emplace_back(e.v, e.weight);
        adjacency_[e.v].emplace_back(e.u, e.weight);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool NeighborGraph::has_edge(Vertex u, Vertex v) const {
    const auto& nbrs = adjacency_[u];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const auto& p, Vertex x) { return p.first < x; });
    return it != nbrs.end() && it->first == v;
}

namespace {

// Jitter for zero-length edges between duplicate points.
double edge_weight(double dist, Vertex u) {
    return dist > 0.0 ? dist : 1e-12 * static_cast<double>(u + 1);
}

}  // namespace

NeighborGraph build_knn_graph(const PointCloud& cloud, std::size_t k) {
    const std::size_t n = cloud.size();
    if (k < 1 || k >= n) throw InvalidConfig("build_knn_graph: need 1 <= k < n");

    std::set<std::pair<Vertex, Vertex>> edge_set;
    std::vector<std::pair<double, Vertex>> cand;
    cand.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        cand.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            cand.emplace_back(cloud.distance(i, j), static_cast<Vertex>(j));
        }
        // stable (distance, index) order so k-th ties resolve to lower index
        std::nth_element(cand.begin(), cand.begin() + k - 1, cand.end());
        std::sort(cand.begin(), cand.begin() + k);
        for (std::size_t j = 0; j < k; ++j) {
            const Vertex a = static_cast<Vertex>(i), b = cand[j].second;
            edge_set.insert({std::min(a, b), std::max(a, b)});
        }
    }
    std::vector<Edge> edges;
    edges.reserve(edge_set.size());
    for (const auto& [u, v] : edge_set)
        edges.push_back({u, v, edge_weight(cloud.distance(u, v), u)});
    return NeighborGraph(n, std::move(edges));
}

NeighborGraph build_eps_graph(const PointCloud& cloud, double eps) {
    if (eps <= 0.0) throw InvalidConfig("build_eps_graph: eps must be positive");
    const std::size_t n = cloud.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = cloud.distance(i, j);
            if (d <= eps)
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j),
                                 edge_weight(d, static_cast<Vertex>(i))});
        }
    }
    return NeighborGraph(n, std::move(edges));
}

DistanceResult shortest_path(const NeighborGraph& graph, Vertex source,
                             MetricMode mode) {
    const std::size_t n = graph.n_vertices();
    DistanceResult result{source, std::vector<double>(n, kInfDist)};
    result.dist[source] = 0.0;

    using Item = std::pair<double, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > result.dist[v]) continue;
        for (const auto& [w, weight] : graph.neighbors(v)) {
            const double step = mode == MetricMode::Unit ? 1.0 : weight;
            const double nd = d + step;
            if (nd < result.dist[w]) {
                result.dist[w] = nd;
                heap.push({nd, w});
            }
        }
    }
    return result;
}

double shortest_path_to(const NeighborGraph& graph, Vertex source, Vertex target,
                        MetricMode mode, double cutoff) {
    std::vector<double> dist(graph.n_vertices(), kInfDist);
    dist[source] = 0.0;
    using Item = std::pair<double, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) continue;
        if (v == target) return d;
        if (d > cutoff) break;
        for (const auto& [w, weight] : graph.neighbors(v)) {
            const double step = mode == MetricMode::Unit ? 1.0 : weight;
            const double nd = d + step;
            if (nd < dist[w]) {
                dist[w] = nd;
                heap.push({nd, w});
            }
        }
    }
    return dist[target] <= cutoff ? dist[target] : kInfDist;
}

namespace {

struct UnionFind {
    std::vector<Vertex> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), Vertex{0});
    }
    Vertex find(Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep smallest vertex as root
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::vector<std::size_t> kruskal_mst(const NeighborGraph& graph) {
    std::vector<std::size_t> order(graph.edges().size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto& edges = graph.edges();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(edges[a].weight, edges[a].u, edges[a].v) <
               std::tie(edges[b].weight, edges[b].u, edges[b].v);
    });
    UnionFind uf(graph.n_vertices());
    std::vector<std::size_t> tree;
    for (std::size_t idx : order)
        if (uf.unite(edges[idx].u, edges[idx].v)) tree.push_back(idx);
    std::sort(tree.begin(), tree.end());
    return tree;
}

std::vector<int> connected_components(const NeighborGraph& graph) {
    UnionFind uf(graph.n_vertices());
    for (const auto& e : graph.edges()) uf.unite(e.u, e.v);
    std::vector<int> ids(graph.n_vertices(), -1);
    int next = 0;
    for (Vertex v = 0; v < graph.n_vertices(); ++v) {
        const Vertex root = uf.find(v);
        if (ids[root] < 0) ids[root] = next++;
        ids[v] = ids[root];
    }
    return ids;
}

}  // namespace orcml
