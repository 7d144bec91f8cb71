#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "orcml/point_cloud.hpp"

namespace orcml {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u, v;  // u < v
    double weight;
};

enum class MetricMode { Weighted, Unit };

constexpr double kInfDist = std::numeric_limits<double>::infinity();

/// Undirected weighted graph over point-cloud vertices. Immutable after
/// construction; every edge is stored once with u < v. Queries can switch
/// between the stored weights and the unit metric (all weights 1).
class NeighborGraph {
public:
    NeighborGraph() = default;
    NeighborGraph(std::size_t n_vertices, std::vector<Edge> edges);

    std::size_t n_vertices() const { return n_vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Neighbors of v sorted by vertex id, paired with edge weight.
    const std::vector<std::pair<Vertex, double>>& neighbors(Vertex v) const {
        return adjacency_[v];
    }

    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

    bool has_edge(Vertex u, Vertex v) const;

private:
    std::size_t n_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, double>>> adjacency_;
};

struct DistanceResult {
    Vertex source = 0;
    std::vector<double> dist;  // unreachable = +inf
};

/// Symmetric k-NN graph: edge (a,b) iff b is among the k nearest neighbors of
/// a, or vice versa. Weights are Euclidean distances; ties in the k-th
/// distance break toward the lower vertex index. Zero-length edges (duplicate
/// points) get a deterministic jitter so shortest paths stay well-posed.
NeighborGraph build_knn_graph(const PointCloud& cloud, std::size_t k);

/// epsilon-radius graph: edge iff pairwise distance <= eps.
NeighborGraph build_eps_graph(const PointCloud& cloud, double eps);

/// Single-source Dijkstra under the chosen metric.
DistanceResult shortest_path(const NeighborGraph& graph, Vertex source,
                             MetricMode mode = MetricMode::Weighted);

/// Source-to-target distance with early termination; distances above cutoff
/// are reported as +inf.
double shortest_path_to(const NeighborGraph& graph, Vertex source, Vertex target,
                        MetricMode mode = MetricMode::Weighted,
                        double cutoff = kInfDist);

/// Minimum spanning forest via Kruskal; deterministic tie-break by
/// (weight, u, v). Returns indices into graph.edges().
std::vector<std::size_t> kruskal_mst(const NeighborGraph& graph);

/// 0-based component ids ordered by smallest contained vertex.
std::vector<int> connected_components(const NeighborGraph& graph);

}  // namespace orcml
