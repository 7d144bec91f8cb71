#pragma once

#include <vector>

#include "orcml/curvature.hpp"
#include "orcml/graph.hpp"
#include "orcml/point_cloud.hpp"

namespace orcml {

enum class EpsPolicy { PerEdgeWeight, FixedEpsilon, MaxEdgeWeight };

struct PruneConfig {
    double delta = 0.8;
    double lambda = 0.01;
    double beta = 1.0;
    EpsPolicy eps_policy = EpsPolicy::PerEdgeWeight;
    double fixed_eps = 0.0;  // used when eps_policy == FixedEpsilon
    bool infinite_distance_removes = true;
};

struct EdgeAudit {
    Vertex u, v;
    double kappa;
    double d_gprime;    // weighted distance in the filtered graph
    double threshold;   // distance threshold used for this edge
    bool removed;
};

/// Partition of the input edges; all vectors hold indices into graph.edges().
struct PruneResult {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> removed;
    std::vector<std::size_t> candidates;
    std::vector<EdgeAudit> audit;  // one record per candidate
};

/// Curvature candidate threshold: -1 + 4(1 - delta).
double candidate_threshold(double delta);

/// Filtered-distance threshold: beta * pi(pi+1)(1-lambda) / (2 sqrt(24 lambda)) * eps.
double distance_threshold(double lambda, double eps, double beta = 1.0);

/// Two-stage curvature pruner: edges with kappa below the candidate threshold
/// are removed from the graph, then each candidate is kept back unless its
/// weighted distance in the filtered graph exceeds the distance threshold.
PruneResult orcmanl_prune(const NeighborGraph& graph,
                          const CurvatureMap& curvatures,
                          const PruneConfig& config);

/// Candidate selection only; removes every candidate edge.
PruneResult orc_only_prune(const NeighborGraph& graph,
                           const CurvatureMap& curvatures, double delta);

/// Removes an edge when a third point falls in the axis-aligned box around
/// its midpoint whose half-width is the mean distance of the endpoints to
/// their k_bis nearest neighbors.
PruneResult bisection_prune(const NeighborGraph& graph, const PointCloud& cloud,
                            std::size_t k_bis);

/// Removes edges whose distance through the union of two successive minimum
/// spanning trees exceeds d_mst.
PruneResult mst_prune(const NeighborGraph& graph, double d_mst);

/// Removes edges whose Gaussian kernel density estimate at the midpoint is
/// below rho_min. bandwidth <= 0 selects the mean edge weight.
PruneResult density_prune(const NeighborGraph& graph, const PointCloud& cloud,
                          double rho_min, double bandwidth = 0.0);

/// Removes edges longer than d_dist.
PruneResult distance_prune(const NeighborGraph& graph, double d_dist);

/// Graph with the removed edges dropped.
NeighborGraph apply_prune(const NeighborGraph& graph, const PruneResult& result);

}  // namespace orcml
