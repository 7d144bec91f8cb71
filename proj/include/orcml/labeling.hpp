#pragma once

#include <vector>

#include "orcml/graph.hpp"
#include "orcml/point_cloud.hpp"

namespace orcml {

struct LabelingFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EdgeLabel : std::uint8_t { Good, Shortcut };

/// Ground-truth labels, parallel to graph.edges().
struct EdgeLabelSet {
    std::vector<EdgeLabel> labels;
    double ratio_threshold = 3.0;
    std::size_t reference_size = 0;

    std::size_t count(EdgeLabel which) const;
};

/// Labels an edge Shortcut when its base points lie on different manifold
/// components, or when the estimated geodesic distance between their nearest
/// reference points exceeds ratio_threshold times the Euclidean edge length.
/// Geodesic distances come from a k-NN graph over the dense noiseless
/// reference sample.
EdgeLabelSet label_edges(const NeighborGraph& graph, const PointCloud& cloud,
                         const PointCloud& reference,
                         double ratio_threshold = 3.0,
                         std::size_t reference_k = 10);

}  // namespace orcml
