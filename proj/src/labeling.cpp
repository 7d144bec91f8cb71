#include "orcml/labeling.hpp"

#include <algorithm>
#include <map>

namespace orcml {

std::size_t EdgeLabelSet::count(EdgeLabel which) const {
    return static_cast<std::size_t>(
        std::count(labels.begin(), labels.end(), which));
}

EdgeLabelSet label_edges(const NeighborGraph& graph, const PointCloud& cloud,
                         const PointCloud& reference, double ratio_threshold,
                         std::size_t reference_k) {
    const std::size_t n = cloud.size();
    const std::size_t n_ref = reference.size();
    if (graph.n_vertices() != n)
        throw InvalidConfig("label_edges: graph/cloud size mismatch");

    NeighborGraph ref_graph = build_knn_graph(reference, reference_k);

    // the reference graph must connect each manifold component
    const auto ref_cc = connected_components(ref_graph);
    std::map<int, int> seen;  // manifold component -> ref-graph component
    for (std::size_t i = 0; i < n_ref; ++i) {
        auto [it, inserted] = seen.emplace(reference.component[i], ref_cc[i]);
        if (!inserted && it->second != ref_cc[i])
            throw LabelingFailure(
                "reference graph disconnected within a manifold component; "
                "increase n_ref");
    }

    // nearest reference point of each base point
    std::vector<Vertex> nearest(n);
    for (std::size_t i = 0; i < n; ++i) {
        double best = kInfDist;
        Vertex best_j = 0;
        const auto base = cloud.base(i);
        for (std::size_t j = 0; j < n_ref; ++j) {
            const double d = euclidean(base, reference.base(j));
            if (d < best) {
                best = d;
                best_j = static_cast<Vertex>(j);
            }
        }
        nearest[i] = best_j;
    }

    // geodesic estimates: one Dijkstra per distinct mapped source
    std::vector<Vertex> sources;
    for (const auto& e : graph.edges()) sources.push_back(nearest[e.u]);
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    std::vector<std::vector<double>> geo(sources.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(sources.size()); ++s) {
        geo[static_cast<std::size_t>(s)] =
            shortest_path(ref_graph, sources[static_cast<std::size_t>(s)]).dist;
    }
    auto source_index = [&](Vertex v) {
        return static_cast<std::size_t>(
            std::lower_bound(sources.begin(), sources.end(), v) - sources.begin());
    };

    EdgeLabelSet set;
    set.ratio_threshold = ratio_threshold;
    set.reference_size = n_ref;
    set.labels.resize(graph.edges().size(), EdgeLabel::Good);
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        const Edge& e = graph.edges()[i];
        if (cloud.component[e.u] != cloud.component[e.v]) {
            set.labels[i] = EdgeLabel::Shortcut;
            continue;
        }
        const double ref_geodesic = geo[source_index(nearest[e.u])][nearest[e.v]];
        // Both the geodesic and the Euclidean distance are measured between
        // the base (projected) points, so the ratio reads how much the
        // manifold path curls relative to the straight line. Using the noisy
        // edge length in the denominator would flag ordinary neighbor edges
        // whenever the perturbations happen to nearly cancel.
        const double euclid = euclidean(cloud.base(e.u), cloud.base(e.v));
        // Conservative lower bound on the base-point geodesic: subtract the
        // snap offsets to the nearest reference points, and never go below
        // the straight-line distance. Without the correction, edges shorter
        // than the reference spacing get arbitrarily inflated ratios.
        const double snap_u = euclidean(cloud.base(e.u), reference.base(nearest[e.u]));
        const double snap_v = euclidean(cloud.base(e.v), reference.base(nearest[e.v]));
        const double geodesic = std::max(ref_geodesic - snap_u - snap_v, euclid);
        if (euclid > 0.0 && geodesic / euclid > ratio_threshold)
            set.labels[i] = EdgeLabel::Shortcut;
    }
    return set;
}

}  // namespace orcml
