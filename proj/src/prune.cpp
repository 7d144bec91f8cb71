#include "orcml/prune.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace orcml {

namespace {

constexpr double kPi = 3.14159265358979323846;

PruneResult partition_by_flag(const NeighborGraph& graph,
                              const std::vector<bool>& remove) {
    PruneResult result;
    for (std::size_t i = 0; i < graph.edges().size(); ++i)
        (remove[i] ? result.removed : result.kept).push_back(i);
    return result;
}

}  // namespace

double candidate_threshold(double delta) {
    if (delta < 0.0 || delta > 1.0)
        throw InvalidConfig("candidate_threshold: delta must lie in [0, 1]");
    return -1.0 + 4.0 * (1.0 - delta);
}

double distance_threshold(double lambda, double eps, double beta) {
    if (lambda <= 0.0 || lambda >= 1.0)
        throw InvalidConfig("distance_threshold: lambda must lie in (0, 1)");
    if (eps <= 0.0) throw InvalidConfig("distance_threshold: eps must be positive");
    return beta * kPi * (kPi + 1.0) * (1.0 - lambda) /
           (2.0 * std::sqrt(24.0 * lambda)) * eps;
}

PruneResult orcmanl_prune(const NeighborGraph& graph,
                          const CurvatureMap& curvatures,
                          const PruneConfig& config) {
    if (curvatures.kappa.size() != graph.edges().size())
        throw InvalidConfig("orcmanl_prune: curvature map does not cover all edges");
    const double kappa_thr = candidate_threshold(config.delta);

    PruneResult result;
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        const double kappa = curvatures.kappa[i];
        if (!is_indeterminate(kappa) && kappa <= kappa_thr)
            result.candidates.push_back(i);
    }

    // filtered graph G' with all candidates removed
    std::vector<bool> is_candidate(graph.edges().size(), false);
    for (std::size_t i : result.candidates) is_candidate[i] = true;
    std::vector<Edge> kept_edges;
    for (std::size_t i = 0; i < graph.edges().size(); ++i)
        if (!is_candidate[i]) kept_edges.push_back(graph.edges()[i]);
    NeighborGraph filtered(graph.n_vertices(), std::move(kept_edges));

    double max_weight = 0.0;
    if (config.eps_policy == EpsPolicy::MaxEdgeWeight)
        for (const auto& e : graph.edges()) max_weight = std::max(max_weight, e.weight);

    result.audit.resize(result.candidates.size());
    std::vector<bool> remove(graph.edges().size(), false);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(result.candidates.size()); ++c) {
        const std::size_t i = result.candidates[static_cast<std::size_t>(c)];
        const Edge& e = graph.edges()[i];
        double eps;
        switch (config.eps_policy) {
            case EpsPolicy::PerEdgeWeight: eps = e.weight; break;
            case EpsPolicy::FixedEpsilon: eps = config.fixed_eps; break;
            case EpsPolicy::MaxEdgeWeight: eps = max_weight; break;
            default: eps = e.weight;
        }
        const double threshold = distance_threshold(config.lambda, eps, config.beta);
        // early termination at the threshold is only sound when a distance
        // above it and a disconnection lead to the same decision
        const double cutoff =
            config.infinite_distance_removes ? threshold : kInfDist;
        const double d =
            shortest_path_to(filtered, e.u, e.v, MetricMode::Weighted, cutoff);
        const bool removed =
            std::isinf(d) ? config.infinite_distance_removes : d > threshold;
        remove[i] = removed;
        result.audit[static_cast<std::size_t>(c)] =
            EdgeAudit{e.u, e.v, curvatures.kappa[i], d, threshold, removed};
    }
    auto partition = partition_by_flag(graph, remove);
    result.kept = std::move(partition.kept);
    result.removed = std::move(partition.removed);
    return result;
}

PruneResult orc_only_prune(const NeighborGraph& graph,
                           const CurvatureMap& curvatures, double delta) {
    if (curvatures.kappa.size() != graph.edges().size())
        throw InvalidConfig("orc_only_prune: curvature map does not cover all edges");
    const double kappa_thr = candidate_threshold(delta);
    std::vector<bool> remove(graph.edges().size(), false);
    PruneResult result;
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        const double kappa = curvatures.kappa[i];
        if (!is_indeterminate(kappa) && kappa <= kappa_thr) {
            result.candidates.push_back(i);
            remove[i] = true;
            result.audit.push_back(EdgeAudit{graph.edges()[i].u, graph.edges()[i].v,
                                             kappa, kInfDist, kappa_thr, true});
        }
    }
    auto partition = partition_by_flag(graph, remove);
    result.kept = std::move(partition.kept);
    result.removed = std::move(partition.removed);
    return result;
}

PruneResult bisection_prune(const NeighborGraph& graph, const PointCloud& cloud,
                            std::size_t k_bis) {
    if (k_bis < 1) throw InvalidConfig("bisection_prune: k_bis must be >= 1");
    const std::size_t n = cloud.size();
    const std::size_t dim = cloud.dim;

    // mean distance of each vertex to its k_bis nearest neighbors
    std::vector<double> mean_knn(n, 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ip = 0; ip < static_cast<std::ptrdiff_t>(n); ++ip) {
        const auto i = static_cast<std::size_t>(ip);
        std::vector<double> dists;
        dists.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) dists.push_back(cloud.distance(i, j));
        const std::size_t k = std::min(k_bis, dists.size());
        std::nth_element(dists.begin(), dists.begin() + k - 1, dists.end());
        double sum = 0.0;
        for (std::size_t j = 0; j < k; ++j) sum += dists[j];
        mean_knn[i] = sum / static_cast<double>(k);
    }

    std::vector<bool> remove(graph.edges().size(), false);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ep = 0; ep < static_cast<std::ptrdiff_t>(graph.edges().size()); ++ep) {
        const auto idx = static_cast<std::size_t>(ep);
        const Edge& e = graph.edges()[idx];
        const double half = 0.5 * (mean_knn[e.u] + mean_knn[e.v]);
        double mid[3];
        for (std::size_t d = 0; d < dim; ++d)
            mid[d] = 0.5 * (cloud.points[e.u * dim + d] + cloud.points[e.v * dim + d]);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == e.u || j == e.v) continue;
            bool in_box = true;
            for (std::size_t d = 0; d < dim && in_box; ++d)
                in_box = std::abs(cloud.points[j * dim + d] - mid[d]) <= half;
            if (in_box) {
                remove[idx] = true;
                break;
            }
        }
    }
    return partition_by_flag(graph, remove);
}

PruneResult mst_prune(const NeighborGraph& graph, double d_mst) {
    if (d_mst <= 0.0) throw InvalidConfig("mst_prune: d_mst must be positive");
    const auto first = kruskal_mst(graph);
    std::set<std::size_t> first_set(first.begin(), first.end());

    std::vector<Edge> rest;
    for (std::size_t i = 0; i < graph.edges().size(); ++i)
        if (!first_set.count(i)) rest.push_back(graph.edges()[i]);
    NeighborGraph without_first(graph.n_vertices(), std::move(rest));
    const auto second = kruskal_mst(without_first);

    std::vector<Edge> combined;
    for (std::size_t i : first) combined.push_back(graph.edges()[i]);
    for (std::size_t i : second) combined.push_back(without_first.edges()[i]);
    NeighborGraph backbone(graph.n_vertices(), std::move(combined));

    std::vector<bool> remove(graph.edges().size(), false);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t ep = 0; ep < static_cast<std::ptrdiff_t>(graph.edges().size()); ++ep) {
        const auto idx = static_cast<std::size_t>(ep);
        const Edge& e = graph.edges()[idx];
        const double d = shortest_path_to(backbone, e.u, e.v,
                                          MetricMode::Weighted, d_mst);
        remove[idx] = !(d <= d_mst);
    }
    return partition_by_flag(graph, remove);
}

PruneResult density_prune(const NeighborGraph& graph, const PointCloud& cloud,
                          double rho_min, double bandwidth) {
    if (rho_min < 0.0) throw InvalidConfig("density_prune: rho_min must be >= 0");
    if (bandwidth <= 0.0) {
        double sum = 0.0;
        for (const auto& e : graph.edges()) sum += e.weight;
        bandwidth = graph.edges().empty()
                        ? 1.0
                        : sum / static_cast<double>(graph.edges().size());
    }
    const std::size_t n = cloud.size();
    const std::size_t dim = cloud.dim;
    const double norm =
        static_cast<double>(n) *
        std::pow(2.0 * kPi * bandwidth * bandwidth, 0.5 * static_cast<double>(dim));

    std::vector<bool> remove(graph.edges().size(), false);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ep = 0; ep < static_cast<std::ptrdiff_t>(graph.edges().size()); ++ep) {
        const auto idx = static_cast<std::size_t>(ep);
        const Edge& e = graph.edges()[idx];
        double mid[3];
        for (std::size_t d = 0; d < dim; ++d)
            mid[d] = 0.5 * (cloud.points[e.u * dim + d] + cloud.points[e.v * dim + d]);
        double density = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double dist2 = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                const double diff = cloud.points[j * dim + d] - mid[d];
                dist2 += diff * diff;
            }
            density += std::exp(-dist2 / (2.0 * bandwidth * bandwidth));
        }
        remove[idx] = density / norm < rho_min;
    }
    return partition_by_flag(graph, remove);
}

PruneResult distance_prune(const NeighborGraph& graph, double d_dist) {
    if (d_dist <= 0.0) throw InvalidConfig("distance_prune: d_dist must be positive");
    std::vector<bool> remove(graph.edges().size(), false);
    for (std::size_t i = 0; i < graph.edges().size(); ++i)
        remove[i] = graph.edges()[i].weight > d_dist;
    return partition_by_flag(graph, remove);
}

NeighborGraph apply_prune(const NeighborGraph& graph, const PruneResult& result) {
    std::vector<Edge> kept;
    kept.reserve(result.kept.size());
    for (std::size_t i : result.kept) kept.push_back(graph.edges()[i]);
    return NeighborGraph(graph.n_vertices(), std::move(kept));
}

}  // namespace orcml
