#include "orcml/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

namespace orcml {

EvalReport pruning_report(const NeighborGraph& graph, const PruneResult& result,
                          const EdgeLabelSet& labels) {
    if (labels.labels.size() != graph.edges().size())
        throw InvalidLabels("pruning_report: labels do not cover all edges");
    EvalReport report;
    report.good_total = labels.count(EdgeLabel::Good);
    report.shortcut_total = labels.count(EdgeLabel::Shortcut);
    for (std::size_t i : result.removed) {
        if (labels.labels[i] == EdgeLabel::Good)
            ++report.good_removed;
        else
            ++report.shortcut_removed;
    }
    auto pct = [](std::size_t removed, std::size_t total) {
        return total == 0 ? 0.0
                          : 100.0 * static_cast<double>(removed) /
                                static_cast<double>(total);
    };
    report.pct_good_removed = pct(report.good_removed, report.good_total);
    report.pct_shortcut_removed = pct(report.shortcut_removed, report.shortcut_total);
    return report;
}

SweepTable sigma_convergence_sweep(const ManifoldSpec& spec,
                                   const std::vector<double>& tau_schedule,
                                   const std::vector<double>& sigma_schedule,
                                   std::size_t n, std::size_t k,
                                   const std::vector<std::uint64_t>& seeds,
                                   double ratio_threshold, std::size_t n_ref) {
    if (tau_schedule.empty() || tau_schedule.size() != sigma_schedule.size())
        throw InvalidConfig("sigma_convergence_sweep: bad schedules");
    const PointCloud reference = dense_reference(spec, n_ref, 0);

    SweepTable table;
    for (std::size_t level = 0; level < sigma_schedule.size(); ++level) {
        const NoiseModel noise{tau_schedule[level], sigma_schedule[level]};
        for (std::uint64_t seed : seeds) {
            const PointCloud cloud = sample_manifold(spec, noise, n, seed);
            const NeighborGraph graph = build_knn_graph(cloud, k);
            const CurvatureMap curv = orc_all(graph);
            const EdgeLabelSet labels =
                label_edges(graph, cloud, reference, ratio_threshold);

            double sum = 0.0;
            std::size_t count = 0;
            for (std::size_t i = 0; i < graph.edges().size(); ++i) {
                if (labels.labels[i] != EdgeLabel::Shortcut) continue;
                if (is_indeterminate(curv.kappa[i])) continue;
                sum += curv.kappa[i];
                ++count;
            }
            table.rows.push_back({sigma_schedule[level], seed, "shortcut_count",
                                  static_cast<double>(count)});
            if (count > 0)
                table.rows.push_back({sigma_schedule[level], seed,
                                      "mean_shortcut_kappa",
                                      sum / static_cast<double>(count)});
        }
    }
    return table;
}

SweepTable positive_orc_sweep(const ManifoldSpec& spec, const NoiseModel& noise,
                              const std::vector<std::size_t>& n_schedule,
                              std::size_t k_incident,
                              const std::vector<std::uint64_t>& seeds,
                              double eps, double ratio_threshold,
                              std::size_t n_ref) {
    if (n_schedule.empty())
        throw InvalidConfig("positive_orc_sweep: empty schedule");
    if (eps <= 0.0)
        throw InvalidConfig("positive_orc_sweep: eps must be positive");
    const PointCloud reference = dense_reference(spec, n_ref, 0);

    SweepTable table;
    for (std::size_t n : n_schedule) {
        for (std::uint64_t seed : seeds) {
            const PointCloud cloud = sample_manifold(spec, noise, n, seed);
            const NeighborGraph graph = build_eps_graph(cloud, eps);
            const CurvatureMap curv = orc_all(graph);
            const EdgeLabelSet labels =
                label_edges(graph, cloud, reference, ratio_threshold);

            std::vector<std::size_t> positive(n, 0), unit(n, 0);
            for (std::size_t i = 0; i < graph.edges().size(); ++i) {
                if (labels.labels[i] != EdgeLabel::Good) continue;
                const double kappa = curv.kappa[i];
                if (is_indeterminate(kappa) || kappa <= 0.0) continue;
                ++positive[graph.edges()[i].u];
                ++positive[graph.edges()[i].v];
                if (kappa >= 1.0 - 1e-9) {
                    ++unit[graph.edges()[i].u];
                    ++unit[graph.edges()[i].v];
                }
            }
            auto pct_with_k = [&](const std::vector<std::size_t>& counts) {
                std::size_t hits = 0;
                for (std::size_t c : counts)
                    if (c >= k_incident) ++hits;
                return 100.0 * static_cast<double>(hits) / static_cast<double>(n);
            };
            table.rows.push_back({static_cast<double>(n), seed,
                                  "pct_vertices_k_positive", pct_with_k(positive)});
            table.rows.push_back({static_cast<double>(n), seed,
                                  "pct_vertices_k_unit", pct_with_k(unit)});
        }
    }
    return table;
}

std::vector<double> mle_intrinsic_dimension(const NeighborGraph& graph,
                                            std::size_t k) {
    if (k < 2) throw InvalidConfig("mle_intrinsic_dimension: k must be >= 2");
    const std::size_t n = graph.n_vertices();
    std::vector<double> estimates(n, kIndeterminate);

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t vp = 0; vp < static_cast<std::ptrdiff_t>(n); ++vp) {
        const auto source = static_cast<Vertex>(vp);
        // partial Dijkstra: pop until k neighbors found
        std::vector<double> dist(n, kInfDist);
        std::vector<bool> done(n, false);
        dist[source] = 0.0;
        using Item = std::pair<double, Vertex>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        heap.push({0.0, source});
        std::vector<double> nn_dist;
        while (!heap.empty() && nn_dist.size() < k) {
            auto [d, v] = heap.top();
            heap.pop();
            if (done[v]) continue;
            done[v] = true;
            if (v != source) nn_dist.push_back(d);
            for (const auto& [w, weight] : graph.neighbors(v)) {
                if (d + weight < dist[w]) {
                    dist[w] = d + weight;
                    heap.push({d + weight, w});
                }
            }
        }
        if (nn_dist.size() < k) continue;  // Indeterminate
        const double t_k = nn_dist[k - 1];
        double sum = 0.0;
        for (std::size_t j = 0; j + 1 < k; ++j) sum += std::log(t_k / nn_dist[j]);
        sum /= static_cast<double>(k - 1);
        if (sum > 0.0) estimates[static_cast<std::size_t>(vp)] = 1.0 / sum;
    }
    return estimates;
}

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw InvalidLabels("adjusted_rand_index: need equal lengths >= 2");
    const double n = static_cast<double>(a.size());
    std::map<std::pair<int, int>, double> joint;
    std::map<int, double> row, col;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ++joint[{a[i], b[i]}];
        ++row[a[i]];
        ++col[b[i]];
    }
    auto choose2 = [](double x) { return x * (x - 1.0) / 2.0; };
    double sum_joint = 0.0, sum_row = 0.0, sum_col = 0.0;
    for (const auto& [key, c] : joint) sum_joint += choose2(c);
    for (const auto& [key, c] : row) sum_row += choose2(c);
    for (const auto& [key, c] : col) sum_col += choose2(c);
    const double expected = sum_row * sum_col / choose2(n);
    const double max_index = 0.5 * (sum_row + sum_col);
    if (max_index == expected) return 0.0;  // both labelings trivial
    return (sum_joint - expected) / (max_index - expected);
}

}  // namespace orcml
