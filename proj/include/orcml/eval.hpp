#pragma once

#include <string>
#include <vector>

#include "orcml/labeling.hpp"
#include "orcml/manifolds.hpp"
#include "orcml/prune.hpp"

namespace orcml {

struct InvalidLabels : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvalReport {
    double pct_good_removed = 0.0;
    double pct_shortcut_removed = 0.0;
    std::size_t good_total = 0, shortcut_total = 0;
    std::size_t good_removed = 0, shortcut_removed = 0;
};

/// Percentage of good / shortcut edges removed by a pruner; 0/0 counts as 0.
EvalReport pruning_report(const NeighborGraph& graph, const PruneResult& result,
                          const EdgeLabelSet& labels);

struct SweepRow {
    double swept_value;
    std::uint64_t seed;
    std::string metric;
    double value;
};

struct SweepTable {
    std::vector<SweepRow> rows;
};

/// Mean curvature of shortcut-labeled edges as the noise schedules decrease.
/// Levels with no shortcut edges emit only a shortcut_count = 0 row.
SweepTable sigma_convergence_sweep(const ManifoldSpec& spec,
                                   const std::vector<double>& tau_schedule,
                                   const std::vector<double>& sigma_schedule,
                                   std::size_t n, std::size_t k,
                                   const std::vector<std::uint64_t>& seeds,
                                   double ratio_threshold = 3.0,
                                   std::size_t n_ref = 6000);

/// Percent of vertices with at least k_incident non-shortcut incident edges
/// of positive curvature, as the sample size grows. Reported both for a
/// strict kappa > 0 bar and for kappa ~ +1. Graphs use eps-radius
/// connectivity: the densification that drives curvature positive needs the
/// neighborhood radius fixed while n grows (k-NN degree stays constant and
/// the sweep saturates instead).
SweepTable positive_orc_sweep(const ManifoldSpec& spec, const NoiseModel& noise,
                              const std::vector<std::size_t>& n_schedule,
                              std::size_t k_incident,
                              const std::vector<std::uint64_t>& seeds,
                              double eps,
                              double ratio_threshold = 3.0,
                              std::size_t n_ref = 6000);

/// Levina-Bickel pointwise maximum-likelihood dimension estimates using
/// graph-metric neighbor distances. Vertices with fewer than k reachable
/// neighbors, or with degenerate spacing, yield NaN.
std::vector<double> mle_intrinsic_dimension(const NeighborGraph& graph,
                                            std::size_t k);

/// Chance-corrected agreement between two labelings; maximum 1.
double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace orcml
