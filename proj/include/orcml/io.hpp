#pragma once

#include <optional>
#include <string>

#include "orcml/curvature.hpp"
#include "orcml/eval.hpp"
#include "orcml/labeling.hpp"
#include "orcml/prune.hpp"

namespace orcml {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Point-cloud CSV: header x0..x{D-1},bx0..bx{D-1},component; row order is
/// point index.
void write_point_cloud_csv(const std::string& path, const PointCloud& cloud);
PointCloud read_point_cloud_csv(const std::string& path);

/// Edge-list CSV: header u,v,weight[,label,kappa]; vertices index the
/// point-cloud CSV rows. Indeterminate kappa serializes as an empty field.
void write_edge_csv(const std::string& path, const NeighborGraph& graph,
                    const EdgeLabelSet* labels = nullptr,
                    const CurvatureMap* curvatures = nullptr);
NeighborGraph read_edge_csv(const std::string& path, std::size_t n_vertices);

/// PruneResult JSON: config, thresholds, removed pairs, per-edge audit.
void write_prune_json(const std::string& path, const NeighborGraph& graph,
                      const PruneConfig& config, const PruneResult& result);

void write_report_json(const std::string& path, const EvalReport& report);
void write_sweep_csv(const std::string& path, const SweepTable& table);

}  // namespace orcml
