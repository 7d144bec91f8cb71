#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "orcml/graph.hpp"

namespace orcml {

/// Sentinel for edges with an empty reduced neighborhood.
constexpr double kIndeterminate = std::numeric_limits<double>::quiet_NaN();

inline bool is_indeterminate(double kappa) { return std::isnan(kappa); }

/// Uniform probability measure over a set of vertices.
struct NeighborMeasure {
    std::vector<Vertex> atoms;
    double mass() const { return 1.0 / static_cast<double>(atoms.size()); }
};

/// Per-edge curvature values, parallel to graph.edges().
struct CurvatureMap {
    std::vector<double> kappa;
};

/// Exact 1-Wasserstein distance between two uniform measures. ground(i, j)
/// is the cost of moving mass from mu.atoms[i] to nu.atoms[j]. Solved as a
/// transportation problem with masses scaled to integer units, so the result
/// is exact up to floating-point summation of the ground costs.
double wasserstein1(const NeighborMeasure& mu, const NeighborMeasure& nu,
                    const std::vector<std::vector<double>>& ground);

/// Ollivier-Ricci curvature of one edge under the unit metric:
/// kappa = 1 - W(mu_x, mu_y), with mu_x uniform on N(x)\{y} and mu_y uniform
/// on N(y)\{x}, ground distances being unit shortest paths in the full graph.
/// Returns kIndeterminate when either reduced neighborhood is empty; clamps
/// to -2 if supports are unreachable from each other.
double orc_edge(const NeighborGraph& graph, Vertex x, Vertex y);

/// Curvature for every edge, evaluated concurrently with OpenMP.
CurvatureMap orc_all(const NeighborGraph& graph);

/// Single-threaded reference implementation; must agree with orc_all exactly.
CurvatureMap orc_all_serial(const NeighborGraph& graph);

}  // namespace orcml
