#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "orcml/point_cloud.hpp"

namespace orcml {

struct UnsupportedManifold : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ManifoldFamily {
    ConcentricCircles,
    MixtureOfGaussiansCurve,
    Moons,
    SCurve,
    SwissRoll1D,
    Cassini,
    ConcentricParabolas,
    ChainedTori,
    ConcentricHyperboloids,
    HyperboloidParaboloid,
    AdjacentParaboloids,
    SwissRoll2D,
    SwissHole2D,
};

ManifoldFamily family_from_name(const std::string& name);
std::string family_name(ManifoldFamily family);

/// A synthetic manifold with its shape constants. Each family ships
/// defaults (see manifolds.cpp for the parameterizations); individual
/// constants can be overridden by name.
struct ManifoldSpec {
    ManifoldFamily family;
    std::map<std::string, double> shape_params;  // merged over defaults

    int intrinsic_dim() const;  // 1 or 2
    int ambient_dim() const;    // 2 or 3
    int n_components() const;

    double param(const std::string& name) const;
};

ManifoldSpec make_spec(ManifoldFamily family,
                       const std::map<std::string, double>& overrides = {});

/// Truncated isotropic Gaussian noise: xi ~ N(0, sigma^2 I) resampled until
/// ||xi|| <= tau. tau = 0 or sigma = 0 disables the perturbation.
struct NoiseModel {
    double tau = 0.0;
    double sigma = 0.0;
};

/// n points: base positions approximately uniform w.r.t. the manifold volume
/// form, perturbed by truncated Gaussian noise. Deterministic in
/// (spec, noise, n, seed).
PointCloud sample_manifold(const ManifoldSpec& spec, const NoiseModel& noise,
                           std::size_t n, std::uint64_t seed);

/// Noiseless sample for geodesic-distance estimation.
PointCloud dense_reference(const ManifoldSpec& spec, std::size_t n_ref,
                           std::uint64_t seed);

}  // namespace orcml
