#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace orcml {

struct InvalidConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// n points in ambient dimension dim, together with the noiseless base
/// positions they were perturbed from and the id of the manifold component
/// each base point lies on.
struct PointCloud {
    std::size_t dim = 0;
    std::vector<double> points;       // n * dim, row-major
    std::vector<double> base_points;  // n * dim
    std::vector<int> component;       // n

    std::size_t size() const { return dim == 0 ? 0 : points.size() / dim; }

    std::span<const double> point(std::size_t i) const {
        return {points.data() + i * dim, dim};
    }
    std::span<const double> base(std::size_t i) const {
        return {base_points.data() + i * dim, dim};
    }

    double distance(std::size_t i, std::size_t j) const {
        double s = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
            const double diff = points[i * dim + d] - points[j * dim + d];
            s += diff * diff;
        }
        return std::sqrt(s);
    }

    /// Euclidean displacement between a point and its base position.
    double noise_norm(std::size_t i) const {
        double s = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
            const double diff = points[i * dim + d] - base_points[i * dim + d];
            s += diff * diff;
        }
        return std::sqrt(s);
    }
};

double euclidean(std::span<const double> a, std::span<const double> b);

}  // namespace orcml
