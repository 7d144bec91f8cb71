#include <doctest.h>

#include <cmath>

#include "orcml/curvature.hpp"
#include "orcml/manifolds.hpp"
#include "orcml/prune.hpp"
#include "orcml/rng.hpp"

using namespace orcml;

namespace {

NeighborGraph random_unit_graph(std::size_t n, double p_edge, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform() < p_edge) edges.push_back({u, v, 1.0});
    return NeighborGraph(n, std::move(edges));
}

void check_identical(const CurvatureMap& a, const CurvatureMap& b) {
    REQUIRE(a.kappa.size() == b.kappa.size());
    for (std::size_t i = 0; i < a.kappa.size(); ++i) {
        if (is_indeterminate(a.kappa[i]))
            CHECK(is_indeterminate(b.kappa[i]));
        else
            CHECK(a.kappa[i] == b.kappa[i]);  // bit-identical, not approximate
    }
}

}  // namespace

TEST_CASE("parallel and serial curvature agree on random graphs") {
    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_unit_graph(10 + rng.integer(30), rng.uniform(0.05, 0.5), rng);
        check_identical(orc_all(g), orc_all_serial(g));
    }
}

TEST_CASE("parallel and serial curvature agree on a manifold graph") {
    auto spec = make_spec(ManifoldFamily::ConcentricCircles);
    auto cloud = sample_manifold(spec, {0.28, 0.09}, 1200, 3);
    auto g = build_knn_graph(cloud, 15);
    check_identical(orc_all(g), orc_all_serial(g));
}

TEST_CASE("repeated parallel runs are deterministic") {
    auto spec = make_spec(ManifoldFamily::Moons);
    auto cloud = sample_manifold(spec, {0.19, 0.20}, 800, 5);
    auto g = build_knn_graph(cloud, 12);
    auto first = orc_all(g);
    for (int rep = 0; rep < 3; ++rep) check_identical(first, orc_all(g));
}

TEST_CASE("parallel pruning matches decisions computed from serial curvature") {
    auto spec = make_spec(ManifoldFamily::SCurve);
    auto cloud = sample_manifold(spec, {0.52, 0.28}, 700, 7);
    auto g = build_knn_graph(cloud, 12);
    auto parallel = orcmanl_prune(g, orc_all(g), PruneConfig{});
    auto serial = orcmanl_prune(g, orc_all_serial(g), PruneConfig{});
    CHECK(parallel.kept == serial.kept);
    CHECK(parallel.removed == serial.removed);
    CHECK(parallel.candidates == serial.candidates);
}
