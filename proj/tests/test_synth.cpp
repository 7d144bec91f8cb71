#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "orcml/labeling.hpp"
#include "orcml/manifolds.hpp"

using namespace orcml;

TEST_CASE("zero noise puts points exactly on the manifold") {
    auto spec = make_spec(ManifoldFamily::ConcentricCircles);
    auto cloud = sample_manifold(spec, {0.0, 0.0}, 4, 1);
    REQUIRE(cloud.size() == 4);
    CHECK(cloud.points == cloud.base_points);
    const double r_inner = spec.param("r_inner"), r_outer = spec.param("r_outer");
    for (std::size_t i = 0; i < 4; ++i) {
        const double r = std::hypot(cloud.points[2 * i], cloud.points[2 * i + 1]);
        const bool on_circle = std::abs(r - r_inner) < 1e-12 ||
                               std::abs(r - r_outer) < 1e-12;
        CHECK(on_circle);
    }
}

TEST_CASE("sigma = 0 with tau > 0 leaves points unperturbed") {
    auto spec = make_spec(ManifoldFamily::Moons);
    auto cloud = sample_manifold(spec, {0.5, 0.0}, 50, 3);
    CHECK(cloud.points == cloud.base_points);
}

TEST_CASE("noise is bounded by tau") {
    auto circles = make_spec(ManifoldFamily::ConcentricCircles);
    auto cloud = sample_manifold(circles, {0.28, 0.09}, 2000, 7);
    for (std::size_t i = 0; i < cloud.size(); ++i)
        CHECK(cloud.noise_norm(i) <= 0.28 + 1e-12);

    auto roll = make_spec(ManifoldFamily::SwissRoll2D);
    auto roll_cloud = sample_manifold(roll, {2.25, 6.25}, 1000, 7);
    double max_noise = 0.0;
    for (std::size_t i = 0; i < roll_cloud.size(); ++i)
        max_noise = std::max(max_noise, roll_cloud.noise_norm(i));
    CHECK(max_noise <= 2.25 + 1e-12);
    CHECK(max_noise > 0.0);
}

TEST_CASE("same seed reproduces the sample bit-for-bit") {
    auto spec = make_spec(ManifoldFamily::SCurve);
    auto a = sample_manifold(spec, {0.52, 0.28}, 300, 42);
    auto b = sample_manifold(spec, {0.52, 0.28}, 300, 42);
    CHECK(a.points == b.points);
    CHECK(a.base_points == b.base_points);
    auto c = sample_manifold(spec, {0.52, 0.28}, 300, 43);
    CHECK(a.points != c.points);
}

TEST_CASE("dense_reference is noiseless") {
    auto cloud = dense_reference(make_spec(ManifoldFamily::Moons), 500, 0);
    REQUIRE(cloud.size() == 500);
    CHECK(cloud.points == cloud.base_points);
}

TEST_CASE("component ids reflect the manifold components") {
    auto tori = dense_reference(make_spec(ManifoldFamily::ChainedTori), 2000, 1);
    std::set<int> ids(tori.component.begin(), tori.component.end());
    CHECK(ids == std::set<int>{0, 1});

    auto scurve = dense_reference(make_spec(ManifoldFamily::SCurve), 1000, 3);
    std::set<int> one(scurve.component.begin(), scurve.component.end());
    CHECK(one == std::set<int>{0});
}

TEST_CASE("every family samples without error") {
    for (auto family :
         {ManifoldFamily::ConcentricCircles, ManifoldFamily::MixtureOfGaussiansCurve,
          ManifoldFamily::Moons, ManifoldFamily::SCurve, ManifoldFamily::SwissRoll1D,
          ManifoldFamily::Cassini, ManifoldFamily::ConcentricParabolas,
          ManifoldFamily::ChainedTori, ManifoldFamily::ConcentricHyperboloids,
          ManifoldFamily::HyperboloidParaboloid, ManifoldFamily::AdjacentParaboloids,
          ManifoldFamily::SwissRoll2D, ManifoldFamily::SwissHole2D}) {
        auto spec = make_spec(family);
        auto cloud = sample_manifold(spec, {0.1, 0.05}, 64, 5);
        CHECK(cloud.size() == 64);
        for (double x : cloud.points) CHECK(std::isfinite(x));
    }
}

TEST_CASE("swiss hole leaves the hole empty") {
    auto spec = make_spec(ManifoldFamily::SwissHole2D);
    auto cloud = dense_reference(spec, 4000, 2);
    const double ht0 = spec.param("hole_t0"), ht1 = spec.param("hole_t1");
    const double hy0 = spec.param("hole_y0"), hy1 = spec.param("hole_y1");
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const double t = std::hypot(cloud.points[3 * i], cloud.points[3 * i + 2]);
        const double y = cloud.points[3 * i + 1];
        CHECK(!(t > ht0 + 1e-9 && t < ht1 - 1e-9 && y > hy0 && y < hy1));
    }
}

TEST_CASE("circle sampling is uniform in angle") {
    // both circles are rotationally symmetric: quadrant counts near n/4
    auto cloud = dense_reference(make_spec(ManifoldFamily::ConcentricCircles), 8000, 9);
    int quadrant[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const double x = cloud.points[2 * i], y = cloud.points[2 * i + 1];
        quadrant[(x >= 0 ? 0 : 1) + (y >= 0 ? 0 : 2)]++;
    }
    for (int q = 0; q < 4; ++q) CHECK(std::abs(quadrant[q] - 2000) < 200);
}

TEST_CASE("unknown family name is rejected") {
    CHECK_THROWS_AS(family_from_name("klein-bottle"), UnsupportedManifold);
    CHECK(family_from_name("swiss-roll") == ManifoldFamily::SwissRoll2D);
    CHECK(family_name(ManifoldFamily::Cassini) == "cassini");
}

TEST_CASE("label_edges: cross-component edges are shortcuts") {
    auto spec = make_spec(ManifoldFamily::ConcentricCircles);
    auto cloud = dense_reference(spec, 400, 4);
    auto reference = dense_reference(spec, 2000, 5);
    auto graph = build_knn_graph(cloud, 4);
    auto labels = label_edges(graph, cloud, reference, 3.0);
    REQUIRE(labels.labels.size() == graph.edges().size());
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        const auto& e = graph.edges()[i];
        if (cloud.component[e.u] != cloud.component[e.v])
            CHECK(labels.labels[i] == EdgeLabel::Shortcut);
    }
}

TEST_CASE("label_edges: noiseless near-neighbor edges are good") {
    auto spec = make_spec(ManifoldFamily::Moons);
    auto cloud = dense_reference(spec, 500, 6);
    auto reference = dense_reference(spec, 4000, 7);
    auto graph = build_knn_graph(cloud, 3);
    auto labels = label_edges(graph, cloud, reference, 1.5);
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        const auto& e = graph.edges()[i];
        if (cloud.component[e.u] == cloud.component[e.v])
            CHECK(labels.labels[i] == EdgeLabel::Good);
    }
}

TEST_CASE("label_edges: diametrically opposite circle points are shortcuts") {
    // single unit circle; edge joins antipodal points: geodesic pi, euclid 2
    PointCloud cloud;
    cloud.dim = 2;
    for (double x : {1.0, -1.0}) {
        cloud.points.insert(cloud.points.end(), {x, 0.0});
        cloud.base_points.insert(cloud.base_points.end(), {x, 0.0});
        cloud.component.push_back(0);
    }
    PointCloud reference;
    reference.dim = 2;
    const int n_ref = 720;
    for (int i = 0; i < n_ref; ++i) {
        const double t = 2.0 * 3.14159265358979323846 * i / n_ref;
        reference.points.insert(reference.points.end(), {std::cos(t), std::sin(t)});
        reference.base_points.insert(reference.base_points.end(),
                                     {std::cos(t), std::sin(t)});
        reference.component.push_back(0);
    }
    NeighborGraph graph(2, {{0, 1, 2.0}});
    auto shortcut = label_edges(graph, cloud, reference, 1.5);
    CHECK(shortcut.labels[0] == EdgeLabel::Shortcut);  // pi/2 ~ 1.571 > 1.5
    auto good = label_edges(graph, cloud, reference, 1.6);
    CHECK(good.labels[0] == EdgeLabel::Good);
}

TEST_CASE("label_edges: labels are symmetric in edge orientation") {
    auto spec = make_spec(ManifoldFamily::Cassini);
    auto cloud = sample_manifold(spec, {0.135, 0.05}, 300, 8);
    auto reference = dense_reference(spec, 2000, 9);
    auto graph = build_knn_graph(cloud, 5);
    auto a = label_edges(graph, cloud, reference, 3.0);
    auto b = label_edges(graph, cloud, reference, 3.0);
    CHECK(a.labels == b.labels);  // deterministic; stored once per edge
}

TEST_CASE("label_edges: sparse reference within a component fails loudly") {
    auto spec = make_spec(ManifoldFamily::ConcentricCircles);
    auto cloud = dense_reference(spec, 100, 10);
    auto graph = build_knn_graph(cloud, 3);
    // 12 reference points cannot connect both circles with k=1
    auto reference = dense_reference(spec, 12, 11);
    CHECK_THROWS_AS(label_edges(graph, cloud, reference, 3.0, 1), LabelingFailure);
}
