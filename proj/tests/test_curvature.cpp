#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "orcml/curvature.hpp"
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

// Independent transport oracle: enumerate every integer transport plan with
// masses scaled to the lcm of the support sizes and take the cheapest.
double brute_force_transport(std::size_t n_src, std::size_t n_snk,
                             const std::vector<std::vector<double>>& cost) {
    const long units = std::lcm<long>(static_cast<long>(n_src),
                                      static_cast<long>(n_snk));
    const long supply = units / static_cast<long>(n_src);
    const long demand = units / static_cast<long>(n_snk);
    std::vector<long> col_left(n_snk, demand);
    double best = std::numeric_limits<double>::infinity();

    std::function<void(std::size_t, long, long, double)> recurse =
        [&](std::size_t i, long row_left, long col, double acc) {
            if (acc >= best) return;
            if (i == n_src) {
                best = acc;
                return;
            }
            if (row_left == 0) {
                recurse(i + 1, supply, 0, acc);
                return;
            }
            if (static_cast<std::size_t>(col) == n_snk) return;
            const long max_here = std::min(row_left, col_left[col]);
            for (long amount = max_here; amount >= 0; --amount) {
                col_left[col] -= amount;
                recurse(i, row_left - amount, col + 1,
                        acc + static_cast<double>(amount) * cost[i][col]);
                col_left[col] += amount;
            }
        };
    recurse(0, supply, 0, 0.0);
    return best / static_cast<double>(units);
}

}  // namespace

TEST_CASE("wasserstein1: identical measures cost 0") {
    NeighborMeasure mu{{0, 1, 2}};
    std::vector<std::vector<double>> ground(3, std::vector<double>(3, 5.0));
    for (int i = 0; i < 3; ++i) ground[i][i] = 0.0;
    CHECK(wasserstein1(mu, mu, ground) == doctest::Approx(0.0));
}

TEST_CASE("wasserstein1: point masses move at ground cost") {
    NeighborMeasure mu{{0}}, nu{{1}};
    CHECK(wasserstein1(mu, nu, {{2.5}}) == doctest::Approx(2.5));
}

TEST_CASE("wasserstein1: half-half onto a point mass") {
    NeighborMeasure mu{{0, 1}}, nu{{2}};
    // d(a,c)=1, d(b,c)=2 -> 0.5*1 + 0.5*2
    CHECK(wasserstein1(mu, nu, {{1.0}, {2.0}}) == doctest::Approx(1.5));
}

TEST_CASE("wasserstein1: matches enumeration oracle on random instances") {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t a = 1 + rng.integer(4), b = 1 + rng.integer(4);
        std::vector<std::vector<double>> cost(a, std::vector<double>(b));
        for (auto& row : cost)
            for (auto& c : row) c = rng.uniform(0.0, 3.0);
        NeighborMeasure mu, nu;
        for (Vertex i = 0; i < a; ++i) mu.atoms.push_back(i);
        for (Vertex j = 0; j < b; ++j) nu.atoms.push_back(100 + j);
        CHECK(wasserstein1(mu, nu, cost) ==
              doctest::Approx(brute_force_transport(a, b, cost)).epsilon(1e-9));
    }
}

TEST_CASE("wasserstein1: metric axioms on sampled instances") {
    Rng rng(22);
    const std::size_t s = 3;
    // symmetric ground metric on 3 shared support points
    std::vector<std::vector<double>> d(s, std::vector<double>(s, 0.0));
    d[0][1] = d[1][0] = 1.0;
    d[0][2] = d[2][0] = 1.5;
    d[1][2] = d[2][1] = 0.8;
    NeighborMeasure a{{0, 1}}, b{{1, 2}}, c{{0, 2}};
    auto w = [&](const NeighborMeasure& x, const NeighborMeasure& y) {
        std::vector<std::vector<double>> cost(x.atoms.size(),
                                              std::vector<double>(y.atoms.size()));
        for (std::size_t i = 0; i < x.atoms.size(); ++i)
            for (std::size_t j = 0; j < y.atoms.size(); ++j)
                cost[i][j] = d[x.atoms[i]][y.atoms[j]];
        return wasserstein1(x, y, cost);
    };
    CHECK(w(a, b) == doctest::Approx(w(b, a)));
    CHECK(w(a, a) == doctest::Approx(0.0));
    CHECK(w(a, c) <= w(a, b) + w(b, c) + 1e-12);
}

TEST_CASE("orc: triangle edge has kappa = 1") {
    NeighborGraph k3(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
    CHECK(orc_edge(k3, 0, 1) == doctest::Approx(1.0));
}

TEST_CASE("orc: middle edge of a 4-path has kappa = -2") {
    NeighborGraph path(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
    CHECK(orc_edge(path, 1, 2) == doctest::Approx(-2.0));
}

TEST_CASE("orc: 5-cycle edge has kappa = -1") {
    NeighborGraph cycle(
        5, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {0, 4, 1.0}});
    CHECK(orc_edge(cycle, 0, 1) == doctest::Approx(-1.0));
}

TEST_CASE("orc: pendant edge is indeterminate") {
    NeighborGraph path(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    CHECK(is_indeterminate(orc_edge(path, 0, 1)));
}

TEST_CASE("orc_all: K4 is symmetric") {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v) edges.push_back({u, v, 1.0});
    NeighborGraph k4(4, std::move(edges));
    auto map = orc_all(k4);
    for (double kappa : map.kappa) CHECK(kappa == doctest::Approx(map.kappa[0]));
}

TEST_CASE("orc_all: values stay in [-2, 1] on random graphs") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_unit_graph(4 + rng.integer(20), rng.uniform(0.1, 0.7), rng);
        auto map = orc_all(g);
        for (double kappa : map.kappa) {
            if (is_indeterminate(kappa)) continue;
            CHECK(kappa >= -2.0 - 1e-12);
            CHECK(kappa <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("orc: barbell bridge is the most negative edge") {
    // two K4 cliques joined by one bridge
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v) edges.push_back({u, v, 1.0});
    for (Vertex u = 4; u < 8; ++u)
        for (Vertex v = u + 1; v < 8; ++v) edges.push_back({u, v, 1.0});
    edges.push_back({3, 4, 1.0});
    NeighborGraph barbell(8, std::move(edges));
    auto map = orc_all(barbell);
    double bridge = 0.0, min_clique = 2.0;
    for (std::size_t i = 0; i < barbell.edges().size(); ++i) {
        const auto& e = barbell.edges()[i];
        if (e.u == 3 && e.v == 4)
            bridge = map.kappa[i];
        else
            min_clique = std::min(min_clique, map.kappa[i]);
    }
    CHECK(bridge < min_clique);
}

TEST_CASE("orc: symmetric in the edge orientation") {
    Rng rng(24);
    auto g = random_unit_graph(12, 0.4, rng);
    for (const auto& e : g.edges()) {
        const double a = orc_edge(g, e.u, e.v);
        const double b = orc_edge(g, e.v, e.u);
        if (is_indeterminate(a))
            CHECK(is_indeterminate(b));
        else
            CHECK(a == doctest::Approx(b));
    }
}

TEST_CASE("orc: invariant to coordinate scale") {
    // same combinatorial graph, weights scaled by 1000
    std::vector<Edge> base = {{0, 1, 0.1}, {1, 2, 0.2}, {2, 3, 0.15},
                              {0, 2, 0.3}, {1, 3, 0.25}};
    std::vector<Edge> scaled = base;
    for (auto& e : scaled) e.weight *= 1000.0;
    NeighborGraph g1(4, base), g2(4, scaled);
    auto m1 = orc_all(g1), m2 = orc_all(g2);
    for (std::size_t i = 0; i < m1.kappa.size(); ++i)
        CHECK(m1.kappa[i] == doctest::Approx(m2.kappa[i]));
}
