#include "orcml/manifolds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "orcml/rng.hpp"

namespace orcml {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct FamilyInfo {
    std::string name;
    int m, D, components;
    std::map<std::string, double> defaults;
};

const std::map<ManifoldFamily, FamilyInfo>& family_table() {
    static const std::map<ManifoldFamily, FamilyInfo> table = {
        {ManifoldFamily::ConcentricCircles,
         {"concentric-circles", 1, 2, 2, {{"r_inner", 1.0}, {"r_outer", 1.6}}}},
        {ManifoldFamily::MixtureOfGaussiansCurve,
         {"mixture-of-gaussians", 1, 2, 2,
          {{"amplitude", 2.0}, {"spread", 2.0}, {"separation", 1.2}, {"half_width", 6.0}}}},
        {ManifoldFamily::Moons,
         {"moons", 1, 2, 2, {{"scale", 2.0}, {"separation", 0.76}}}},
        {ManifoldFamily::SCurve,
         {"s-curve", 1, 2, 1, {{"scale", 4.0}, {"sweep", 1.811}}}},
        {ManifoldFamily::SwissRoll1D,
         {"swiss-roll-1d", 1, 2, 1, {{"t_min", 4.71238898038469}, {"t_max", 14.137166941154069}, {"scale", 1.0}}}},
        {ManifoldFamily::Cassini,
         {"cassini", 1, 2, 1, {{"a", 1.0}, {"b", 1.1}}}},
        {ManifoldFamily::ConcentricParabolas,
         {"concentric-parabolas", 1, 2, 2,
          {{"curvature", 0.25}, {"gap", 1.0}, {"half_width", 3.0}}}},
        // offset = R chains the rings through each other's centers; the
        // closest approach between the centerline circles is then R
        // everywhere along the second ring, so the surface gap is R - 2r.
        {ManifoldFamily::ChainedTori,
         {"chained-tori", 2, 3, 2,
          {{"R", 2.65}, {"r", 0.5}, {"offset", 2.65}}}},
        {ManifoldFamily::ConcentricHyperboloids,
         {"concentric-hyperboloids", 2, 3, 2,
          {{"a_inner", 1.0}, {"a_outer", 1.6}, {"c", 1.0}, {"height", 1.5}}}},
        {ManifoldFamily::HyperboloidParaboloid,
         {"hyperboloid-paraboloid", 2, 3, 2,
          {{"a", 1.0}, {"c", 1.0}, {"height", 1.5},
           {"focal", 1.5}, {"rho_max", 1.8}, {"z_offset", 2.0}}}},
        {ManifoldFamily::AdjacentParaboloids,
         {"adjacent-paraboloids", 2, 3, 2,
          {{"focal", 1.5}, {"rho_max", 2.0}, {"gap", 1.0}}}},
        {ManifoldFamily::SwissRoll2D,
         {"swiss-roll", 2, 3, 1,
          {{"t_min", 4.71238898038469}, {"t_max", 14.137166941154069}, {"width", 21.0}}}},
        {ManifoldFamily::SwissHole2D,
         {"swiss-hole", 2, 3, 1,
          {{"t_min", 4.71238898038469}, {"t_max", 14.137166941154069}, {"width", 21.0},
           {"hole_t0", 9.0}, {"hole_t1", 11.0}, {"hole_y0", 8.0}, {"hole_y1", 13.0}}}},
    };
    return table;
}

/// One parametric piece of a manifold. For m = 1 only u is used.
struct Chart {
    int component;
    double u0, u1, v0, v1;
    std::function<void(double, double, double*)> map;   // writes D coords
    std::function<bool(double, double)> inside;         // nullptr = whole domain

    // filled in by prepare():
    double measure = 0.0;      // length / area
    double max_element = 0.0;  // sup of the volume element over the domain
};

/// Volume element (speed or area element) by central differences.
double volume_element(const Chart& chart, int m, int D, double u, double v) {
    const double hu = 1e-6 * (chart.u1 - chart.u0);
    double a[3], b[3];
    chart.map(u + hu, v, a);
    chart.map(u - hu, v, b);
    double du[3] = {0, 0, 0};
    for (int d = 0; d < D; ++d) du[d] = (a[d] - b[d]) / (2 * hu);
    if (m == 1) {
        double s = 0;
        for (int d = 0; d < D; ++d) s += du[d] * du[d];
        return std::sqrt(s);
    }
    const double hv = 1e-6 * (chart.v1 - chart.v0);
    chart.map(u, v + hv, a);
    chart.map(u, v - hv, b);
    double dv[3];
    for (int d = 0; d < D; ++d) dv[d] = (a[d] - b[d]) / (2 * hv);
    const double cx = du[1] * dv[2] - du[2] * dv[1];
    const double cy = du[2] * dv[0] - du[0] * dv[2];
    const double cz = du[0] * dv[1] - du[1] * dv[0];
    return std::sqrt(cx * cx + cy * cy + cz * cz);
}

void prepare(Chart& chart, int m, int D) {
    const int grid = m == 1 ? 2048 : 128;
    double sum = 0.0, mx = 0.0;
    std::size_t cells = 0;
    const int gv = m == 1 ? 1 : grid;
    for (int i = 0; i < grid; ++i) {
        const double u = chart.u0 + (i + 0.5) * (chart.u1 - chart.u0) / grid;
        for (int j = 0; j < gv; ++j) {
            const double v =
                m == 1 ? 0.0 : chart.v0 + (j + 0.5) * (chart.v1 - chart.v0) / gv;
            if (chart.inside && !chart.inside(u, v)) continue;
            const double w = volume_element(chart, m, D, u, v);
            sum += w;
            mx = std::max(mx, w);
            ++cells;
        }
    }
    (void)cells;
    double cell = (chart.u1 - chart.u0) / grid;
    if (m == 2) cell *= (chart.v1 - chart.v0) / gv;
    chart.measure = sum * cell;
    chart.max_element = mx * 1.05;  // safety margin for the grid estimate
}

std::vector<Chart> build_charts(const ManifoldSpec& spec) {
    std::vector<Chart> charts;
    const double tau_pi = 2 * kPi;
    auto p = [&](const std::string& k) { return spec.param(k); };

    switch (spec.family) {
        case ManifoldFamily::ConcentricCircles: {
            for (int c = 0; c < 2; ++c) {
                const double r = c == 0 ? p("r_inner") : p("r_outer");
                charts.push_back({c, 0.0, tau_pi, 0, 0,
                                  [r](double t, double, double* out) {
                                      out[0] = r * std::cos(t);
                                      out[1] = r * std::sin(t);
                                  },
                                  nullptr});
            }
            break;
        }
        case ManifoldFamily::MixtureOfGaussiansCurve: {
            // Each mixture component traces its own density curve; the two
            // curves are vertical translates, so they run parallel at a gap
            // of `separation` along the whole domain. Keep the bumps gentle
            // (small amplitude/spread ratio): on steep flanks the normal
            // distance between translates shrinks below the vertical offset.
            const double amp = p("amplitude"), s = p("spread"), sep = p("separation"),
                         hw = p("half_width");
            for (int c = 0; c < 2; ++c) {
                const double lift = c * sep;
                charts.push_back({c, -hw, hw, 0, 0,
                                  [amp, s, lift](double x, double, double* out) {
                                      out[0] = x;
                                      out[1] = amp * std::exp(-x * x / (2 * s * s)) + lift;
                                  },
                                  nullptr});
            }
            break;
        }
        case ManifoldFamily::Moons: {
            const double a = p("scale"), sep = p("separation");
            charts.push_back({0, 0.0, kPi, 0, 0,
                              [a](double t, double, double* out) {
                                  out[0] = a * std::cos(t);
                                  out[1] = a * std::sin(t);
                              },
                              nullptr});
            charts.push_back({1, 0.0, kPi, 0, 0,
                              [a, sep](double t, double, double* out) {
                                  out[0] = a * (1.0 - std::cos(t));
                                  out[1] = a * (sep - std::sin(t));
                              },
                              nullptr});
            break;
        }
        case ManifoldFamily::SCurve: {
            const double a = p("scale");
            // sweep > 1.5 extends each lobe past the three-quarter mark, so
            // the free ends curl back toward the opposite lobe; the resulting
            // close approach (with a long path along the curve between the two
            // strands) is what makes noisy samples form shortcut edges there.
            const double sweep = p("sweep") * kPi;
            charts.push_back({0, -sweep, sweep, 0, 0,
                              [a](double t, double, double* out) {
                                  const double sgn = t >= 0 ? 1.0 : -1.0;
                                  out[0] = a * std::sin(t);
                                  out[1] = a * sgn * (std::cos(t) - 1.0);
                              },
                              nullptr});
            break;
        }
        case ManifoldFamily::SwissRoll1D: {
            const double s = p("scale");
            charts.push_back({0, p("t_min"), p("t_max"), 0, 0,
                              [s](double t, double, double* out) {
                                  out[0] = s * t * std::cos(t);
                                  out[1] = s * t * std::sin(t);
                              },
                              nullptr});
            break;
        }
        case ManifoldFamily::Cassini: {
            const double a = p("a"), b = p("b");
            if (b <= a) throw InvalidConfig("cassini: need b > a for a single loop");
            charts.push_back({0, 0.0, tau_pi, 0, 0,
                              [a, b](double t, double, double* out) {
                                  const double s2 = std::sin(2 * t);
                                  const double inner =
                                      b * b * b * b - a * a * a * a * s2 * s2;
                                  const double r2 = a * a * std::cos(2 * t) +
                                                    std::sqrt(std::max(inner, 0.0));
                                  const double r = std::sqrt(std::max(r2, 0.0));
                                  out[0] = r * std::cos(t);
                                  out[1] = r * std::sin(t);
                              },
                              nullptr});
            break;
        }
        case ManifoldFamily::ConcentricParabolas: {
            const double c = p("curvature"), gap = p("gap"), hw = p("half_width");
            for (int i = 0; i < 2; ++i) {
                const double shift = i * gap;
                charts.push_back({i, -hw, hw, 0, 0,
                                  [c, shift](double x, double, double* out) {
                                      out[0] = x;
                                      out[1] = c * x * x + shift;
                                  },
                                  nullptr});
            }
            break;
        }
        case ManifoldFamily::ChainedTori: {
            const double R = p("R"), r = p("r"), off = p("offset");
            charts.push_back({0, 0.0, tau_pi, 0.0, tau_pi,
                              [R, r](double u, double v, double* out) {
                                  const double w = R + r * std::cos(v);
                                  out[0] = w * std::cos(u);
                                  out[1] = w * std::sin(u);
                                  out[2] = r * std::sin(v);
                              },
                              nullptr});
            charts.push_back({1, 0.0, tau_pi, 0.0, tau_pi,
                              [R, r, off](double u, double v, double* out) {
                                  const double w = R + r * std::cos(v);
                                  out[0] = off + w * std::cos(u);
                                  out[1] = r * std::sin(v);
                                  out[2] = w * std::sin(u);
                              },
                              nullptr});
            break;
        }
        case ManifoldFamily::ConcentricHyperboloids: {
            const double c = p("c"), h = p("height");
            for (int i = 0; i < 2; ++i) {
                const double a = i == 0 ? p("a_inner") : p("a_outer");
                charts.push_back({i, 0.0, tau_pi, -h, h,
                                  [a, c](double u, double z, double* out) {
                                      const double rho =
                                          a * std::sqrt(1.0 + z * z / (c * c));
                                      out[0] = rho * std::cos(u);
                                      out[1] = rho * std::sin(u);
                                      out[2] = z;
                                  },
                                  nullptr});
            }
            break;
        }
        case ManifoldFamily::HyperboloidParaboloid: {
            const double a = p("a"), c = p("c"), h = p("height");
            const double f = p("focal"), rho_max = p("rho_max"), z0 = p("z_offset");
            charts.push_back({0, 0.0, tau_pi, -h, h,
                              [a, c](double u, double z, double* out) {
                                  const double rho = a * std::sqrt(1.0 + z * z / (c * c));
                                  out[0] = rho * std::cos(u);
                                  out[1] = rho * std::sin(u);
                                  out[2] = z;
                              },
                              nullptr});
            charts.push_back({1, 0.0, tau_pi, 1e-9, rho_max,
                              [f, z0](double u, double rho, double* out) {
                                  out[0] = rho * std::cos(u);
                                  out[1] = rho * std::sin(u);
                                  out[2] = z0 + rho * rho / (2 * f);
                              },
                              nullptr});
            break;
        }
        case ManifoldFamily::AdjacentParaboloids: {
            const double f = p("focal"), rho_max = p("rho_max"), gap = p("gap");
            for (int i = 0; i < 2; ++i) {
                const double shift = i * gap;
                charts.push_back({i, 0.0, tau_pi, 1e-9, rho_max,
                                  [f, shift](double u, double rho, double* out) {
                                      out[0] = rho * std::cos(u);
                                      out[1] = rho * std::sin(u);
                                      out[2] = shift + rho * rho / (2 * f);
                                  },
                                  nullptr});
            }
            break;
        }
        case ManifoldFamily::SwissRoll2D:
        case ManifoldFamily::SwissHole2D: {
            const double t0 = p("t_min"), t1 = p("t_max"), w = p("width");
            std::function<bool(double, double)> inside = nullptr;
            if (spec.family == ManifoldFamily::SwissHole2D) {
                const double ht0 = p("hole_t0"), ht1 = p("hole_t1");
                const double hy0 = p("hole_y0"), hy1 = p("hole_y1");
                inside = [ht0, ht1, hy0, hy1](double t, double y) {
                    return !(t > ht0 && t < ht1 && y > hy0 && y < hy1);
                };
            }
            charts.push_back({0, t0, t1, 0.0, w,
                              [](double t, double y, double* out) {
                                  out[0] = t * std::cos(t);
                                  out[1] = y;
                                  out[2] = t * std::sin(t);
                              },
                              std::move(inside)});
            break;
        }
    }
    return charts;
}

}  // namespace

ManifoldFamily family_from_name(const std::string& name) {
    for (const auto& [fam, info] : family_table())
        if (info.name == name) return fam;
    throw UnsupportedManifold("unknown manifold family: " + name);
}

std::string family_name(ManifoldFamily family) {
    return family_table().at(family).name;
}

int ManifoldSpec::intrinsic_dim() const { return family_table().at(family).m; }
int ManifoldSpec::ambient_dim() const { return family_table().at(family).D; }
int ManifoldSpec::n_components() const {
    return family_table().at(family).components;
}

double ManifoldSpec::param(const std::string& name) const {
    auto it = shape_params.find(name);
    if (it == shape_params.end())
        throw InvalidConfig("missing shape parameter: " + name);
    return it->second;
}

ManifoldSpec make_spec(ManifoldFamily family,
                       const std::map<std::string, double>& overrides) {
    const auto& info = family_table().at(family);
    ManifoldSpec spec{family, info.defaults};
    for (const auto& [k, v] : overrides) {
        if (!spec.shape_params.count(k))
            throw InvalidConfig("unknown shape parameter '" + k + "' for " + info.name);
        if (v <= 0.0 && k.rfind("hole_", 0) != 0 && k != "z_offset")
            throw InvalidConfig("shape parameter must be positive: " + k);
        spec.shape_params[k] = v;
    }
    return spec;
}

PointCloud sample_manifold(const ManifoldSpec& spec, const NoiseModel& noise,
                           std::size_t n, std::uint64_t seed) {
    if (n < 1) throw InvalidConfig("sample_manifold: n must be >= 1");
    if (noise.tau < 0.0 || noise.sigma < 0.0)
        throw InvalidConfig("noise parameters must be nonnegative");
    const int m = spec.intrinsic_dim();
    const int D = spec.ambient_dim();

    auto charts = build_charts(spec);
    double total = 0.0;
    for (auto& chart : charts) {
        prepare(chart, m, D);
        total += chart.measure;
    }

    Rng rng(seed);
    PointCloud cloud;
    cloud.dim = static_cast<std::size_t>(D);
    cloud.points.resize(n * D);
    cloud.base_points.resize(n * D);
    cloud.component.resize(n);

    const bool noisy = noise.tau > 0.0 && noise.sigma > 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        // chart selection proportional to its share of the volume
        double pick = rng.uniform() * total;
        std::size_t ci = 0;
        while (ci + 1 < charts.size() && pick > charts[ci].measure) {
            pick -= charts[ci].measure;
            ++ci;
        }
        const Chart& chart = charts[ci];

        // rejection against the volume element
        double base[3];
        for (;;) {
            const double u = rng.uniform(chart.u0, chart.u1);
            const double v = m == 1 ? 0.0 : rng.uniform(chart.v0, chart.v1);
            if (chart.inside && !chart.inside(u, v)) continue;
            const double w = volume_element(chart, m, D, u, v);
            if (rng.uniform() * chart.max_element <= w) {
                chart.map(u, v, base);
                break;
            }
        }

        double xi[3] = {0, 0, 0};
        if (noisy) {
            for (;;) {
                double norm2 = 0.0;
                for (int d = 0; d < D; ++d) {
                    xi[d] = noise.sigma * rng.normal();
                    norm2 += xi[d] * xi[d];
                }
                if (norm2 <= noise.tau * noise.tau) break;
            }
        }
        for (int d = 0; d < D; ++d) {
            cloud.base_points[i * D + d] = base[d];
            cloud.points[i * D + d] = base[d] + xi[d];
        }
        cloud.component[i] = chart.component;
    }
    return cloud;
}

PointCloud dense_reference(const ManifoldSpec& spec, std::size_t n_ref,
                           std::uint64_t seed) {
    // Stratified inverse-CDF placement over the measure grid instead of iid
    // rejection sampling. The reference exists to carry geodesic distances
    // through a k-NN graph, which must stay connected within each manifold
    // component; iid samples leave occasional arc gaps wider than the k-NN
    // radius with probability ~ n * exp(-k/2), so coverage matters more than
    // independence here.
    if (n_ref < 1) throw InvalidConfig("dense_reference: n_ref must be >= 1");
    const int m = spec.intrinsic_dim();
    const int D = spec.ambient_dim();

    auto charts = build_charts(spec);
    double total = 0.0;
    for (auto& chart : charts) {
        prepare(chart, m, D);
        total += chart.measure;
    }

    // per-chart counts proportional to measure, largest remainder
    std::vector<std::size_t> counts(charts.size(), 0);
    std::vector<std::pair<double, std::size_t>> remainders;
    std::size_t assigned = 0;
    for (std::size_t c = 0; c < charts.size(); ++c) {
        const double exact = static_cast<double>(n_ref) * charts[c].measure / total;
        counts[c] = static_cast<std::size_t>(exact);
        assigned += counts[c];
        remainders.push_back({exact - std::floor(exact), c});
    }
    std::sort(remainders.rbegin(), remainders.rend());
    for (std::size_t r = 0; assigned < n_ref; ++r, ++assigned)
        ++counts[remainders[r % remainders.size()].second];

    Rng rng(seed);
    PointCloud cloud;
    cloud.dim = static_cast<std::size_t>(D);
    cloud.points.reserve(n_ref * D);

    for (std::size_t c = 0; c < charts.size(); ++c) {
        const Chart& chart = charts[c];
        if (counts[c] == 0) continue;

        // cumulative measure over the evaluation grid cells
        const int grid = m == 1 ? 2048 : 128;
        const int gv = m == 1 ? 1 : grid;
        const double du = (chart.u1 - chart.u0) / grid;
        const double dv = m == 1 ? 0.0 : (chart.v1 - chart.v0) / gv;
        std::vector<double> cum;
        cum.reserve(static_cast<std::size_t>(grid) * gv);
        double sum = 0.0;
        for (int i = 0; i < grid; ++i) {
            const double u = chart.u0 + (i + 0.5) * du;
            for (int j = 0; j < gv; ++j) {
                const double v = m == 1 ? 0.0 : chart.v0 + (j + 0.5) * dv;
                double w = 0.0;
                if (!chart.inside || chart.inside(u, v))
                    w = volume_element(chart, m, D, u, v);
                sum += w;
                cum.push_back(sum);
            }
        }

        double base[3];
        for (std::size_t p = 0; p < counts[c]; ++p) {
            const double target =
                (static_cast<double>(p) + 0.5) / static_cast<double>(counts[c]) * sum;
            const auto it = std::lower_bound(cum.begin(), cum.end(), target);
            auto cell = static_cast<std::size_t>(it - cum.begin());
            // ties can land on a zero-weight (excluded) cell; skip past it
            while (cell + 1 < cum.size() &&
                   cum[cell] <= (cell == 0 ? 0.0 : cum[cell - 1]))
                ++cell;
            const double below = cell == 0 ? 0.0 : cum[cell - 1];
            const double frac = (target - below) / (cum[cell] - below);
            const int ci = static_cast<int>(cell) / gv;
            const int cj = static_cast<int>(cell) % gv;
            double u = chart.u0 + (ci + frac) * du;
            double v = m == 1 ? 0.0 : chart.v0 + (cj + rng.uniform()) * dv;
            if (chart.inside && !chart.inside(u, v)) {
                // boundary cell: jitter again, else fall back to the cell
                // center, which is admissible since the cell carried weight
                for (int attempt = 0; attempt < 64; ++attempt) {
                    u = chart.u0 + (ci + rng.uniform()) * du;
                    v = m == 1 ? 0.0 : chart.v0 + (cj + rng.uniform()) * dv;
                    if (chart.inside(u, v)) break;
                }
                if (!chart.inside(u, v)) {
                    u = chart.u0 + (ci + 0.5) * du;
                    v = m == 1 ? 0.0 : chart.v0 + (cj + 0.5) * dv;
                }
            }
            chart.map(u, v, base);
            for (int d = 0; d < D; ++d) cloud.points.push_back(base[d]);
            cloud.component.push_back(chart.component);
        }
    }
    cloud.base_points = cloud.points;
    return cloud;
}

}  // namespace orcml
