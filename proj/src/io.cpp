#include "orcml/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace orcml {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.precision(17);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    return in;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace

void write_point_cloud_csv(const std::string& path, const PointCloud& cloud) {
    auto out = open_out(path);
    const std::size_t D = cloud.dim;
    for (std::size_t d = 0; d < D; ++d) out << "x" << d << ",";
    for (std::size_t d = 0; d < D; ++d) out << "bx" << d << ",";
    out << "component\n";
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (std::size_t d = 0; d < D; ++d) out << cloud.points[i * D + d] << ",";
        for (std::size_t d = 0; d < D; ++d) out << cloud.base_points[i * D + d] << ",";
        out << cloud.component[i] << "\n";
    }
}

PointCloud read_point_cloud_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty point-cloud file: " + path);
    const auto header = split_csv(line);
    if (header.size() < 5 || header.back() != "component")
        throw IoError("bad point-cloud header in " + path);
    const std::size_t D = (header.size() - 1) / 2;

    PointCloud cloud;
    cloud.dim = D;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 2 * D + 1)
            throw IoError("bad point-cloud row in " + path);
        for (std::size_t d = 0; d < D; ++d)
            cloud.points.push_back(std::stod(fields[d]));
        for (std::size_t d = 0; d < D; ++d)
            cloud.base_points.push_back(std::stod(fields[D + d]));
        cloud.component.push_back(std::stoi(fields[2 * D]));
    }
    if (cloud.size() == 0) throw IoError("no points in " + path);
    return cloud;
}

void write_edge_csv(const std::string& path, const NeighborGraph& graph,
                    const EdgeLabelSet* labels, const CurvatureMap* curvatures) {
    auto out = open_out(path);
    out << "u,v,weight";
    if (labels) out << ",label";
    if (curvatures) out << ",kappa";
    out << "\n";
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        const Edge& e = graph.edges()[i];
        out << e.u << "," << e.v << "," << e.weight;
        if (labels)
            out << ","
                << (labels->labels[i] == EdgeLabel::Shortcut ? "shortcut" : "good");
        if (curvatures) {
            out << ",";
            if (!is_indeterminate(curvatures->kappa[i])) out << curvatures->kappa[i];
        }
        out << "\n";
    }
}

NeighborGraph read_edge_csv(const std::string& path, std::size_t n_vertices) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty edge file: " + path);
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() < 3) throw IoError("bad edge row in " + path);
        const auto u = std::stoul(fields[0]);
        const auto v = std::stoul(fields[1]);
        if (u >= n_vertices || v >= n_vertices)
            throw IoError("edge vertex out of range in " + path);
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                         std::stod(fields[2])});
    }
    return NeighborGraph(n_vertices, std::move(edges));
}

void write_prune_json(const std::string& path, const NeighborGraph& graph,
                      const PruneConfig& config, const PruneResult& result) {
    nlohmann::json j;
    const char* policy_names[] = {"per-edge-weight", "fixed-epsilon", "max-edge-weight"};
    j["config"] = {
        {"delta", config.delta},
        {"lambda", config.lambda},
        {"beta", config.beta},
        {"eps_policy", policy_names[static_cast<int>(config.eps_policy)]},
        {"fixed_eps", config.fixed_eps},
        {"infinite_distance_removes", config.infinite_distance_removes},
    };
    j["thresholds"] = {{"kappa", candidate_threshold(config.delta)}};
    auto& removed = j["removed"] = nlohmann::json::array();
    for (std::size_t i : result.removed) {
        const Edge& e = graph.edges()[i];
        removed.push_back({e.u, e.v});
    }
    auto& audit = j["audit"] = nlohmann::json::array();
    for (const auto& rec : result.audit) {
        nlohmann::json entry = {
            {"u", rec.u},       {"v", rec.v},
            {"kappa", rec.kappa}, {"threshold", rec.threshold},
            {"removed", rec.removed},
        };
        if (std::isinf(rec.d_gprime))
            entry["d_gprime"] = "inf";
        else
            entry["d_gprime"] = rec.d_gprime;
        audit.push_back(std::move(entry));
    }
    open_out(path) << j.dump(2) << "\n";
}

void write_report_json(const std::string& path, const EvalReport& report) {
    nlohmann::json j = {
        {"pct_good_removed", report.pct_good_removed},
        {"pct_shortcut_removed", report.pct_shortcut_removed},
        {"good_total", report.good_total},
        {"shortcut_total", report.shortcut_total},
        {"good_removed", report.good_removed},
        {"shortcut_removed", report.shortcut_removed},
    };
    open_out(path) << j.dump(2) << "\n";
}

void write_sweep_csv(const std::string& path, const SweepTable& table) {
    auto out = open_out(path);
    out << "swept_value,seed,metric,value\n";
    for (const auto& row : table.rows)
        out << row.swept_value << "," << row.seed << "," << row.metric << ","
            << row.value << "\n";
}

}  // namespace orcml
