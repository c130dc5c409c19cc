#include "fatpart/config.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fatpart {

using nlohmann::json;

ModelConfig model_config_from_json(const std::string& text, const std::string& base_dir) {
    json j = json::parse(text);
    ModelConfig cfg;
    if (j.contains("graph_file")) {
        std::filesystem::path p = j.at("graph_file").get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        auto [g, a] = load_graph_file(p.string());
        cfg.graph = std::move(g);
        cfg.assignment = std::move(a);
    } else {
        auto [g, a] = graph_from_json(j.at("graph").dump());
        cfg.graph = std::move(g);
        cfg.assignment = std::move(a);
    }
    cfg.N = cfg.assignment.N;
    for (const auto& s : j.at("face_specs"))
        cfg.face_specs.push_back(Specialization::parse(s.get<std::string>()));
    cfg.cutoff = j.at("cutoff").get<int>();
    if (j.contains("averaged_vertices"))
        for (const auto& [key, val] : j.at("averaged_vertices").items())
            cfg.averaged_vertices[std::stoi(key)] = EnsembleSpec::parse(val.get<std::string>());
    return cfg;
}

ModelConfig load_model_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return model_config_from_json(buf.str(), std::filesystem::path(path).parent_path().string());
}

}  // namespace fatpart
