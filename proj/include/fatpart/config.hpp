#pragma once

#include "fatpart/series.hpp"

#include <string>

namespace fatpart {

// Model configuration file: JSON with either an inline "graph" object (the
// graph-file schema) or a "graph_file" path, plus "face_specs" (spec strings,
// one per face), optional "averaged_vertices" {vertex index -> ensemble
// string}, and "cutoff".
ModelConfig load_model_config(const std::string& path);
ModelConfig model_config_from_json(const std::string& text, const std::string& base_dir);

}  // namespace fatpart
