#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "lfm/autolf/auto_lf.hpp"
#include "lfm/blocking/blocking.hpp"
#include "lfm/model/label_model.hpp"

namespace lfm::service {

struct BlockingConfig {
  std::size_t k = 128;
  std::size_t bands = 64;
  std::size_t rows = 2;
  blocking::SignatureSource mode = blocking::SignatureSource::builtin_minhash;
  std::string embedding_file;  // imported-embedding mode only
  std::uint64_t seed = 17;
};

struct AutoLfConfig {
  autolf::Grid grid = autolf::default_grid();
  double target_precision = 0.9;
  std::size_t max_lfs = 5;
  Side reference = Side::left;
};

struct ModelConfig {
  model::FitConfig fit;
  std::uint64_t seed = 7;  // precision-sample draws
};

struct ProjectConfig {
  BlockingConfig blocking;
  AutoLfConfig auto_lf;
  ModelConfig model;
};

nlohmann::json to_json(const ProjectConfig& c);
// Missing keys keep their defaults; malformed values throw Error{parse_error}.
ProjectConfig config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const autolf::Grid& g);
autolf::Grid grid_from_json(const nlohmann::json& j, autolf::Grid base = autolf::default_grid());

}  // namespace lfm::service
