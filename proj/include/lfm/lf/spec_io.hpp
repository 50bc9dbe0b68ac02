#pragma once

#include <string>

#include <json.hpp>

#include "lfm/lf/spec.hpp"

namespace lfm::lf {

// Structured form used for the lfs/ store and the HTTP API. Keys are emitted
// in sorted order, which makes dump() canonical.
nlohmann::json to_json(const LabelFunctionSpec& spec);
nlohmann::json to_json(const text::PipelineConfig& config);

// Throws Error{parse_error} on structural problems (missing keys, wrong
// types, unknown enum text). Semantic checks live in validate().
LabelFunctionSpec spec_from_json(const nlohmann::json& j);
text::PipelineConfig pipeline_from_json(const nlohmann::json& j);

std::string canonical_text(const LabelFunctionSpec& spec);
LabelFunctionSpec parse_spec_text(const std::string& text);

}  // namespace lfm::lf
