#pragma once

// Internal JSON encode/decode shared by config parsing and report emission.

#include <json.hpp>

#include "driftkit/experiment.hpp"
#include "driftkit/generator.hpp"

namespace driftkit::detail {

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

nlohmann::json stream_spec_to_json(const StreamSpec& spec);
StreamSpec stream_spec_from_json(const nlohmann::json& j);

}  // namespace driftkit::detail
