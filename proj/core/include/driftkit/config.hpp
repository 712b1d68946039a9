#pragma once

#include <string>
#include <vector>

#include "driftkit/experiment.hpp"
#include "driftkit/generator.hpp"

namespace driftkit {

// JSON experiment configuration. All experiment parameters are file-based so
// a run can be replayed from its config alone; unspecified fields take the
// benchmark defaults (3-month windows, 12-month training period, lambda
// 0.02, epsilon 0.01, budget 0.70).
ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig parse_experiment_config(const std::string& json_text);

// JSON generator spec for `gen`.
StreamSpec load_stream_spec(const std::string& path);
StreamSpec parse_stream_spec(const std::string& json_text);

// Loads the configured stream: from stream_file when set, else generated
// from the inline stream_spec.
std::vector<Sample> resolve_stream(const ExperimentConfig& config);

}  // namespace driftkit
