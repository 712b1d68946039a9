#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "driftkit/experiment.hpp"

namespace driftkit {

using SweepValue = std::variant<std::int64_t, double>;

std::string to_string(const SweepValue& value);

// Parameter grid for a sweep: the cartesian product of the listed values,
// each applied on top of the base config. Supported parameters: lambda,
// epsilon, budget_fraction, m, k_override, window_len_months,
// training_period_months, seed. A parameter must match the base config's
// policies (sweeping lambda needs a change_detect config, and so on).
struct SweepGrid {
    std::vector<std::pair<std::string, std::vector<SweepValue>>> entries;
};

SweepGrid load_sweep_grid(const std::string& path);
SweepGrid parse_sweep_grid(const std::string& json_text);

// Returns a copy of the base config with one grid assignment applied and an
// experiment id like "lambda=0.02;m=100" appended.
ExperimentConfig apply_overrides(
    const ExperimentConfig& base,
    const std::vector<std::pair<std::string, SweepValue>>& assignment);

// Runs one experiment per grid point over the same stream with the same
// seed, in grid order. An empty grid yields no reports.
std::vector<ExperimentReport> run_sweep(const ExperimentConfig& base, const SweepGrid& grid);

}  // namespace driftkit
