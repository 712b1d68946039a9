#include "driftkit/sweep.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "driftkit/config.hpp"
#include "driftkit/errors.hpp"

namespace driftkit {

namespace {

using nlohmann::json;

double as_double(const SweepValue& value) {
    if (const auto* i = std::get_if<std::int64_t>(&value)) return static_cast<double>(*i);
    return std::get<double>(value);
}

std::int64_t as_int(const SweepValue& value, const std::string& param) {
    if (const auto* i = std::get_if<std::int64_t>(&value)) return *i;
    throw ConfigError("sweep: parameter '" + param + "' needs an integer value");
}

void apply_one(ExperimentConfig& config, const std::string& param, const SweepValue& value) {
    if (param == "lambda") {
        auto* cd = std::get_if<ChangeDetectPolicy>(&config.retrain);
        if (!cd) throw ConfigError("sweep: 'lambda' needs a change_detect retrain policy");
        cd->lambda = as_double(value);
    } else if (param == "epsilon") {
        auto* cs = std::get_if<ClusterSelectPolicy>(&config.selection);
        if (!cs) throw ConfigError("sweep: 'epsilon' needs a cluster_select selection policy");
        cs->epsilon = as_double(value);
    } else if (param == "budget_fraction") {
        if (auto* u = std::get_if<UncertaintyPolicy>(&config.selection)) {
            u->budget_fraction = as_double(value);
        } else if (auto* cs = std::get_if<ClusterSelectPolicy>(&config.selection)) {
            cs->budget_fraction = as_double(value);
        } else {
            throw ConfigError(
                "sweep: 'budget_fraction' needs an uncertainty or cluster_select policy");
        }
    } else if (param == "m") {
        auto* sw = std::get_if<SlidingWindowPolicy>(&config.selection);
        if (!sw) throw ConfigError("sweep: 'm' needs a sliding_window selection policy");
        sw->m = static_cast<std::size_t>(as_int(value, param));
    } else if (param == "k_override") {
        auto* cs = std::get_if<ClusterSelectPolicy>(&config.selection);
        if (!cs) throw ConfigError("sweep: 'k_override' needs a cluster_select selection policy");
        cs->k_override = static_cast<int>(as_int(value, param));
    } else if (param == "window_len_months") {
        config.window_len_months = static_cast<int>(as_int(value, param));
    } else if (param == "training_period_months") {
        config.training_period_months = static_cast<int>(as_int(value, param));
    } else if (param == "seed") {
        config.seed = static_cast<std::uint64_t>(as_int(value, param));
    } else {
        throw ConfigError("sweep: unknown parameter '" + param + "'");
    }
}

}  // namespace

std::string to_string(const SweepValue& value) {
    if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
    return json(std::get<double>(value)).dump();
}

SweepGrid parse_sweep_grid(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("sweep grid: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("sweep grid: expected a JSON object");
    SweepGrid grid;
    for (const auto& [param, values] : j.items()) {
        if (!values.is_array() || values.empty()) {
            throw ConfigError("sweep grid: '" + param + "' must be a non-empty array");
        }
        std::vector<SweepValue> parsed;
        for (const json& v : values) {
            if (v.is_number_integer()) {
                parsed.emplace_back(v.get<std::int64_t>());
            } else if (v.is_number_float()) {
                parsed.emplace_back(v.get<double>());
            } else {
                throw ConfigError("sweep grid: '" + param + "' values must be numbers");
            }
        }
        grid.entries.emplace_back(param, std::move(parsed));
    }
    return grid;
}

SweepGrid load_sweep_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_sweep_grid(buffer.str());
}

ExperimentConfig apply_overrides(
    const ExperimentConfig& base,
    const std::vector<std::pair<std::string, SweepValue>>& assignment) {
    ExperimentConfig config = base;
    std::string id;
    for (const auto& [param, value] : assignment) {
        apply_one(config, param, value);
        if (!id.empty()) id += ';';
        id += param + "=" + to_string(value);
    }
    config.experiment_id = id.empty() ? base.experiment_id : id;
    return config;
}

std::vector<ExperimentReport> run_sweep(const ExperimentConfig& base, const SweepGrid& grid) {
    std::vector<ExperimentReport> reports;
    if (grid.entries.empty()) return reports;

    const std::vector<Sample> stream = resolve_stream(base);

    std::vector<std::size_t> index(grid.entries.size(), 0);
    for (;;) {
        std::vector<std::pair<std::string, SweepValue>> assignment;
        assignment.reserve(grid.entries.size());
        for (std::size_t i = 0; i < grid.entries.size(); ++i) {
            assignment.emplace_back(grid.entries[i].first, grid.entries[i].second[index[i]]);
        }
        reports.push_back(run_experiment(apply_overrides(base, assignment), stream));

        // Advance the mixed-radix counter, last parameter fastest.
        std::size_t pos = grid.entries.size();
        while (pos > 0) {
            --pos;
            if (++index[pos] < grid.entries[pos].second.size()) break;
            index[pos] = 0;
            if (pos == 0) return reports;
        }
    }
}

}  // namespace driftkit
