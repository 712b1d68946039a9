#include "driftkit/config.hpp"

#include <fstream>
#include <sstream>

#include "driftkit/errors.hpp"
#include "driftkit/stream_io.hpp"
#include "json_codec.hpp"

namespace driftkit {

namespace detail {

namespace {

using nlohmann::json;

void require_keys(const json& j, std::initializer_list<const char*> known,
                  const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

ClassLabel label_from_string(const std::string& text, const std::string& where) {
    if (text == "goodware") return ClassLabel::Goodware;
    if (text == "malware") return ClassLabel::Malware;
    throw ConfigError(where + ": unknown class '" + text + "'");
}

json detector_to_json(const DetectorSpec& spec) {
    json j;
    if (spec.kind == DetectorKind::NearestCentroid) {
        j["kind"] = "nearest_centroid";
    } else {
        j["kind"] = "logistic_regression";
        j["learning_rate"] = spec.learning_rate;
        j["epochs"] = spec.epochs;
        j["l2"] = spec.l2;
    }
    return j;
}

DetectorSpec detector_from_json(const json& j) {
    require_keys(j, {"kind", "learning_rate", "epochs", "l2"}, "detector");
    DetectorSpec spec;
    const std::string kind = j.value("kind", "nearest_centroid");
    if (kind == "nearest_centroid") {
        spec.kind = DetectorKind::NearestCentroid;
    } else if (kind == "logistic_regression") {
        spec.kind = DetectorKind::LogisticRegression;
        spec.learning_rate = j.value("learning_rate", spec.learning_rate);
        spec.epochs = j.value("epochs", spec.epochs);
        spec.l2 = j.value("l2", spec.l2);
    } else {
        throw ConfigError("detector: unknown kind '" + kind + "'");
    }
    return spec;
}

json retrain_to_json(const RetrainPolicy& policy) {
    json j;
    if (std::holds_alternative<PeriodicPolicy>(policy)) {
        j["policy"] = "periodic";
    } else if (const auto* cd = std::get_if<ChangeDetectPolicy>(&policy)) {
        j["policy"] = "change_detect";
        j["lambda"] = cd->lambda;
    } else {
        j["policy"] = "static";
    }
    return j;
}

RetrainPolicy retrain_from_json(const json& j) {
    require_keys(j, {"policy", "lambda"}, "retrain");
    const std::string policy = j.value("policy", "periodic");
    if (policy == "periodic") return PeriodicPolicy{};
    if (policy == "static") return StaticPolicy{};
    if (policy == "change_detect") {
        ChangeDetectPolicy cd;
        cd.lambda = j.value("lambda", cd.lambda);
        return cd;
    }
    throw ConfigError("retrain: unknown policy '" + policy + "'");
}

json selection_to_json(const SelectionPolicy& policy) {
    json j;
    if (std::holds_alternative<AllDataPolicy>(policy)) {
        j["policy"] = "all_data";
    } else if (const auto* sw = std::get_if<SlidingWindowPolicy>(&policy)) {
        j["policy"] = "sliding_window";
        j["m"] = sw->m;
    } else if (const auto* u = std::get_if<UncertaintyPolicy>(&policy)) {
        j["policy"] = "uncertainty";
        j["budget_fraction"] = u->budget_fraction;
    } else {
        const auto& cs = std::get<ClusterSelectPolicy>(policy);
        j["policy"] = "cluster_select";
        j["epsilon"] = cs.epsilon;
        j["budget_fraction"] = cs.budget_fraction;
        if (cs.k_override) j["k_override"] = *cs.k_override;
    }
    return j;
}

SelectionPolicy selection_from_json(const json& j) {
    require_keys(j, {"policy", "m", "budget_fraction", "epsilon", "k_override"}, "selection");
    const std::string policy = j.value("policy", "all_data");
    if (policy == "all_data") return AllDataPolicy{};
    if (policy == "sliding_window") {
        SlidingWindowPolicy sw;
        sw.m = j.value("m", sw.m);
        return sw;
    }
    if (policy == "uncertainty") {
        UncertaintyPolicy u;
        u.budget_fraction = j.value("budget_fraction", u.budget_fraction);
        return u;
    }
    if (policy == "cluster_select") {
        ClusterSelectPolicy cs;
        cs.epsilon = j.value("epsilon", cs.epsilon);
        cs.budget_fraction = j.value("budget_fraction", cs.budget_fraction);
        if (j.contains("k_override")) cs.k_override = j.at("k_override").get<int>();
        return cs;
    }
    throw ConfigError("selection: unknown policy '" + policy + "'");
}

}  // namespace

json stream_spec_to_json(const StreamSpec& spec) {
    json j;
    j["feature_dim"] = spec.feature_dim;
    j["months"] = spec.months;
    j["goodware_per_month"] = spec.goodware_per_month;
    j["malware_per_month"] = spec.malware_per_month;
    j["noise_sigma"] = spec.noise_sigma;
    j["seed"] = spec.seed;
    json protos = json::array();
    for (const Prototype& p : spec.prototypes) {
        json pj;
        pj["center"] = p.center;
        pj["class"] = to_string(p.label);
        pj["active_from"] = p.active_from;
        pj["active_to"] = p.active_to;
        pj["weight"] = p.weight;
        protos.push_back(std::move(pj));
    }
    j["prototypes"] = std::move(protos);
    return j;
}

StreamSpec stream_spec_from_json(const json& j) {
    require_keys(j,
                 {"feature_dim", "months", "goodware_per_month", "malware_per_month",
                  "noise_sigma", "seed", "prototypes"},
                 "stream spec");
    StreamSpec spec;
    spec.feature_dim = j.value("feature_dim", spec.feature_dim);
    spec.months = j.value("months", spec.months);
    spec.goodware_per_month = j.value("goodware_per_month", spec.goodware_per_month);
    spec.malware_per_month = j.value("malware_per_month", spec.malware_per_month);
    spec.noise_sigma = j.value("noise_sigma", spec.noise_sigma);
    spec.seed = j.value("seed", spec.seed);
    if (!j.contains("prototypes") || !j.at("prototypes").is_array()) {
        throw InvalidSpecError("stream spec: 'prototypes' array is required");
    }
    for (const json& pj : j.at("prototypes")) {
        require_keys(pj, {"center", "class", "active_from", "active_to", "weight"},
                     "stream spec prototype");
        Prototype p;
        if (!pj.contains("center") || !pj.at("center").is_array()) {
            throw InvalidSpecError("stream spec: prototype 'center' array is required");
        }
        p.center = pj.at("center").get<std::vector<double>>();
        p.label = label_from_string(pj.value("class", "goodware"), "stream spec prototype");
        p.active_from = pj.value("active_from", p.active_from);
        p.active_to = pj.value("active_to", p.active_to);
        p.weight = pj.value("weight", p.weight);
        spec.prototypes.push_back(std::move(p));
    }
    return spec;
}

json config_to_json(const ExperimentConfig& config) {
    json j;
    j["experiment_id"] = config.experiment_id;
    j["detector"] = detector_to_json(config.detector);
    j["retrain"] = retrain_to_json(config.retrain);
    j["selection"] = selection_to_json(config.selection);
    j["window_len_months"] = config.window_len_months;
    j["training_period_months"] = config.training_period_months;
    j["seed"] = config.seed;
    json stream;
    if (!config.stream_file.empty()) stream["file"] = config.stream_file;
    if (config.stream_spec) stream["spec"] = stream_spec_to_json(*config.stream_spec);
    j["stream"] = std::move(stream);
    if (!config.output_path.empty()) j["output"] = config.output_path;
    return j;
}

ExperimentConfig config_from_json(const json& j) {
    require_keys(j,
                 {"experiment_id", "detector", "retrain", "selection", "window_len_months",
                  "training_period_months", "seed", "stream", "output"},
                 "config");
    ExperimentConfig config;
    config.experiment_id = j.value("experiment_id", config.experiment_id);
    if (j.contains("detector")) config.detector = detector_from_json(j.at("detector"));
    if (j.contains("retrain")) config.retrain = retrain_from_json(j.at("retrain"));
    if (j.contains("selection")) config.selection = selection_from_json(j.at("selection"));
    config.window_len_months = j.value("window_len_months", config.window_len_months);
    config.training_period_months =
        j.value("training_period_months", config.training_period_months);
    config.seed = j.value("seed", config.seed);
    if (j.contains("stream")) {
        const json& stream = j.at("stream");
        require_keys(stream, {"file", "spec"}, "config stream");
        if (stream.contains("file")) config.stream_file = stream.at("file").get<std::string>();
        if (stream.contains("spec")) config.stream_spec = stream_spec_from_json(stream.at("spec"));
    }
    config.output_path = j.value("output", config.output_path);
    return config;
}

}  // namespace detail

namespace {

nlohmann::json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(what + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    return detail::config_from_json(parse_json_text(json_text, "config"));
}

ExperimentConfig load_experiment_config(const std::string& path) {
    return parse_experiment_config(read_file(path));
}

StreamSpec parse_stream_spec(const std::string& json_text) {
    return detail::stream_spec_from_json(parse_json_text(json_text, "stream spec"));
}

StreamSpec load_stream_spec(const std::string& path) {
    return parse_stream_spec(read_file(path));
}

std::vector<Sample> resolve_stream(const ExperimentConfig& config) {
    if (!config.stream_file.empty() && config.stream_spec) {
        throw ConfigError("config: set either stream.file or stream.spec, not both");
    }
    if (!config.stream_file.empty()) {
        return load_stream(config.stream_file);
    }
    if (config.stream_spec) {
        return generate_synthetic_stream(*config.stream_spec);
    }
    throw ConfigError("config: no input stream (set stream.file or stream.spec)");
}

}  // namespace driftkit
