#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "driftkit/clustering.hpp"
#include "driftkit/detector.hpp"
#include "driftkit/generator.hpp"
#include "driftkit/page_hinkley.hpp"
#include "driftkit/selection.hpp"
#include "driftkit/types.hpp"

namespace driftkit {

// When to retrain: every window, on a Page-Hinkley signal, or never
// (the no-adaptation baseline that shows raw model decay).
struct PeriodicPolicy {
    bool operator==(const PeriodicPolicy&) const = default;
};

struct ChangeDetectPolicy {
    double lambda = 0.02;
    bool operator==(const ChangeDetectPolicy&) const = default;
};

struct StaticPolicy {
    bool operator==(const StaticPolicy&) const = default;
};

using RetrainPolicy = std::variant<PeriodicPolicy, ChangeDetectPolicy, StaticPolicy>;

// Declarative description of one run. The stream comes either from a file
// or from an inline generator spec; exactly one must be set when the config
// is resolved by the harness.
struct ExperimentConfig {
    std::string experiment_id = "run";
    DetectorSpec detector;
    RetrainPolicy retrain = PeriodicPolicy{};
    SelectionPolicy selection = AllDataPolicy{};
    int window_len_months = 3;
    int training_period_months = 12;
    std::uint64_t seed = 0;
    std::string stream_file;
    std::optional<StreamSpec> stream_spec;
    std::string output_path;

    bool operator==(const ExperimentConfig&) const = default;
};

struct WindowRecord {
    std::size_t window = 0;
    MetricsRecord metrics;
    bool retrain_signal = false;  // the policy asked for a retrain
    bool retrained = false;       // a replacement model was actually trained
    std::size_t train_size = 0;   // size of the set the replacement trained on
    std::int64_t manual_labels = 0;
    std::int64_t automatic_labels = 0;
    std::optional<NoveltyReport> novelty;  // ClusterSelect runs only

    bool operator==(const WindowRecord&) const = default;
};

struct ExperimentTotals {
    std::size_t windows = 0;
    std::int64_t retrain_count = 0;
    std::int64_t skipped_retrains = 0;  // signal raised but too little data after balancing
    std::int64_t initial_manual_labels = 0;
    std::int64_t manual_labels = 0;  // includes the initial training period
    std::int64_t automatic_labels = 0;
    double mean_a_mean = 0.0;
    std::size_t cluster_count_end = 0;

    bool operator==(const ExperimentTotals&) const = default;
};

struct ExperimentReport {
    int schema_version = 1;
    std::string experiment_id;
    ExperimentConfig config;
    std::vector<WindowRecord> windows;
    ExperimentTotals totals;

    bool operator==(const ExperimentReport&) const = default;
};

// Downsamples the majority class to the minority count, uniformly and
// seeded, preserving stream order. Evaluation data is never balanced; this
// is applied to training sets only.
TrainingSet balance_dataset(const TrainingSet& data, std::uint64_t seed);

struct RetrainDecision {
    bool retrain = false;
    PageHinkleyState ph_state;
};

// Periodic retrains every window, Static never; ChangeDetect feeds the
// window's A_mean to the Page-Hinkley test and retrains on a signal.
RetrainDecision retrain_decision(const RetrainPolicy& policy,
                                 const PageHinkleyState& ph_state,
                                 const MetricsRecord& window_metrics);

// Prequential (test-then-train) run: the first training_period_months of the
// stream train the offline model, every later window is predicted with the
// current model before any retraining may replace it. Deterministic given
// the config seed.
ExperimentReport run_experiment(const ExperimentConfig& config,
                                const std::vector<Sample>& stream);

}  // namespace driftkit
