#include "driftkit/experiment.hpp"

#include <algorithm>
#include <string>

#include "driftkit/errors.hpp"
#include "driftkit/metrics.hpp"
#include "driftkit/oracle.hpp"
#include "driftkit/rng.hpp"

namespace driftkit {

TrainingSet balance_dataset(const TrainingSet& data, std::uint64_t seed) {
    std::vector<std::size_t> good_idx;
    std::vector<std::size_t> mal_idx;
    for (std::size_t i = 0; i < data.samples().size(); ++i) {
        (data.samples()[i].label == ClassLabel::Malware ? mal_idx : good_idx).push_back(i);
    }
    if (good_idx.empty() || mal_idx.empty()) {
        throw SingleClassDataError("balance_dataset: both classes must be present");
    }
    if (good_idx.size() == mal_idx.size()) return data;

    auto& majority = good_idx.size() > mal_idx.size() ? good_idx : mal_idx;
    const std::size_t keep = std::min(good_idx.size(), mal_idx.size());

    Rng rng(seed);
    for (std::size_t i = 0; i < keep; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(majority.size() - i));
        std::swap(majority[i], majority[j]);
    }
    std::vector<bool> selected(data.samples().size(), false);
    for (std::size_t i = 0; i < keep; ++i) selected[majority[i]] = true;
    auto& minority = good_idx.size() > mal_idx.size() ? mal_idx : good_idx;
    for (const std::size_t i : minority) selected[i] = true;

    TrainingSet out(data.provenance());
    for (std::size_t i = 0; i < data.samples().size(); ++i) {
        if (selected[i]) out.add(data.samples()[i]);
    }
    return out;
}

RetrainDecision retrain_decision(const RetrainPolicy& policy,
                                 const PageHinkleyState& ph_state,
                                 const MetricsRecord& window_metrics) {
    if (std::holds_alternative<PeriodicPolicy>(policy)) {
        return RetrainDecision{true, ph_state};
    }
    if (std::holds_alternative<StaticPolicy>(policy)) {
        return RetrainDecision{false, ph_state};
    }
    const PhUpdateResult update = ph_update(ph_state, window_metrics.a_mean);
    return RetrainDecision{update.triggered, update.state};
}

namespace {

struct ClassCounts {
    std::size_t goodware = 0;
    std::size_t malware = 0;
};

ClassCounts count_classes(const TrainingSet& data) {
    ClassCounts counts;
    for (const LabeledSample& e : data.samples()) {
        (e.label == ClassLabel::Malware ? counts.malware : counts.goodware) += 1;
    }
    return counts;
}

void validate_config(const ExperimentConfig& config) {
    if (config.window_len_months < 1) {
        throw ConfigError("config: window_len_months must be >= 1");
    }
    if (config.training_period_months < 1) {
        throw ConfigError("config: training_period_months must be >= 1");
    }
    if (const auto* sw = std::get_if<SlidingWindowPolicy>(&config.selection)) {
        if (sw->m < 1) throw ConfigError("config: sliding window m must be >= 1");
    }
    if (const auto* u = std::get_if<UncertaintyPolicy>(&config.selection)) {
        if (!(u->budget_fraction > 0.0) || u->budget_fraction > 1.0) {
            throw ConfigError("config: uncertainty budget_fraction must be in (0,1]");
        }
    }
    if (const auto* cs = std::get_if<ClusterSelectPolicy>(&config.selection)) {
        if (!(cs->budget_fraction > 0.0) || cs->budget_fraction > 1.0) {
            throw ConfigError("config: cluster_select budget_fraction must be in (0,1]");
        }
        if (cs->epsilon < 0.0) throw ConfigError("config: epsilon must be >= 0");
        if (cs->k_override && *cs->k_override < 1) {
            throw ConfigError("config: k_override must be >= 1");
        }
    }
    if (const auto* cd = std::get_if<ChangeDetectPolicy>(&config.retrain)) {
        if (!(cd->lambda > 0.0)) throw ConfigError("config: lambda must be > 0");
    }
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config,
                                const std::vector<Sample>& stream) {
    validate_config(config);
    if (stream.empty()) throw ConfigError("run_experiment: empty stream");

    const std::int64_t first_month = stream.front().timestamp;
    const std::int64_t train_end = first_month + config.training_period_months;
    std::vector<Sample> train_raw;
    std::vector<Sample> eval_stream;
    std::int64_t prev_ts = first_month;
    for (const Sample& s : stream) {
        if (s.timestamp < prev_ts) {
            throw UnorderedStreamError("run_experiment: stream is not chronologically ordered");
        }
        prev_ts = s.timestamp;
        (s.timestamp < train_end ? train_raw : eval_stream).push_back(s);
    }
    if (train_raw.empty()) throw ConfigError("run_experiment: empty training period");
    if (eval_stream.empty()) throw ConfigError("run_experiment: no data after training period");

    LabelOracle oracle(stream);

    TrainingSet initial("initial");
    for (const Sample& s : train_raw) {
        initial.add(LabeledSample{s, oracle.label_manual(s), LabelSource::Manual});
    }
    const std::int64_t initial_manual = oracle.manual_labels();

    const TrainingSet balanced_initial = balance_dataset(initial, derive_seed(config.seed, 0));
    DetectorModel model = train_detector(config.detector, balanced_initial);
    model.trained_at = -1;

    TrainingSet prev_train = balanced_initial;
    std::optional<ClusterState> cluster_state;
    if (const auto* cs = std::get_if<ClusterSelectPolicy>(&config.selection)) {
        cluster_state = calibrate_clusters(initial.samples(), cs->epsilon, cs->k_override);
    }

    std::vector<Sample> buffer = train_raw;  // everything observable for retraining
    std::vector<Sample> pending;             // arrivals since the last retraining round
    PageHinkleyState ph_state;
    if (const auto* cd = std::get_if<ChangeDetectPolicy>(&config.retrain)) {
        ph_state = ph_init(cd->lambda);
    }

    ExperimentReport report;
    report.experiment_id = config.experiment_id;
    report.config = config;

    const std::vector<EvaluationWindow> windows =
        partition_windows(eval_stream, config.window_len_months);

    double a_mean_sum = 0.0;
    for (const EvaluationWindow& window : windows) {
        WindowRecord record;
        record.window = window.index;

        // Test first: the current model predicts the window before any
        // retraining in it.
        std::vector<ClassLabel> predictions;
        std::vector<ClassLabel> truths;
        predictions.reserve(window.samples.size());
        truths.reserve(window.samples.size());
        for (const Sample& s : window.samples) {
            predictions.push_back(predict(model, s));
            truths.push_back(s.true_class);
        }
        record.metrics = compute_metrics(predictions, truths);
        a_mean_sum += record.metrics.a_mean;

        if (cluster_state) {
            record.novelty = novelty_report(*cluster_state, window);
            for (const Sample& s : window.samples) cluster_assign(*cluster_state, s);
        }
        buffer.insert(buffer.end(), window.samples.begin(), window.samples.end());
        pending.insert(pending.end(), window.samples.begin(), window.samples.end());

        const std::int64_t manual_before = oracle.manual_labels();
        const std::int64_t automatic_before = oracle.automatic_labels();

        const RetrainDecision decision = retrain_decision(config.retrain, ph_state, record.metrics);
        ph_state = decision.ph_state;
        record.retrain_signal = decision.retrain;

        if (decision.retrain) {
            TrainingSet selected;
            bool balance = false;
            if (std::holds_alternative<AllDataPolicy>(config.selection)) {
                selected = TrainingSet("all_data");
                for (const Sample& s : buffer) {
                    selected.add(LabeledSample{s, oracle.label_manual(s), LabelSource::Manual});
                }
                balance = true;
            } else if (const auto* sw = std::get_if<SlidingWindowPolicy>(&config.selection)) {
                selected = window_select(buffer, sw->m, oracle);
                balance = true;
            } else if (const auto* u = std::get_if<UncertaintyPolicy>(&config.selection)) {
                selected = uncertainty_select(model, pending, u->budget_fraction, prev_train,
                                              oracle);
                prev_train = selected;
            } else {
                const auto& cs = std::get<ClusterSelectPolicy>(config.selection);
                ClusterSelection selection = cluster_select(*cluster_state, pending.size(),
                                                            cs.budget_fraction, prev_train,
                                                            oracle);
                selected = std::move(selection.training_set);
                prev_train = selected;
                balance = true;
            }

            const ClassCounts counts = count_classes(selected);
            const std::size_t minority = std::min(counts.goodware, counts.malware);
            if (balance && minority < 2) {
                // Balancing would leave fewer than 2 samples per class; keep
                // the current model for this round.
                report.totals.skipped_retrains += 1;
            } else {
                TrainingSet train_data =
                    balance ? balance_dataset(selected, derive_seed(config.seed, window.index + 1))
                            : selected;
                model = train_detector(config.detector, train_data);
                model.trained_at = static_cast<std::int64_t>(window.index);
                record.retrained = true;
                record.train_size = train_data.size();
                report.totals.retrain_count += 1;
            }
            pending.clear();
        }

        record.manual_labels = oracle.manual_labels() - manual_before;
        record.automatic_labels = oracle.automatic_labels() - automatic_before;
        report.windows.push_back(std::move(record));
    }

    report.totals.windows = report.windows.size();
    report.totals.initial_manual_labels = initial_manual;
    report.totals.manual_labels = oracle.manual_labels();
    report.totals.automatic_labels = oracle.automatic_labels();
    report.totals.mean_a_mean =
        report.windows.empty() ? 0.0 : a_mean_sum / static_cast<double>(report.windows.size());
    report.totals.cluster_count_end = cluster_state ? cluster_state->clusters.size() : 0;
    return report;
}

}  // namespace driftkit
