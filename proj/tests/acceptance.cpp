// Acceptance suite: exact unit oracles plus qualitative desk-scale
// reproductions on a seeded synthetic benchmark stream. One pass/fail line
// per criterion; the exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "driftkit/clustering.hpp"
#include "driftkit/config.hpp"
#include "driftkit/experiment.hpp"
#include "driftkit/generator.hpp"
#include "driftkit/metrics.hpp"
#include "driftkit/page_hinkley.hpp"
#include "driftkit/report.hpp"
#include "driftkit/rng.hpp"
#include "support/brute_force_selector.hpp"
#include "support/builders.hpp"
#include "support/reference_page_hinkley.hpp"

using namespace driftkit;
using test::BruteForceSelector;
using test::labeled;
using test::ReferencePh;
using test::s1;

namespace {

constexpr ClassLabel G = ClassLabel::Goodware;
constexpr ClassLabel M = ClassLabel::Malware;

struct Failure {
    std::string detail;
};

using Check = std::function<void(std::vector<std::string>&)>;

void expect(std::vector<std::string>& failures, bool ok, const std::string& detail) {
    if (!ok) failures.push_back(detail);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Shared benchmark stream: 12 training months + 84 evaluation months at
// 100 goodware / 10 malware per month (330 arrivals per quarter). Goodware
// sits at 2 on every axis; malware starts far out along f0 and jumps to a
// prototype much closer to goodware at evaluation month 36 (absolute month
// 48), where a stale model stops seeing it.
constexpr std::int64_t kTrainingMonths = 12;
constexpr std::int64_t kDriftWindow = 12;  // evaluation month 36, quarterly windows

StreamSpec benchmark_spec() {
    StreamSpec spec;
    spec.feature_dim = 8;
    spec.months = 96;
    spec.goodware_per_month = 100;
    spec.malware_per_month = 10;
    spec.noise_sigma = 0.3;
    spec.seed = 4242;
    std::vector<double> base(spec.feature_dim, 2.0);
    std::vector<double> old_malware = base;
    old_malware[0] = 10.0;
    std::vector<double> new_malware = base;
    new_malware[0] = 5.7;
    spec.prototypes = {
        Prototype{base, G, 0, 95, 1.0},
        Prototype{old_malware, M, 0, 47, 1.0},
        Prototype{new_malware, M, 48, 95, 1.0},
    };
    return spec;
}

ExperimentConfig benchmark_config(const std::string& id) {
    ExperimentConfig config;
    config.experiment_id = id;
    config.detector.kind = DetectorKind::LogisticRegression;
    config.detector.learning_rate = 0.2;
    config.detector.epochs = 2000;
    config.detector.l2 = 0.0;
    config.retrain = PeriodicPolicy{};
    config.selection = AllDataPolicy{};
    config.window_len_months = 3;
    config.training_period_months = static_cast<int>(kTrainingMonths);
    config.seed = 17;
    return config;
}

const std::vector<Sample>& benchmark_stream() {
    static const std::vector<Sample> stream = generate_synthetic_stream(benchmark_spec());
    return stream;
}

// Periodic + AllData, the reference configuration criteria 4-6 compare
// against; computed once.
const ExperimentReport& baseline_report() {
    static const ExperimentReport report =
        run_experiment(benchmark_config("periodic_all"), benchmark_stream());
    return report;
}

double mean_a_mean(const ExperimentReport& report, std::size_t from, std::size_t to) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const WindowRecord& w : report.windows) {
        if (w.window >= from && w.window < to) {
            sum += w.metrics.a_mean;
            ++count;
        }
    }
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

std::int64_t evaluation_arrivals(const ExperimentReport& report) {
    std::int64_t total = 0;
    for (const WindowRecord& w : report.windows) total += w.metrics.p + w.metrics.n;
    return total;
}

std::int64_t window_manual_labels(const ExperimentReport& report) {
    std::int64_t total = 0;
    for (const WindowRecord& w : report.windows) total += w.manual_labels;
    return total;
}

// ---------------------------------------------------------------------------
// Criterion 1: Page-Hinkley matches a direct evaluation of its recurrences
// bit-for-bit on 1000 random streams, reset behavior included.
void criterion_ph_exactness(std::vector<std::string>& failures) {
    const double lambdas[] = {0.02, 0.03, 0.04, 0.05};
    Rng rng(20240215);
    for (int trial = 0; trial < 1000; ++trial) {
        const double lambda = lambdas[rng.below(4)];
        PageHinkleyState state = ph_init(lambda);
        ReferencePh reference(lambda);
        const std::size_t len = 1 + rng.below(50);
        for (std::size_t i = 0; i < len; ++i) {
            const double value =
                rng.below(6) == 0 ? 0.4 * rng.next_double() : 0.8 + 0.2 * rng.next_double();
            const PhUpdateResult r = ph_update(state, value);
            const bool ref_triggered = reference.observe(value);
            if (r.triggered != ref_triggered || r.state.c != reference.c() ||
                r.state.n != static_cast<long>(reference.n()) ||
                r.state.sum_perf != reference.sum()) {
                expect(failures, false,
                       "divergence at trial " + std::to_string(trial) + " step " +
                           std::to_string(i));
                return;
            }
            state = r.state;
        }
    }
}

// Criterion 2: Table-style metrics on randomized confusion counts to 1e-12,
// plus the worked TP=8/P=10, TN=90/N=100 example.
void criterion_metrics_exactness(std::vector<std::string>& failures) {
    Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const std::int64_t p = 1 + static_cast<std::int64_t>(rng.below(500));
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng.below(500));
        const std::int64_t tp = static_cast<std::int64_t>(rng.below(p + 1));
        const std::int64_t tn = static_cast<std::int64_t>(rng.below(n + 1));
        std::vector<ClassLabel> truths;
        std::vector<ClassLabel> preds;
        for (std::int64_t i = 0; i < p; ++i) {
            truths.push_back(M);
            preds.push_back(i < tp ? M : G);
        }
        for (std::int64_t i = 0; i < n; ++i) {
            truths.push_back(G);
            preds.push_back(i < tn ? G : M);
        }
        const MetricsRecord rec = compute_metrics(preds, truths);
        const double tpr = static_cast<double>(tp) / static_cast<double>(p);
        const double tnr = static_cast<double>(tn) / static_cast<double>(n);
        expect(failures, std::abs(rec.tpr - tpr) <= 1e-12, "tpr off at trial " + std::to_string(trial));
        expect(failures, std::abs(rec.tnr - tnr) <= 1e-12, "tnr off at trial " + std::to_string(trial));
        expect(failures, std::abs(rec.a_mean - (tpr + tnr) / 2.0) <= 1e-12,
               "a_mean off at trial " + std::to_string(trial));
        if (!failures.empty()) return;
    }

    std::vector<ClassLabel> truths;
    std::vector<ClassLabel> preds;
    for (int i = 0; i < 10; ++i) {
        truths.push_back(M);
        preds.push_back(i < 8 ? M : G);
    }
    for (int i = 0; i < 100; ++i) {
        truths.push_back(G);
        preds.push_back(i < 90 ? G : M);
    }
    const MetricsRecord rec = compute_metrics(preds, truths);
    expect(failures, std::abs(rec.a_mean - 0.85) <= 1e-12,
           "worked example: a_mean " + fmt(rec.a_mean) + " != 0.85");
}

// Criterion 3: the incremental selector matches a brute-force re-simulation
// on 200 random streams (cluster contents, k, isolation, selections), and
// the hand-worked 1-D calibration example holds.
void criterion_clustering_equivalence(std::vector<std::string>& failures) {
    {
        const std::vector<LabeledSample> worked = {
            labeled(s1("a", 0, 0.0, G)), labeled(s1("b", 1, 0.1, G)), labeled(s1("c", 2, 2.0, M)),
            labeled(s1("d", 3, 0.2, G)), labeled(s1("e", 4, 2.1, M)),
        };
        const ClusterState state = calibrate_clusters(worked, 0.5);
        expect(failures, state.clusters.size() == 2, "worked example: cluster count");
        expect(failures, state.k == 3, "worked example: k");
        if (state.clusters.size() == 2) {
            expect(failures, state.clusters[0].members.size() == 3, "worked example: c0 members");
            expect(failures, state.clusters[0].label == G, "worked example: c0 class");
            expect(failures, state.clusters[1].members.size() == 2, "worked example: c1 members");
            expect(failures, state.clusters[1].label == M, "worked example: c1 class");
        }
        if (!failures.empty()) return;
    }

    Rng rng(20240216);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 1 + rng.below(5);
        const double epsilon = 2.0 * rng.next_double();
        const std::size_t total = 10 + rng.below(91);
        const std::size_t calib_len = total / 2;

        std::vector<LabeledSample> calib;
        std::vector<Sample> online;
        std::vector<Sample> universe;
        for (std::size_t i = 0; i < total; ++i) {
            std::vector<double> f;
            for (std::size_t d = 0; d < dim; ++d) f.push_back(3.0 * rng.next_double());
            Sample s = test::make_sample("s" + std::to_string(i),
                                         static_cast<std::int64_t>(i / 5), f,
                                         rng.below(2) ? M : G);
            universe.push_back(s);
            if (i < calib_len) {
                calib.push_back(labeled(std::move(s)));
            } else {
                online.push_back(std::move(s));
            }
        }
        const std::optional<int> k_override =
            rng.below(3) == 0 ? std::optional<int>(1 + static_cast<int>(rng.below(5)))
                              : std::nullopt;

        ClusterState state = calibrate_clusters(calib, epsilon, k_override);
        BruteForceSelector brute;
        brute.calibrate(calib, epsilon, k_override);
        bool ok = state.k == brute.k && state.clusters.size() == brute.reps.size();

        for (const Sample& s : online) {
            if (!ok) break;
            const Assignment a = cluster_assign(state, s);
            const bool joined = brute.assign(s);
            ok = ok && ((a.kind == Assignment::Kind::Joined) == joined);
        }
        ok = ok && state.clusters.size() == brute.reps.size();
        for (std::size_t i = 0; ok && i < state.clusters.size(); ++i) {
            const Cluster& c = state.clusters[i];
            ok = c.representative == brute.reps[i] && c.label == brute.labels[i] &&
                 c.members.size() == brute.members[i].size();
            for (std::size_t m = 0; ok && m < c.members.size(); ++m) {
                ok = c.members[m] == brute.members[i][m];
            }
        }
        if (ok && state.clusters.size() >= 2) {
            const auto iso = isolation_levels(state);
            const auto brute_iso = brute.isolation();
            for (const auto& [id, value] : iso) {
                ok = ok && value == brute_iso.at(id);
            }
        }
        if (ok) {
            const double budget = rng.next_double();
            TrainingSet prev("prev");
            std::vector<LabeledSample> prev_entries;
            for (std::size_t i = 0; i < calib.size(); i += 3) {
                prev.add(calib[i]);
                prev_entries.push_back(calib[i]);
            }
            LabelOracle oracle(universe);
            const ClusterSelection mine =
                cluster_select(state, online.size(), budget, prev, oracle);
            const BruteForceSelector::SelectionResult theirs =
                brute.select(online.size(), budget, prev_entries);
            ok = mine.labels_spent == static_cast<std::int64_t>(theirs.labels_spent) &&
                 mine.training_set.size() == theirs.ids.size();
            for (std::size_t i = 0; ok && i < theirs.ids.size(); ++i) {
                ok = mine.training_set.samples()[i].sample.id == theirs.ids[i] &&
                     mine.training_set.samples()[i].label == theirs.selected_labels[i];
            }
        }
        if (!ok) {
            expect(failures, false, "divergence at trial " + std::to_string(trial));
            return;
        }
    }
}

// Criterion 4: on the benchmark stream the never-retrained model decays by
// at least 0.15 mean A_mean after the drift, while Periodic+AllData stays
// within 0.05 of its pre-drift mean.
void criterion_drift_decay(std::vector<std::string>& failures) {
    ExperimentConfig static_config = benchmark_config("static");
    static_config.retrain = StaticPolicy{};
    const ExperimentReport static_report = run_experiment(static_config, benchmark_stream());

    const ExperimentReport& periodic_report = baseline_report();

    const std::size_t total = static_report.windows.size();
    const double static_pre = mean_a_mean(static_report, 0, kDriftWindow);
    const double static_post = mean_a_mean(static_report, kDriftWindow, total);
    const double periodic_pre = mean_a_mean(periodic_report, 0, kDriftWindow);
    const double periodic_post = mean_a_mean(periodic_report, kDriftWindow, total);

    expect(failures, total == 28, "expected 28 windows, got " + std::to_string(total));
    expect(failures, static_pre - static_post >= 0.15,
           "static decay " + fmt(static_pre) + " -> " + fmt(static_post) + " is under 0.15");
    expect(failures, std::abs(periodic_pre - periodic_post) <= 0.05,
           "periodic drift " + fmt(periodic_pre) + " -> " + fmt(periodic_post) +
               " exceeds 0.05");
    expect(failures, periodic_report.totals.retrain_count == 28,
           "periodic retrained " + std::to_string(periodic_report.totals.retrain_count) +
               " times, expected 28");
}

// Criterion 5: ChangeDetect(0.02) retrains at most 30% as often as Periodic,
// lands within 0.05 mean A_mean, and triggers at (or right after) the
// injected drift.
void criterion_change_detection(std::vector<std::string>& failures) {
    const ExperimentReport& periodic = baseline_report();
    ExperimentConfig cd_config = benchmark_config("change_detect");
    cd_config.retrain = ChangeDetectPolicy{0.02};
    const ExperimentReport cd = run_experiment(cd_config, benchmark_stream());

    expect(failures,
           cd.totals.retrain_count * 10 <= periodic.totals.retrain_count * 3,
           "change detection retrained " + std::to_string(cd.totals.retrain_count) + " of " +
               std::to_string(periodic.totals.retrain_count));
    expect(failures,
           std::abs(cd.totals.mean_a_mean - periodic.totals.mean_a_mean) <= 0.05,
           "mean A_mean gap " +
               fmt(std::abs(cd.totals.mean_a_mean - periodic.totals.mean_a_mean)) +
               " exceeds 0.05");

    bool any_trigger = false;
    bool triggers_near_drift = true;
    for (const WindowRecord& w : cd.windows) {
        if (!w.retrain_signal) continue;
        any_trigger = true;
        if (w.window < kDriftWindow || w.window > kDriftWindow + 2) triggers_near_drift = false;
    }
    expect(failures, any_trigger, "no drift trigger at all");
    expect(failures, triggers_near_drift, "a trigger fired away from the drift window");
}

// Criterion 6: budgeted selection keeps pace with the all-data baseline
// within its stated tolerance while the ledger stays under budget;
// SlidingWindow(100) labels about 30% of arrivals.
void criterion_budget_parity(std::vector<std::string>& failures) {
    const ExperimentReport& baseline = baseline_report();

    ExperimentConfig cluster_config = benchmark_config("cluster_select");
    cluster_config.selection = ClusterSelectPolicy{1.0, std::nullopt, 0.70};
    const ExperimentReport cluster = run_experiment(cluster_config, benchmark_stream());

    ExperimentConfig uncertainty_config = benchmark_config("uncertainty");
    uncertainty_config.selection = UncertaintyPolicy{0.70};
    const ExperimentReport uncertainty = run_experiment(uncertainty_config, benchmark_stream());

    ExperimentConfig window_config = benchmark_config("last100");
    window_config.selection = SlidingWindowPolicy{100};
    const ExperimentReport window100 = run_experiment(window_config, benchmark_stream());

    const auto arrivals = static_cast<double>(evaluation_arrivals(baseline));

    expect(failures,
           std::abs(cluster.totals.mean_a_mean - baseline.totals.mean_a_mean) <= 0.03,
           "cluster_select mean " + fmt(cluster.totals.mean_a_mean) + " vs baseline " +
               fmt(baseline.totals.mean_a_mean) + " exceeds 0.03");
    const double cluster_fraction =
        static_cast<double>(window_manual_labels(cluster)) / arrivals;
    expect(failures, cluster_fraction <= 0.70,
           "cluster_select labeled " + fmt(cluster_fraction) + " of arrivals");

    expect(failures,
           std::abs(uncertainty.totals.mean_a_mean - baseline.totals.mean_a_mean) <= 0.05,
           "uncertainty mean " + fmt(uncertainty.totals.mean_a_mean) + " vs baseline " +
               fmt(baseline.totals.mean_a_mean) + " exceeds 0.05");
    const double uncertainty_fraction =
        static_cast<double>(window_manual_labels(uncertainty)) / arrivals;
    expect(failures, uncertainty_fraction <= 0.70 + 1e-9,
           "uncertainty labeled " + fmt(uncertainty_fraction) + " of arrivals");

    const double window_fraction =
        static_cast<double>(window_manual_labels(window100)) / arrivals;
    expect(failures, window_fraction >= 0.25 && window_fraction <= 0.35,
           "last-100 labeled " + fmt(window_fraction) + " of arrivals, expected about 0.30");
}

// Criterion 7: the unknown-behavior fraction of the drifting class at the
// drift window is at least twice its pre-drift average.
void criterion_novelty_spike(std::vector<std::string>& failures) {
    ExperimentConfig config = benchmark_config("novelty");
    config.selection = ClusterSelectPolicy{1.0, std::nullopt, 0.70};
    const ExperimentReport report = run_experiment(config, benchmark_stream());

    double pre_sum = 0.0;
    std::size_t pre_count = 0;
    double at_drift = -1.0;
    for (const WindowRecord& w : report.windows) {
        if (!w.novelty) continue;
        const double unknown = w.novelty->unknown_fraction_malware();
        if (w.window < kDriftWindow) {
            pre_sum += unknown;
            ++pre_count;
        } else if (w.window == kDriftWindow) {
            at_drift = unknown;
        }
    }
    if (pre_count == 0 || at_drift < 0.0) {
        expect(failures, false, "novelty records missing");
        return;
    }
    const double pre_mean = pre_sum / static_cast<double>(pre_count);
    expect(failures, at_drift >= 2.0 * pre_mean && at_drift > pre_mean,
           "unknown malware fraction " + fmt(at_drift) + " at the drift window vs pre-drift " +
               fmt(pre_mean));
}

// Criterion 8: repeating a run with the same seed produces a byte-identical
// report file.
void criterion_determinism(std::vector<std::string>& failures) {
    ExperimentConfig config = benchmark_config("determinism");
    config.selection = ClusterSelectPolicy{1.0, std::nullopt, 0.70};
    config.retrain = ChangeDetectPolicy{0.02};

    const ExperimentReport a = run_experiment(config, benchmark_stream());
    const ExperimentReport b = run_experiment(config, benchmark_stream());
    expect(failures, a == b, "reports differ in memory");

    const auto dir = std::filesystem::temp_directory_path();
    const std::string path_a = (dir / "driftkit-acceptance-a.json").string();
    const std::string path_b = (dir / "driftkit-acceptance-b.json").string();
    emit_report({a}, path_a, ReportFormat::Json);
    emit_report({b}, path_b, ReportFormat::Json);

    std::ifstream fa(path_a, std::ios::binary);
    std::ifstream fb(path_b, std::ios::binary);
    std::ostringstream sa;
    std::ostringstream sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    std::filesystem::remove(path_a);
    std::filesystem::remove(path_b);
    expect(failures, !sa.str().empty() && sa.str() == sb.str(), "report files differ");
}

struct Criterion {
    const char* name;
    double time_limit_seconds;  // 0 = no limit
    Check check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1. page-hinkley bit-exactness vs direct evaluation", 5.0, criterion_ph_exactness},
        {"2. metrics exactness to 1e-12", 0.0, criterion_metrics_exactness},
        {"3. clustering equivalence vs brute-force oracle", 30.0, criterion_clustering_equivalence},
        {"4. drift decay: static falls >= 0.15, periodic holds within 0.05", 60.0,
         criterion_drift_decay},
        {"5. change detection: <= 30% retrains, within 0.05, triggers at drift", 0.0,
         criterion_change_detection},
        {"6. budgeted selection parity and label ledger", 0.0, criterion_budget_parity},
        {"7. novelty spike at the drift window", 0.0, criterion_novelty_spike},
        {"8. seeded runs emit byte-identical reports", 0.0, criterion_determinism},
    };

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        std::vector<std::string> failures;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.check(failures);
        } catch (const std::exception& e) {
            failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.time_limit_seconds > 0.0 && seconds > criterion.time_limit_seconds) {
            failures.push_back("runtime " + fmt(seconds) + "s over the " +
                               fmt(criterion.time_limit_seconds) + "s limit");
        }
        if (failures.empty()) {
            std::printf("[PASS] %s (%.2fs)\n", criterion.name, seconds);
        } else {
            ++failed;
            std::printf("[FAIL] %s (%.2fs)\n", criterion.name, seconds);
            for (const std::string& detail : failures) {
                std::printf("       - %s\n", detail.c_str());
            }
        }
    }
    return failed;
}
