#include <benchmark/benchmark.h>

#include <vector>

#include "driftkit/clustering.hpp"
#include "driftkit/detector.hpp"
#include "driftkit/experiment.hpp"
#include "driftkit/generator.hpp"
#include "driftkit/metrics.hpp"
#include "driftkit/page_hinkley.hpp"
#include "driftkit/rng.hpp"

namespace {

using namespace driftkit;

StreamSpec bench_spec(std::int64_t months) {
    StreamSpec spec;
    spec.feature_dim = 8;
    spec.months = months;
    spec.goodware_per_month = 50;
    spec.malware_per_month = 10;
    spec.noise_sigma = 0.5;
    spec.seed = 99;
    std::vector<double> good(8, 2.0);
    std::vector<double> mal(8, 2.0);
    mal[0] = 8.0;
    spec.prototypes = {
        Prototype{good, ClassLabel::Goodware, 0, months - 1, 1.0},
        Prototype{mal, ClassLabel::Malware, 0, months - 1, 1.0},
    };
    return spec;
}

TrainingSet labeled_prefix(const std::vector<Sample>& stream, std::int64_t months) {
    TrainingSet data("bench");
    for (const Sample& s : stream) {
        if (s.timestamp < months) {
            data.add(LabeledSample{s, s.true_class, LabelSource::Manual});
        }
    }
    return data;
}

void BM_PhUpdate(benchmark::State& state) {
    Rng rng(1);
    std::vector<double> values;
    for (int i = 0; i < 1024; ++i) values.push_back(rng.next_double());
    for (auto _ : state) {
        PageHinkleyState ph = ph_init(0.02);
        for (const double v : values) ph = ph_update(ph, v).state;
        benchmark::DoNotOptimize(ph);
    }
    state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_PhUpdate);

void BM_ComputeMetrics(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    std::vector<ClassLabel> preds(n);
    std::vector<ClassLabel> truths(n);
    for (std::size_t i = 0; i < n; ++i) {
        truths[i] = rng.below(10) == 0 ? ClassLabel::Malware : ClassLabel::Goodware;
        preds[i] = rng.below(2) == 0 ? truths[i] : ClassLabel::Goodware;
    }
    truths[0] = ClassLabel::Malware;
    truths[1] = ClassLabel::Goodware;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_metrics(preds, truths));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_ComputeMetrics)->Arg(330)->Arg(4096);

void BM_ClusterAssign(benchmark::State& state) {
    const auto stream = generate_synthetic_stream(bench_spec(24));
    const TrainingSet calib = labeled_prefix(stream, 12);
    const ClusterState calibrated = calibrate_clusters(calib.samples(), 2.0);
    std::vector<Sample> online;
    for (const Sample& s : stream) {
        if (s.timestamp >= 12) online.push_back(s);
    }
    for (auto _ : state) {
        ClusterState working = calibrated;
        for (const Sample& s : online) cluster_assign(working, s);
        benchmark::DoNotOptimize(working);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(online.size()));
}
BENCHMARK(BM_ClusterAssign);

void BM_TrainDetector(benchmark::State& state) {
    const auto stream = generate_synthetic_stream(bench_spec(12));
    const TrainingSet data = labeled_prefix(stream, 12);
    DetectorSpec spec;
    if (state.range(0) == 0) {
        spec.kind = DetectorKind::NearestCentroid;
    } else {
        spec.kind = DetectorKind::LogisticRegression;
        spec.epochs = static_cast<int>(state.range(0));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(train_detector(spec, data));
    }
}
BENCHMARK(BM_TrainDetector)->Arg(0)->Arg(100)->Arg(400);

void BM_RunExperiment(benchmark::State& state) {
    const auto stream = generate_synthetic_stream(bench_spec(36));
    ExperimentConfig config;
    config.detector.kind = DetectorKind::NearestCentroid;
    config.retrain = PeriodicPolicy{};
    config.selection = ClusterSelectPolicy{2.0, std::nullopt, 0.7};
    config.training_period_months = 12;
    config.seed = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_experiment(config, stream));
    }
}
BENCHMARK(BM_RunExperiment);

}  // namespace

BENCHMARK_MAIN();
