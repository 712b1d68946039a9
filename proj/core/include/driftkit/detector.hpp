#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "driftkit/types.hpp"

namespace driftkit {

enum class DetectorKind { NearestCentroid, LogisticRegression };

// Batch detector description. The two built-ins are deliberately simple
// deterministic stand-ins for heavyweight production detectors: both train
// offline on a labeled set, emit hard predictions and class probabilities,
// and are immutable once trained.
struct DetectorSpec {
    DetectorKind kind = DetectorKind::NearestCentroid;
    // LogisticRegression only:
    double learning_rate = 0.05;  // > 0
    int epochs = 300;             // >= 1
    double l2 = 0.0;              // >= 0

    bool operator==(const DetectorSpec&) const = default;
};

struct DetectorModel {
    DetectorKind kind = DetectorKind::NearestCentroid;
    std::size_t feature_dim = 0;
    std::int64_t trained_at = -1;  // window index; -1 for the offline model

    // NearestCentroid parameters.
    std::vector<double> centroid_goodware;
    std::vector<double> centroid_malware;

    // LogisticRegression parameters; the linear score is weights . x + bias
    // and sigmoid(score) is the malware probability.
    std::vector<double> weights;
    double bias = 0.0;

    bool operator==(const DetectorModel&) const = default;
};

// Trains a model on a labeled set. Both classes must be present; all feature
// vectors must share one dimension. Training is fully deterministic:
// NearestCentroid stores per-class means, LogisticRegression runs exactly
// `epochs` full-batch gradient descent passes from zero-initialized weights.
DetectorModel train_detector(const DetectorSpec& spec, const TrainingSet& data);

// (p_goodware, p_malware); the two always sum to 1.
std::pair<double, double> predict_scores(const DetectorModel& model, const Sample& sample);

// Class with the higher score; an exact tie resolves to Goodware.
ClassLabel predict(const DetectorModel& model, const Sample& sample);

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace driftkit
