#include "driftkit/detector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "driftkit/errors.hpp"

namespace driftkit {

namespace {

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

void check_dimension(const DetectorModel& model, const Sample& sample) {
    if (sample.features.size() != model.feature_dim) {
        throw DimensionMismatchError("predict: sample dimension " +
                                     std::to_string(sample.features.size()) +
                                     " vs model dimension " +
                                     std::to_string(model.feature_dim));
    }
}

DetectorModel train_nearest_centroid(const TrainingSet& data, std::size_t dim) {
    DetectorModel model;
    model.kind = DetectorKind::NearestCentroid;
    model.feature_dim = dim;
    model.centroid_goodware.assign(dim, 0.0);
    model.centroid_malware.assign(dim, 0.0);
    std::size_t n_good = 0;
    std::size_t n_mal = 0;
    for (const LabeledSample& e : data.samples()) {
        auto& centroid = e.label == ClassLabel::Malware ? model.centroid_malware
                                                        : model.centroid_goodware;
        for (std::size_t d = 0; d < dim; ++d) centroid[d] += e.sample.features[d];
        (e.label == ClassLabel::Malware ? n_mal : n_good) += 1;
    }
    for (std::size_t d = 0; d < dim; ++d) {
        model.centroid_goodware[d] /= static_cast<double>(n_good);
        model.centroid_malware[d] /= static_cast<double>(n_mal);
    }
    return model;
}

DetectorModel train_logistic(const DetectorSpec& spec, const TrainingSet& data,
                             std::size_t dim) {
    if (!(spec.learning_rate > 0.0)) {
        throw InvalidSpecError("train_detector: learning_rate must be > 0");
    }
    if (spec.epochs < 1) {
        throw InvalidSpecError("train_detector: epochs must be >= 1");
    }
    if (spec.l2 < 0.0) {
        throw InvalidSpecError("train_detector: l2 must be >= 0");
    }
    DetectorModel model;
    model.kind = DetectorKind::LogisticRegression;
    model.feature_dim = dim;
    model.weights.assign(dim, 0.0);
    model.bias = 0.0;

    const double inv_n = 1.0 / static_cast<double>(data.size());
    std::vector<double> grad(dim, 0.0);
    for (int epoch = 0; epoch < spec.epochs; ++epoch) {
        std::fill(grad.begin(), grad.end(), 0.0);
        double grad_bias = 0.0;
        for (const LabeledSample& e : data.samples()) {
            double z = model.bias;
            for (std::size_t d = 0; d < dim; ++d) z += model.weights[d] * e.sample.features[d];
            const double y = e.label == ClassLabel::Malware ? 1.0 : 0.0;
            const double err = sigmoid(z) - y;
            for (std::size_t d = 0; d < dim; ++d) grad[d] += err * e.sample.features[d];
            grad_bias += err;
        }
        for (std::size_t d = 0; d < dim; ++d) {
            model.weights[d] -= spec.learning_rate * (grad[d] * inv_n + spec.l2 * model.weights[d]);
        }
        model.bias -= spec.learning_rate * grad_bias * inv_n;
    }
    return model;
}

}  // namespace

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

DetectorModel train_detector(const DetectorSpec& spec, const TrainingSet& data) {
    bool has_good = false;
    bool has_mal = false;
    for (const LabeledSample& e : data.samples()) {
        (e.label == ClassLabel::Malware ? has_mal : has_good) = true;
    }
    if (!has_good || !has_mal) {
        throw SingleClassDataError("train_detector: training data must contain both classes");
    }
    const std::size_t dim = data.samples().front().sample.features.size();
    if (dim == 0) {
        throw DimensionMismatchError("train_detector: empty feature vectors");
    }
    for (const LabeledSample& e : data.samples()) {
        if (e.sample.features.size() != dim) {
            throw DimensionMismatchError("train_detector: inconsistent feature dimension in '" +
                                         e.sample.id + "'");
        }
    }
    if (spec.kind == DetectorKind::NearestCentroid) {
        return train_nearest_centroid(data, dim);
    }
    return train_logistic(spec, data, dim);
}

std::pair<double, double> predict_scores(const DetectorModel& model, const Sample& sample) {
    check_dimension(model, sample);
    if (model.kind == DetectorKind::NearestCentroid) {
        const double d_good = euclidean_distance(sample.features, model.centroid_goodware);
        const double d_mal = euclidean_distance(sample.features, model.centroid_malware);
        if (d_good == 0.0 && d_mal == 0.0) return {0.5, 0.5};
        const double p_mal = d_good / (d_good + d_mal);
        return {1.0 - p_mal, p_mal};
    }
    double z = model.bias;
    for (std::size_t d = 0; d < model.feature_dim; ++d) {
        z += model.weights[d] * sample.features[d];
    }
    const double p_mal = sigmoid(z);
    return {1.0 - p_mal, p_mal};
}

ClassLabel predict(const DetectorModel& model, const Sample& sample) {
    const auto [p_good, p_mal] = predict_scores(model, sample);
    return p_mal > p_good ? ClassLabel::Malware : ClassLabel::Goodware;
}

}  // namespace driftkit
