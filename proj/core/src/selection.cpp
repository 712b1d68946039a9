#include "driftkit/selection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "driftkit/errors.hpp"

namespace driftkit {

TrainingSet window_select(std::span<const Sample> buffer, std::size_t m, LabelOracle& oracle) {
    if (m < 1) {
        throw InvalidSpecError("window_select: m must be >= 1");
    }
    TrainingSet out("sliding_window(m=" + std::to_string(m) + ")");
    const std::size_t take = std::min(m, buffer.size());
    for (std::size_t i = buffer.size() - take; i < buffer.size(); ++i) {
        const Sample& s = buffer[i];
        out.add(LabeledSample{s, oracle.label_manual(s), LabelSource::Manual});
    }
    return out;
}

double uncertainty_score(double p_goodware, double p_malware) {
    if (p_goodware < 0.0 || p_malware < 0.0 ||
        std::abs(p_goodware + p_malware - 1.0) > 1e-9) {
        throw InvalidDistributionError("uncertainty_score: (" + std::to_string(p_goodware) +
                                       ", " + std::to_string(p_malware) +
                                       ") is not a class distribution");
    }
    return 1.0 - std::abs(p_goodware - p_malware);
}

TrainingSet uncertainty_select(const DetectorModel& model,
                               const std::vector<Sample>& incoming,
                               double budget_fraction,
                               const TrainingSet& prev_train,
                               LabelOracle& oracle) {
    if (incoming.empty()) {
        throw EmptyStreamError("uncertainty_select: no incoming samples");
    }
    if (!(budget_fraction > 0.0) || budget_fraction > 1.0) {
        throw InvalidSpecError("uncertainty_select: budget_fraction must be in (0,1]");
    }

    struct Scored {
        double uncertainty;
        const Sample* sample;
    };
    std::vector<Scored> scored;
    scored.reserve(incoming.size());
    for (const Sample& s : incoming) {
        const auto [p_good, p_mal] = predict_scores(model, s);
        scored.push_back(Scored{uncertainty_score(p_good, p_mal), &s});
    }
    std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        if (a.uncertainty != b.uncertainty) return a.uncertainty > b.uncertainty;
        if (a.sample->timestamp != b.sample->timestamp)
            return a.sample->timestamp < b.sample->timestamp;
        return a.sample->id < b.sample->id;
    });

    const auto budget = static_cast<std::size_t>(
        std::ceil(budget_fraction * static_cast<double>(incoming.size())));
    const std::size_t take = std::min(budget, scored.size());

    TrainingSet out = prev_train;
    out.set_provenance("uncertainty(budget=" + std::to_string(budget_fraction) + ")");
    for (std::size_t i = 0; i < take; ++i) {
        const Sample& s = *scored[i].sample;
        out.add(LabeledSample{s, oracle.label_manual(s), LabelSource::Manual});
    }
    return out;
}

}  // namespace driftkit
