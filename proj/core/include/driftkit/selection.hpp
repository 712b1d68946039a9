#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "driftkit/detector.hpp"
#include "driftkit/oracle.hpp"
#include "driftkit/types.hpp"

namespace driftkit {

// Retraining-data policies. AllData keeps the whole growing buffer,
// SlidingWindow forgets everything but the m most recent apps, Uncertainty
// and ClusterSelect label only part of the incoming data and grow the old
// training set with it.
struct AllDataPolicy {
    bool operator==(const AllDataPolicy&) const = default;
};

struct SlidingWindowPolicy {
    std::size_t m = 1000;
    bool operator==(const SlidingWindowPolicy&) const = default;
};

struct UncertaintyPolicy {
    double budget_fraction = 0.70;  // in (0, 1]
    bool operator==(const UncertaintyPolicy&) const = default;
};

struct ClusterSelectPolicy {
    double epsilon = 0.01;                  // >= 0
    std::optional<int> k_override;          // >= 1 when set
    double budget_fraction = 0.70;          // in (0, 1]
    bool operator==(const ClusterSelectPolicy&) const = default;
};

using SelectionPolicy =
    std::variant<AllDataPolicy, SlidingWindowPolicy, UncertaintyPolicy, ClusterSelectPolicy>;

// Returns the last min(m, |buffer|) samples of the buffer, in order. Labels
// are fetched through the oracle at selection time, so the cost lands on the
// round that actually uses the samples.
TrainingSet window_select(std::span<const Sample> buffer, std::size_t m, LabelOracle& oracle);

// Complement of the absolute class-probability difference: 1 for a 50/50
// split, 0 for a fully confident decision.
double uncertainty_score(double p_goodware, double p_malware);

// Scores the incoming samples with the current model, manually labels the
// ceil(budget_fraction * |incoming|) most uncertain ones (ties: earlier
// timestamp, then lexicographic id) and returns prev_train grown with them.
TrainingSet uncertainty_select(const DetectorModel& model,
                               const std::vector<Sample>& incoming,
                               double budget_fraction,
                               const TrainingSet& prev_train,
                               LabelOracle& oracle);

}  // namespace driftkit
