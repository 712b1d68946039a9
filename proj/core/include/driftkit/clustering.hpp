#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "driftkit/oracle.hpp"
#include "driftkit/types.hpp"

namespace driftkit {

// One behavioral group. The representative is the founding sample and is
// kept for the cluster's whole lifetime, even after it rotates out of the
// member window; every member lies within epsilon of it.
struct Cluster {
    int id = 0;
    Sample representative;
    std::optional<ClassLabel> label;  // set from the representative's label
    std::vector<Sample> members;      // arrival order, at most k in the online phase
    std::int64_t created_at = 0;      // month the representative arrived

    bool operator==(const Cluster&) const = default;
};

enum class ClusterPhase { Calibration, Online };

struct ClusterState {
    std::vector<Cluster> clusters;
    double epsilon = 0.0;
    std::size_t k = 1;  // per-cluster recency window, fixed after calibration
    std::size_t feature_dim = 0;
    ClusterPhase phase = ClusterPhase::Calibration;

    bool operator==(const ClusterState&) const = default;
};

struct Assignment {
    enum class Kind { Joined, NewCluster };
    Kind kind = Kind::Joined;
    int cluster_id = 0;
};

// Single-pass leader clustering over the labeled training stream. Each sample
// joins its nearest cluster when it lies within epsilon of that cluster's
// representative, otherwise founds a new cluster. k is the override when
// given, else the mean cluster size (round half up, floored at 1), computed
// before any trimming; each cluster then keeps only its k most recent
// members and the state moves to the online phase.
ClusterState calibrate_clusters(const std::vector<LabeledSample>& training_stream,
                                double epsilon,
                                std::optional<int> k_override = std::nullopt);

// Online step: the sample joins its nearest cluster if within epsilon of the
// representative (evicting the oldest member when the cluster is full), else
// founds a new unlabeled cluster. Nearest-cluster ties break toward the
// lowest cluster id.
Assignment cluster_assign(ClusterState& state, const Sample& sample);

// Mean distance from each cluster's representative to all other
// representatives. Needs at least two clusters.
std::map<int, double> isolation_levels(const ClusterState& state);

struct ClusterSelection {
    TrainingSet training_set;
    std::int64_t labels_spent = 0;
};

// Budgeted labeling round: manually labels the representatives of the
// l_b = min(ceil(budget_fraction * incoming_count), #unlabeled) most isolated
// unlabeled clusters (ties: older cluster, then lower id), then returns
// prev_train grown with the members of every labeled cluster, each carrying
// its cluster's class as an automatic label. Unlabeled clusters that missed
// the budget stay in the state and remain eligible next round.
ClusterSelection cluster_select(ClusterState& state,
                                std::size_t incoming_count,
                                double budget_fraction,
                                const TrainingSet& prev_train,
                                LabelOracle& oracle);

// Known/unknown behavior split of one window, per true class. Replays
// cluster_assign over a copy of the state: samples that join an existing (or
// replay-created) cluster count as known, founders count as unknown.
struct NoveltyReport {
    std::int64_t known_goodware = 0;
    std::int64_t unknown_goodware = 0;
    std::int64_t known_malware = 0;
    std::int64_t unknown_malware = 0;

    double known_fraction_goodware() const;
    double unknown_fraction_goodware() const;
    double known_fraction_malware() const;
    double unknown_fraction_malware() const;

    bool operator==(const NoveltyReport&) const = default;
};

NoveltyReport novelty_report(const ClusterState& state_before, const EvaluationWindow& window);

}  // namespace driftkit
