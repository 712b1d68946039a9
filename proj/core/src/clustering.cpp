#include "driftkit/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "driftkit/detector.hpp"
#include "driftkit/errors.hpp"

namespace driftkit {

namespace {

// Index of the nearest representative, lowest id on ties, plus the distance.
std::pair<std::size_t, double> nearest_cluster(const ClusterState& state,
                                               const Sample& sample) {
    std::size_t best = 0;
    double best_dist = euclidean_distance(sample.features, state.clusters[0].representative.features);
    for (std::size_t i = 1; i < state.clusters.size(); ++i) {
        const double dist =
            euclidean_distance(sample.features, state.clusters[i].representative.features);
        if (dist < best_dist) {
            best = i;
            best_dist = dist;
        }
    }
    return {best, best_dist};
}

void append_member(Cluster& cluster, const Sample& sample, std::size_t k) {
    if (cluster.members.size() >= k) {
        cluster.members.erase(cluster.members.begin());
    }
    cluster.members.push_back(sample);
}

void check_dim(const ClusterState& state, const Sample& sample, const char* op) {
    if (sample.features.size() != state.feature_dim) {
        throw DimensionMismatchError(std::string(op) + ": sample dimension " +
                                     std::to_string(sample.features.size()) +
                                     " vs cluster dimension " +
                                     std::to_string(state.feature_dim));
    }
}

}  // namespace

ClusterState calibrate_clusters(const std::vector<LabeledSample>& training_stream,
                                double epsilon,
                                std::optional<int> k_override) {
    if (training_stream.empty()) {
        throw EmptyStreamError("calibrate_clusters: empty training stream");
    }
    if (epsilon < 0.0 || !std::isfinite(epsilon)) {
        throw InvalidSpecError("calibrate_clusters: epsilon must be finite and >= 0");
    }
    if (k_override && *k_override < 1) {
        throw InvalidSpecError("calibrate_clusters: k_override must be >= 1");
    }

    ClusterState state;
    state.epsilon = epsilon;
    state.feature_dim = training_stream.front().sample.features.size();
    state.phase = ClusterPhase::Calibration;

    for (const LabeledSample& entry : training_stream) {
        check_dim(state, entry.sample, "calibrate_clusters");
        if (!state.clusters.empty()) {
            const auto [idx, dist] = nearest_cluster(state, entry.sample);
            if (dist <= epsilon) {
                state.clusters[idx].members.push_back(entry.sample);
                continue;
            }
        }
        Cluster cluster;
        cluster.id = static_cast<int>(state.clusters.size());
        cluster.representative = entry.sample;
        cluster.label = entry.label;
        cluster.members.push_back(entry.sample);
        cluster.created_at = entry.sample.timestamp;
        state.clusters.push_back(std::move(cluster));
    }

    if (k_override) {
        state.k = static_cast<std::size_t>(*k_override);
    } else {
        // Mean size over the untrimmed clusters, round half up, at least 1.
        const double mean_size = static_cast<double>(training_stream.size()) /
                                 static_cast<double>(state.clusters.size());
        state.k = static_cast<std::size_t>(std::max(1.0, std::floor(mean_size + 0.5)));
    }

    for (Cluster& cluster : state.clusters) {
        if (cluster.members.size() > state.k) {
            cluster.members.erase(cluster.members.begin(),
                                  cluster.members.end() - static_cast<std::ptrdiff_t>(state.k));
        }
    }
    state.phase = ClusterPhase::Online;
    return state;
}

Assignment cluster_assign(ClusterState& state, const Sample& sample) {
    if (state.phase != ClusterPhase::Online) {
        throw Error("cluster_assign: state is not in the online phase");
    }
    check_dim(state, sample, "cluster_assign");

    if (!state.clusters.empty()) {
        const auto [idx, dist] = nearest_cluster(state, sample);
        if (dist <= state.epsilon) {
            append_member(state.clusters[idx], sample, state.k);
            return Assignment{Assignment::Kind::Joined, state.clusters[idx].id};
        }
    }
    Cluster cluster;
    cluster.id = static_cast<int>(state.clusters.size());
    cluster.representative = sample;
    cluster.members.push_back(sample);
    cluster.created_at = sample.timestamp;
    state.clusters.push_back(std::move(cluster));
    return Assignment{Assignment::Kind::NewCluster, state.clusters.back().id};
}

std::map<int, double> isolation_levels(const ClusterState& state) {
    if (state.clusters.size() < 2) {
        throw TooFewClustersError("isolation_levels: need at least 2 clusters, have " +
                                  std::to_string(state.clusters.size()));
    }
    std::map<int, double> out;
    for (const Cluster& c : state.clusters) {
        double sum = 0.0;
        for (const Cluster& other : state.clusters) {
            if (other.id == c.id) continue;
            sum += euclidean_distance(c.representative.features, other.representative.features);
        }
        out[c.id] = sum / static_cast<double>(state.clusters.size() - 1);
    }
    return out;
}

ClusterSelection cluster_select(ClusterState& state,
                                std::size_t incoming_count,
                                double budget_fraction,
                                const TrainingSet& prev_train,
                                LabelOracle& oracle) {
    if (state.phase != ClusterPhase::Online) {
        throw Error("cluster_select: state is not in the online phase");
    }
    if (budget_fraction < 0.0 || budget_fraction > 1.0) {
        throw InvalidSpecError("cluster_select: budget_fraction must be in [0,1]");
    }

    std::vector<std::size_t> unlabeled;
    for (std::size_t i = 0; i < state.clusters.size(); ++i) {
        if (!state.clusters[i].label) unlabeled.push_back(i);
    }
    const auto budget = static_cast<std::size_t>(
        std::ceil(budget_fraction * static_cast<double>(incoming_count)));
    const std::size_t l_b = std::min(budget, unlabeled.size());

    if (l_b > 0 && l_b < unlabeled.size()) {
        // Only part of the unlabeled clusters fits the budget: rank them by
        // isolation, most isolated first; ties go to the older cluster.
        const auto isolation = isolation_levels(state);
        std::sort(unlabeled.begin(), unlabeled.end(), [&](std::size_t a, std::size_t b) {
            const Cluster& ca = state.clusters[a];
            const Cluster& cb = state.clusters[b];
            const double ia = isolation.at(ca.id);
            const double ib = isolation.at(cb.id);
            if (ia != ib) return ia > ib;
            if (ca.created_at != cb.created_at) return ca.created_at < cb.created_at;
            return ca.id < cb.id;
        });
    }
    for (std::size_t i = 0; i < l_b; ++i) {
        Cluster& cluster = state.clusters[unlabeled[i]];
        cluster.label = oracle.label_manual(cluster.representative);
    }

    ClusterSelection result;
    result.training_set = prev_train;
    result.training_set.set_provenance("cluster_select(epsilon=" + std::to_string(state.epsilon) +
                                       ")");
    result.labels_spent = static_cast<std::int64_t>(l_b);

    std::int64_t automatic_added = 0;
    for (const Cluster& cluster : state.clusters) {
        if (!cluster.label) continue;
        for (const Sample& member : cluster.members) {
            if (result.training_set.add(
                    LabeledSample{member, *cluster.label, LabelSource::Automatic})) {
                ++automatic_added;
            }
        }
    }
    oracle.record_automatic(automatic_added);
    return result;
}

double NoveltyReport::known_fraction_goodware() const {
    const auto total = known_goodware + unknown_goodware;
    return total == 0 ? 0.0 : static_cast<double>(known_goodware) / static_cast<double>(total);
}

double NoveltyReport::unknown_fraction_goodware() const {
    const auto total = known_goodware + unknown_goodware;
    return total == 0 ? 0.0 : static_cast<double>(unknown_goodware) / static_cast<double>(total);
}

double NoveltyReport::known_fraction_malware() const {
    const auto total = known_malware + unknown_malware;
    return total == 0 ? 0.0 : static_cast<double>(known_malware) / static_cast<double>(total);
}

double NoveltyReport::unknown_fraction_malware() const {
    const auto total = known_malware + unknown_malware;
    return total == 0 ? 0.0 : static_cast<double>(unknown_malware) / static_cast<double>(total);
}

NoveltyReport novelty_report(const ClusterState& state_before, const EvaluationWindow& window) {
    ClusterState replay = state_before;
    NoveltyReport report;
    for (const Sample& s : window.samples) {
        const Assignment a = cluster_assign(replay, s);
        const bool known = a.kind == Assignment::Kind::Joined;
        if (s.true_class == ClassLabel::Malware) {
            (known ? report.known_malware : report.unknown_malware) += 1;
        } else {
            (known ? report.known_goodware : report.unknown_goodware) += 1;
        }
    }
    return report;
}

}  // namespace driftkit
