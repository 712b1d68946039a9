#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "driftkit/types.hpp"

namespace driftkit {

// Gate between selection policies and ground truth. Every manual label a
// policy consumes goes through label_manual(), so "labels required" is a
// measured quantity rather than an assumption. Repeat queries for a sample
// already labeled are free: an app is analyzed by a human once.
class LabelOracle {
public:
    explicit LabelOracle(const std::vector<Sample>& stream);

    // Ground-truth label for the sample; counts one manual label the first
    // time each id is queried.
    ClassLabel label_manual(const Sample& sample);

    // Ledger entry for labels produced mechanically (cluster propagation).
    void record_automatic(std::int64_t count) { automatic_ += count; }

    bool already_labeled(const std::string& id) const { return queried_.count(id) != 0; }

    std::int64_t manual_labels() const { return manual_; }
    std::int64_t automatic_labels() const { return automatic_; }

private:
    std::unordered_map<std::string, ClassLabel> truth_;
    std::unordered_set<std::string> queried_;
    std::int64_t manual_ = 0;
    std::int64_t automatic_ = 0;
};

}  // namespace driftkit
