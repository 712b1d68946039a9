#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace driftkit {

// Malware is the positive class everywhere: TPR is malware recall.
enum class ClassLabel { Goodware, Malware };

inline const char* to_string(ClassLabel label) {
    return label == ClassLabel::Malware ? "malware" : "goodware";
}

// One instance of the stream: an app observed at a given month.
//
// true_class is ground truth carried with the sample. Training code never
// reads it directly; labels are fetched through LabelOracle so that labeling
// cost stays measurable. Evaluation reads it, as any prequential harness does.
struct Sample {
    std::string id;
    std::int64_t timestamp = 0;  // month index, non-decreasing in stream order
    std::vector<double> features;  // finite, non-negative
    ClassLabel true_class = ClassLabel::Goodware;

    bool operator==(const Sample&) const = default;
};

// Contiguous span of months from one stream; windows are non-overlapping
// and consecutive.
struct EvaluationWindow {
    std::size_t index = 0;
    std::vector<Sample> samples;  // chronologically ordered, non-empty
};

// Confusion counts and rates for one evaluation window.
// P = malware total, N = goodware total.
struct MetricsRecord {
    std::int64_t tp = 0;
    std::int64_t tn = 0;
    std::int64_t p = 0;
    std::int64_t n = 0;
    double tpr = 0.0;
    double tnr = 0.0;
    double a_mean = 0.0;

    bool operator==(const MetricsRecord&) const = default;
};

enum class LabelSource { Manual, Automatic };

struct LabeledSample {
    Sample sample;
    ClassLabel label = ClassLabel::Goodware;
    LabelSource source = LabelSource::Manual;

    bool operator==(const LabeledSample&) const = default;
};

// A retraining dataset. Entries are unique by sample id; when the same id is
// offered twice the earliest label record wins.
class TrainingSet {
public:
    TrainingSet() = default;
    explicit TrainingSet(std::string provenance) : provenance_(std::move(provenance)) {}

    bool contains(const std::string& id) const { return ids_.count(id) != 0; }

    // Adds one entry unless its id is already present. Returns true if added.
    bool add(LabeledSample entry);

    // Adds every entry with a new id; returns how many were actually added.
    std::size_t merge(const std::vector<LabeledSample>& entries);
    std::size_t merge(const TrainingSet& other) { return merge(other.samples_); }

    const std::vector<LabeledSample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }

    const std::string& provenance() const { return provenance_; }
    void set_provenance(std::string p) { provenance_ = std::move(p); }

private:
    std::vector<LabeledSample> samples_;
    std::unordered_set<std::string> ids_;
    std::string provenance_;
};

}  // namespace driftkit
