#include "driftkit/types.hpp"

namespace driftkit {

bool TrainingSet::add(LabeledSample entry) {
    if (ids_.count(entry.sample.id) != 0) return false;
    ids_.insert(entry.sample.id);
    samples_.push_back(std::move(entry));
    return true;
}

std::size_t TrainingSet::merge(const std::vector<LabeledSample>& entries) {
    std::size_t added = 0;
    for (const LabeledSample& e : entries) {
        if (add(e)) ++added;
    }
    return added;
}

}  // namespace driftkit
