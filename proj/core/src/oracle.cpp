#include "driftkit/oracle.hpp"

#include "driftkit/errors.hpp"

namespace driftkit {

LabelOracle::LabelOracle(const std::vector<Sample>& stream) {
    truth_.reserve(stream.size());
    for (const Sample& s : stream) truth_.emplace(s.id, s.true_class);
}

ClassLabel LabelOracle::label_manual(const Sample& sample) {
    const auto it = truth_.find(sample.id);
    if (it == truth_.end()) {
        throw UnknownLabelError("label oracle: unknown sample id '" + sample.id + "'");
    }
    if (queried_.insert(sample.id).second) {
        ++manual_;
    }
    return it->second;
}

}  // namespace driftkit
