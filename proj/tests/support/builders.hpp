#pragma once

// Small helpers for building streams and labeled sets in tests.

#include <string>
#include <vector>

#include "driftkit/types.hpp"

namespace driftkit::test {

inline Sample make_sample(std::string id, std::int64_t month, std::vector<double> features,
                          ClassLabel label) {
    Sample s;
    s.id = std::move(id);
    s.timestamp = month;
    s.features = std::move(features);
    s.true_class = label;
    return s;
}

// 1-D sample, the common case in hand-worked fixtures.
inline Sample s1(std::string id, std::int64_t month, double x, ClassLabel label) {
    return make_sample(std::move(id), month, {x}, label);
}

inline LabeledSample labeled(Sample s) {
    const ClassLabel label = s.true_class;
    return LabeledSample{std::move(s), label, LabelSource::Manual};
}

}  // namespace driftkit::test
