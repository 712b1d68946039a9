#pragma once

#include <cstdint>
#include <vector>

#include "driftkit/types.hpp"

namespace driftkit {

// One behavioral prototype: samples of its class drawn while it is active
// scatter around `center` with isotropic Gaussian noise. Activating a new
// prototype mid-stream is how drift is injected.
struct Prototype {
    std::vector<double> center;  // finite, non-negative, feature_dim entries
    ClassLabel label = ClassLabel::Goodware;
    std::int64_t active_from = 0;  // first active month, inclusive
    std::int64_t active_to = 0;    // last active month, inclusive
    double weight = 1.0;           // >= 0; relative draw weight among active prototypes

    bool operator==(const Prototype&) const = default;
};

struct StreamSpec {
    std::size_t feature_dim = 1;
    std::int64_t months = 1;
    std::int64_t goodware_per_month = 1;
    std::int64_t malware_per_month = 1;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
    std::vector<Prototype> prototypes;

    bool operator==(const StreamSpec&) const = default;
};

// Deterministic synthetic stream: for each month, draws the configured
// number of samples per class from that month's active prototypes (weighted
// choice) plus Gaussian noise clamped at zero, then shuffles the month so
// classes interleave. Ids encode month and in-month sequence. Every month
// of the schedule must offer positive prototype weight for both classes.
std::vector<Sample> generate_synthetic_stream(const StreamSpec& spec);

}  // namespace driftkit
