#include "driftkit/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "driftkit/errors.hpp"
#include "driftkit/rng.hpp"

namespace driftkit {

namespace {

void validate_spec(const StreamSpec& spec) {
    if (spec.feature_dim < 1) throw InvalidSpecError("stream spec: feature_dim must be >= 1");
    if (spec.months < 1) throw InvalidSpecError("stream spec: months must be >= 1");
    if (spec.goodware_per_month < 1 || spec.malware_per_month < 1) {
        throw InvalidSpecError("stream spec: both classes need at least one arrival per month");
    }
    if (!(spec.noise_sigma >= 0.0) || !std::isfinite(spec.noise_sigma)) {
        throw InvalidSpecError("stream spec: noise_sigma must be finite and >= 0");
    }
    if (spec.prototypes.empty()) throw InvalidSpecError("stream spec: no prototypes");
    for (const Prototype& proto : spec.prototypes) {
        if (proto.center.size() != spec.feature_dim) {
            throw InvalidSpecError("stream spec: prototype center dimension " +
                                   std::to_string(proto.center.size()) + " vs feature_dim " +
                                   std::to_string(spec.feature_dim));
        }
        for (double v : proto.center) {
            if (!std::isfinite(v) || v < 0.0) {
                throw InvalidSpecError("stream spec: prototype centers must be finite and >= 0");
            }
        }
        if (!(proto.weight >= 0.0) || !std::isfinite(proto.weight)) {
            throw InvalidSpecError("stream spec: prototype weight must be finite and >= 0");
        }
        if (proto.active_from > proto.active_to) {
            throw InvalidSpecError("stream spec: prototype active_from > active_to");
        }
    }
    for (std::int64_t month = 0; month < spec.months; ++month) {
        double weight_good = 0.0;
        double weight_mal = 0.0;
        for (const Prototype& proto : spec.prototypes) {
            if (month < proto.active_from || month > proto.active_to) continue;
            (proto.label == ClassLabel::Malware ? weight_mal : weight_good) += proto.weight;
        }
        if (weight_good <= 0.0 || weight_mal <= 0.0) {
            throw InvalidSpecError("stream spec: month " + std::to_string(month) +
                                   " lacks an active prototype for one class");
        }
    }
}

const Prototype& pick_prototype(const StreamSpec& spec, std::int64_t month, ClassLabel label,
                                Rng& rng) {
    double total = 0.0;
    for (const Prototype& proto : spec.prototypes) {
        if (proto.label != label || month < proto.active_from || month > proto.active_to) continue;
        total += proto.weight;
    }
    const double pick = rng.next_double() * total;
    double cumulative = 0.0;
    const Prototype* last = nullptr;
    for (const Prototype& proto : spec.prototypes) {
        if (proto.label != label || month < proto.active_from || month > proto.active_to) continue;
        if (proto.weight <= 0.0) continue;
        cumulative += proto.weight;
        last = &proto;
        if (pick < cumulative) return proto;
    }
    return *last;  // pick == total can fall through on rounding
}

Sample draw_sample(const StreamSpec& spec, std::int64_t month, ClassLabel label, Rng& rng) {
    const Prototype& proto = pick_prototype(spec, month, label, rng);
    Sample s;
    s.timestamp = month;
    s.true_class = label;
    s.features.resize(spec.feature_dim);
    for (std::size_t d = 0; d < spec.feature_dim; ++d) {
        s.features[d] = std::max(0.0, proto.center[d] + rng.gaussian(0.0, spec.noise_sigma));
    }
    return s;
}

}  // namespace

std::vector<Sample> generate_synthetic_stream(const StreamSpec& spec) {
    validate_spec(spec);
    Rng rng(spec.seed);
    std::vector<Sample> stream;
    stream.reserve(static_cast<std::size_t>(spec.months *
                                            (spec.goodware_per_month + spec.malware_per_month)));
    std::vector<Sample> month_batch;
    char id_buf[48];
    for (std::int64_t month = 0; month < spec.months; ++month) {
        month_batch.clear();
        for (std::int64_t i = 0; i < spec.goodware_per_month; ++i) {
            month_batch.push_back(draw_sample(spec, month, ClassLabel::Goodware, rng));
        }
        for (std::int64_t i = 0; i < spec.malware_per_month; ++i) {
            month_batch.push_back(draw_sample(spec, month, ClassLabel::Malware, rng));
        }
        // Interleave the classes within the month.
        for (std::size_t i = month_batch.size() - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
            std::swap(month_batch[i], month_batch[j]);
        }
        for (std::size_t seq = 0; seq < month_batch.size(); ++seq) {
            std::snprintf(id_buf, sizeof(id_buf), "m%04lld-s%04zu",
                          static_cast<long long>(month), seq);
            month_batch[seq].id = id_buf;
            stream.push_back(std::move(month_batch[seq]));
        }
    }
    return stream;
}

}  // namespace driftkit
