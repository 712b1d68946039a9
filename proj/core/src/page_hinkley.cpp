#include "driftkit/page_hinkley.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "driftkit/errors.hpp"

namespace driftkit {

PageHinkleyState ph_init(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidThresholdError("ph_init: lambda must be > 0, got " +
                                    std::to_string(lambda));
    }
    return PageHinkleyState{lambda, 0, 0.0, 0.0};
}

PhUpdateResult ph_update(const PageHinkleyState& state, double a_mean) {
    if (!std::isfinite(a_mean) || a_mean < 0.0 || a_mean > 1.0) {
        throw OutOfRangeError("ph_update: a_mean must be in [0,1], got " +
                              std::to_string(a_mean));
    }
    PageHinkleyState next = state;
    next.n = state.n + 1;
    if (next.n == 1) {
        next.c = 0.0;
    } else {
        const double prev_mean = state.sum_perf / static_cast<double>(state.n);
        next.c = std::min(0.0, state.c + (a_mean - prev_mean));
    }
    next.sum_perf = state.sum_perf + a_mean;

    const bool triggered = state.lambda + next.c < 0.0;
    if (triggered) {
        return PhUpdateResult{ph_init(state.lambda), true};
    }
    return PhUpdateResult{next, false};
}

}  // namespace driftkit
