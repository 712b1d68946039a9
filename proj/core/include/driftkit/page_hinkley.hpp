#pragma once

namespace driftkit {

// Page-Hinkley change detector over the per-window A_mean series.
//
// The test keeps a CUSUM c of the deviations between each observation and
// the running mean of the observations before it:
//
//   c_1 = 0
//   c_n = min(0, c_{n-1} + (a_n - mean(a_1 .. a_{n-1})))   for n > 1
//
// and signals a change when lambda + c < 0. On a signal the state is reset,
// so the trigger instant becomes the starting point of the next run.
struct PageHinkleyState {
    double lambda = 0.0;   // tolerance threshold, > 0
    long n = 0;            // observations since the last reset
    double sum_perf = 0.0; // running sum of observed values since the reset
    double c = 0.0;        // CUSUM, always <= 0

    bool operator==(const PageHinkleyState&) const = default;
};

struct PhUpdateResult {
    PageHinkleyState state;
    bool triggered = false;
};

PageHinkleyState ph_init(double lambda);

// Feeds one A_mean observation (finite, in [0,1]). When the update triggers,
// the returned state is already reset; the triggering observation is consumed
// and does not seed the new state.
PhUpdateResult ph_update(const PageHinkleyState& state, double a_mean);

}  // namespace driftkit
