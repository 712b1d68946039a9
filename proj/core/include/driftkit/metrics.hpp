#pragma once

#include <vector>

#include "driftkit/types.hpp"

namespace driftkit {

// Confusion counts and TPR / TNR / A_mean over one prediction batch.
// Both classes must appear in `truths`; a window with a single class has no
// defined rate for the missing one and is rejected (UndefinedRateError).
MetricsRecord compute_metrics(const std::vector<ClassLabel>& predictions,
                              const std::vector<ClassLabel>& truths);

// Splits a chronologically ordered stream into consecutive windows, each
// covering `window_len_months` month indices starting at the stream's first
// month. Month spans with no samples produce no window; emitted window
// indices are consecutive from 0. Concatenating the windows in index order
// reproduces the input stream.
std::vector<EvaluationWindow> partition_windows(const std::vector<Sample>& stream,
                                                int window_len_months);

}  // namespace driftkit
