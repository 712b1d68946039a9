#include "driftkit/metrics.hpp"

#include <string>

#include "driftkit/errors.hpp"

namespace driftkit {

MetricsRecord compute_metrics(const std::vector<ClassLabel>& predictions,
                              const std::vector<ClassLabel>& truths) {
    if (predictions.size() != truths.size()) {
        throw LengthMismatchError("compute_metrics: " + std::to_string(predictions.size()) +
                                  " predictions vs " + std::to_string(truths.size()) +
                                  " truths");
    }
    MetricsRecord rec;
    for (std::size_t i = 0; i < truths.size(); ++i) {
        if (truths[i] == ClassLabel::Malware) {
            ++rec.p;
            if (predictions[i] == ClassLabel::Malware) ++rec.tp;
        } else {
            ++rec.n;
            if (predictions[i] == ClassLabel::Goodware) ++rec.tn;
        }
    }
    if (rec.p == 0 || rec.n == 0) {
        throw UndefinedRateError("compute_metrics: window has P=" + std::to_string(rec.p) +
                                 ", N=" + std::to_string(rec.n));
    }
    rec.tpr = static_cast<double>(rec.tp) / static_cast<double>(rec.p);
    rec.tnr = static_cast<double>(rec.tn) / static_cast<double>(rec.n);
    rec.a_mean = (rec.tpr + rec.tnr) / 2.0;
    return rec;
}

std::vector<EvaluationWindow> partition_windows(const std::vector<Sample>& stream,
                                                int window_len_months) {
    if (window_len_months < 1) {
        throw InvalidSpecError("partition_windows: window_len_months must be >= 1");
    }
    std::vector<EvaluationWindow> windows;
    if (stream.empty()) return windows;

    const std::int64_t first_month = stream.front().timestamp;
    std::int64_t prev_ts = first_month;
    std::int64_t current_span = -1;
    for (const Sample& s : stream) {
        if (s.timestamp < prev_ts) {
            throw UnorderedStreamError("partition_windows: timestamp " +
                                       std::to_string(s.timestamp) + " after " +
                                       std::to_string(prev_ts));
        }
        prev_ts = s.timestamp;
        const std::int64_t span = (s.timestamp - first_month) / window_len_months;
        if (span != current_span) {
            windows.push_back(EvaluationWindow{windows.size(), {}});
            current_span = span;
        }
        windows.back().samples.push_back(s);
    }
    return windows;
}

}  // namespace driftkit
