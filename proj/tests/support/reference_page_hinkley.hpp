#pragma once

// Direct re-evaluation of the Page-Hinkley recurrences, independent of
// PageHinkleyState: the full observation history is stored and the
// pre-observation mean is recomputed from scratch at every step.

#include <algorithm>
#include <cstddef>
#include <vector>

namespace driftkit::test {

class ReferencePh {
public:
    explicit ReferencePh(double lambda) : lambda_(lambda) {}

    bool observe(double value) {
        double c_next;
        if (history_.empty()) {
            c_next = 0.0;
        } else {
            double sum = 0.0;
            for (const double h : history_) sum += h;
            const double mean = sum / static_cast<double>(history_.size());
            c_next = std::min(0.0, c_ + (value - mean));
        }
        history_.push_back(value);
        c_ = c_next;
        const bool triggered = lambda_ + c_ < 0.0;
        if (triggered) {
            history_.clear();
            c_ = 0.0;
        }
        return triggered;
    }

    double c() const { return c_; }
    std::size_t n() const { return history_.size(); }
    double sum() const {
        double sum = 0.0;
        for (const double h : history_) sum += h;
        return sum;
    }

private:
    double lambda_;
    std::vector<double> history_;
    double c_ = 0.0;
};

}  // namespace driftkit::test
