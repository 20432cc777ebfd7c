#pragma once

#include <cmath>
#include <span>

namespace snow {

/// Neumaier-compensated accumulator, so grid-wide water totals are accurate
/// to a few ulp regardless of cell count.
class StableSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double stable_sum(std::span<const double> xs) {
    StableSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

}  // namespace snow
