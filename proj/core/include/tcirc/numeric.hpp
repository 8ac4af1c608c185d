#pragma once

#include <cstdint>

namespace tcirc {

/// x^n by binary exponentiation, with 0^0 = 1.
inline double pow_int(double x, std::uint64_t n) {
    double result = 1.0;
    double base = x;
    while (n != 0) {
        if (n & 1u) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

/// Kahan-compensated accumulator.
class CompensatedSum {
public:
    void add(double x) {
        const double y = x - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }

    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// |a - b| relative to the larger magnitude; 0 when both are 0.
inline double relative_gap(double a, double b) {
    const double d = a > b ? a - b : b - a;
    if (d == 0.0) return 0.0;
    const double ma = a < 0 ? -a : a;
    const double mb = b < 0 ? -b : b;
    return d / (ma > mb ? ma : mb);
}

}  // namespace tcirc
