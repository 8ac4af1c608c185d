#pragma once

#include <cstdint>
#include <vector>

namespace tcirc {

/// Largest exponent k accepted by the power-sum routines. Factorial growth
/// past this loses integer fidelity in 64-bit floats.
inline constexpr int kMaxPowerSumExponent = 20;

/// Stirling number of the second kind S(k, j) via the recurrence
/// S(k, j) = j S(k-1, j) + S(k-1, j-1), S(0, 0) = 1. Rejects k > 20.
std::uint64_t stirling2(int k, int j);

/// E[X^k] for X geometric on {1, 2, ...} with success probability 1 - p,
/// computed from factorial moments: sum_j S(k, j) j! p^{j-1} / (1-p)^j.
double geometric_moment(int k, double p);

/// Moments E[X^0..X^max_k] of the geometric distribution on {1, 2, ...}
/// with success probability 1 - p: moments[1] = 1/(1-p),
/// moments[2] = (1+p)/(1-p)^2, ...
struct GeometricMomentTable {
    double p = 0.0;
    int max_k = 0;
    std::vector<double> moments;
};

GeometricMomentTable geometric_moment_table(double p, int max_k);

/// sum_{n=1}^{N} n^k p^n through geometric moments:
/// (p/(1-p)) [ (1 - p^N) G_k - p^N sum_{l=1}^{k} C(k,l) N^l G_{k-l} ].
/// The bracket cancels catastrophically for small N and large k, so it is
/// evaluated in compensated double-double arithmetic internally.
double truncated_power_sum(long long n_terms, int k, double p);

/// sum_{m=1}^{M-1} m rho^{2m} via the printed closed form.
double power_sum_k1(int order, double rho);

/// sum_{m=1}^{M-1} m^2 rho^{2m} via the printed closed form.
double power_sum_k2(int order, double rho);

/// 2 rho^M (sum m^2/M^2 - sum m^3/M^3) = (1/6) rho^M (M - 1/M).
double square_cube_correction(int order, double rho);

}  // namespace tcirc
