#include "tcirc/geom_series.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "tcirc/numeric.hpp"

namespace tcirc {

namespace {

void check_exponent(int k) {
    if (k < 0) throw std::domain_error("power sum exponent k must be nonnegative");
    if (k > kMaxPowerSumExponent) throw std::domain_error("power sum exponent k must be <= 20");
}

void check_p(double p) {
    if (!(p >= 0.0 && p < 1.0)) throw std::domain_error("p must lie in [0, 1)");
}

// Double-double arithmetic (Dekker/Knuth error-free transforms). The moment
// bracket in truncated_power_sum subtracts near-equal terms up to ~1e8 times
// the result, which plain doubles cannot survive at the contracted 1e-12.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

DD two_sum(double a, double b) {
    const double s = a + b;
    const double v = s - a;
    const double e = (a - (s - v)) + (b - v);
    return {s, e};
}

DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    DD r = two_sum(s.hi, s.lo);
    return r;
}

DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    DD r = two_sum(p.hi, p.lo);
    return r;
}

DD dd_div(DD a, DD b) {
    const double q1 = a.hi / b.hi;
    DD r = dd_add(a, dd_mul({-q1, 0.0}, b));
    const double q2 = (r.hi + r.lo) / b.hi;
    return two_sum(q1, q2);
}

DD dd_from(double x) { return {x, 0.0}; }

DD dd_pow(DD x, std::uint64_t n) {
    DD result = dd_from(1.0);
    DD base = x;
    while (n != 0) {
        if (n & 1u) result = dd_mul(result, base);
        base = dd_mul(base, base);
        n >>= 1;
    }
    return result;
}

// Binomial coefficients, Pascal's triangle in integers; k <= 20 keeps every
// value well below 2^64.
std::uint64_t binomial(int k, int l) {
    std::array<std::uint64_t, kMaxPowerSumExponent + 1> row{};
    row[0] = 1;
    for (int i = 1; i <= k; ++i)
        for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(l)];
}

// E[X^k] in double-double; see geometric_moment.
DD moment_dd(int k, double p) {
    if (k == 0) return dd_from(1.0);
    const DD one_minus_p = two_sum(1.0, -p);
    DD sum = dd_from(0.0);
    double factorial = 1.0;
    for (int j = 1; j <= k; ++j) {
        factorial *= j;
        DD term = dd_from(static_cast<double>(stirling2(k, j)) * factorial);
        term = dd_mul(term, dd_pow(dd_from(p), static_cast<std::uint64_t>(j - 1)));
        term = dd_div(term, dd_pow(one_minus_p, static_cast<std::uint64_t>(j)));
        sum = dd_add(sum, term);
    }
    return sum;
}

}  // namespace

std::uint64_t stirling2(int k, int j) {
    if (k < 0 || j < 0) throw std::domain_error("stirling2: arguments must be nonnegative");
    if (k > kMaxPowerSumExponent) throw std::domain_error("stirling2: k must be <= 20");
    if (j > k) return 0;
    // table[a][b] = S(a, b)
    std::array<std::array<std::uint64_t, kMaxPowerSumExponent + 1>, kMaxPowerSumExponent + 1> table{};
    table[0][0] = 1;
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= a; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                static_cast<std::uint64_t>(b) * table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] +
                table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
    return table[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
}

double geometric_moment(int k, double p) {
    check_exponent(k);
    check_p(p);
    const DD m = moment_dd(k, p);
    return m.hi + m.lo;
}

GeometricMomentTable geometric_moment_table(double p, int max_k) {
    check_exponent(max_k);
    check_p(p);
    GeometricMomentTable table;
    table.p = p;
    table.max_k = max_k;
    table.moments.reserve(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) table.moments.push_back(geometric_moment(k, p));
    return table;
}

double truncated_power_sum(long long n_terms, int k, double p) {
    if (n_terms < 1) throw std::invalid_argument("truncated_power_sum: N must be positive");
    check_exponent(k);
    check_p(p);
    if (p == 0.0) return 0.0;

    std::array<DD, kMaxPowerSumExponent + 1> moments;
    for (int j = 0; j <= k; ++j) moments[static_cast<std::size_t>(j)] = moment_dd(j, p);

    const DD p_n = dd_pow(dd_from(p), static_cast<std::uint64_t>(n_terms));
    DD bracket = dd_mul(dd_add(dd_from(1.0), dd_mul(dd_from(-1.0), p_n)), moments[static_cast<std::size_t>(k)]);
    DD correction = dd_from(0.0);
    for (int l = 1; l <= k; ++l) {
        DD term = dd_from(static_cast<double>(binomial(k, l)));
        term = dd_mul(term, dd_pow(dd_from(static_cast<double>(n_terms)), static_cast<std::uint64_t>(l)));
        term = dd_mul(term, moments[static_cast<std::size_t>(k - l)]);
        correction = dd_add(correction, term);
    }
    bracket = dd_add(bracket, dd_mul(dd_mul(dd_from(-1.0), p_n), correction));

    const DD scale = dd_div(dd_from(p), two_sum(1.0, -p));
    const DD result = dd_mul(scale, bracket);
    return result.hi + result.lo;
}

double power_sum_k1(int order, double rho) {
    if (order < 2) throw std::invalid_argument("power_sum_k1: order must be >= 2");
    check_p(rho);
    const double r2 = rho * rho;
    const double q = pow_int(rho, 2ull * static_cast<std::uint64_t>(order - 1));
    return (r2 / (1.0 - r2)) * ((1.0 - q) / (1.0 - r2) - q * (order - 1));
}

double power_sum_k2(int order, double rho) {
    if (order < 2) throw std::invalid_argument("power_sum_k2: order must be >= 2");
    check_p(rho);
    const double r2 = rho * rho;
    const double one = 1.0 - r2;
    const double q = pow_int(rho, 2ull * static_cast<std::uint64_t>(order - 1));
    const double n1 = order - 1;
    return (r2 / one) * ((1.0 - q) * (1.0 + r2) / (one * one) - 2.0 * q * n1 / one - q * n1 * n1);
}

double square_cube_correction(int order, double rho) {
    if (order < 1) throw std::invalid_argument("square_cube_correction: order must be positive");
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("square_cube_correction: rho must lie in [0, 1]");
    return (1.0 / 6.0) * pow_int(rho, static_cast<std::uint64_t>(order)) * (order - 1.0 / order);
}

}  // namespace tcirc
