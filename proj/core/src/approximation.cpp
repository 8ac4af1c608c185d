#include "tcirc/approximation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tcirc/numeric.hpp"

namespace tcirc {

std::string_view method_name(ApproximationMethod method) {
    switch (method) {
        case ApproximationMethod::Nearest: return "nearest";
        case ApproximationMethod::GS: return "gs";
        case ApproximationMethod::Common: return "common";
    }
    throw std::logic_error("method_name: unknown method");
}

std::optional<ApproximationMethod> parse_method(std::string_view name) {
    if (name == "nearest") return ApproximationMethod::Nearest;
    if (name == "gs") return ApproximationMethod::GS;
    if (name == "common") return ApproximationMethod::Common;
    return std::nullopt;
}

Circulant nearest_circulant(const SymmetricToeplitz& t) {
    const int n = t.order();
    const auto& row = t.row();
    std::vector<double> c(static_cast<std::size_t>(n));
    c[0] = row[0];
    // Evaluate m <= M/2 and mirror: c_m = c_{M-m} must hold exactly, and the
    // two algebraically equal evaluations can differ in the last ulp.
    for (int m = 1; 2 * m <= n; ++m) {
        const double value =
            row[static_cast<std::size_t>(m)] +
            (static_cast<double>(m) / n) * (row[static_cast<std::size_t>(n - m)] - row[static_cast<std::size_t>(m)]);
        c[static_cast<std::size_t>(m)] = value;
        c[static_cast<std::size_t>(n - m)] = value;
    }
    return Circulant(std::move(c));
}

std::vector<double> residual_offdiagonals(const SymmetricToeplitz& t, const Circulant& c) {
    if (t.order() != c.order())
        throw std::invalid_argument("residual_offdiagonals: order mismatch");
    if (!c.is_symmetric())
        throw std::invalid_argument("residual_offdiagonals: circulant must be symmetric, "
                                    "otherwise the difference is not Toeplitz");
    const int n = t.order();
    std::vector<double> r(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m)
        r[static_cast<std::size_t>(m)] = t.row()[static_cast<std::size_t>(m)] - c.row()[static_cast<std::size_t>(m)];
    return r;
}

Circulant gs_circulant(double rho, int order) {
    if (order < 1) throw std::invalid_argument("gs_circulant: order must be positive");
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::domain_error("gs_circulant: rho must lie in [0, 1); the scaling 1 - rho^M vanishes at 1");
    std::vector<double> c(static_cast<std::size_t>(order));
    c[0] = 1.0;
    const double denom = 1.0 - pow_int(rho, static_cast<std::uint64_t>(order));
    for (int m = 1; 2 * m <= order; ++m) {
        const double value = (pow_int(rho, static_cast<std::uint64_t>(m)) +
                              pow_int(rho, static_cast<std::uint64_t>(order - m))) /
                             denom;
        c[static_cast<std::size_t>(m)] = value;
        c[static_cast<std::size_t>(order - m)] = value;
    }
    return Circulant(std::move(c));
}

double scaled_residual_norm_sq_direct(const SymmetricToeplitz& t, const Circulant& c) {
    const auto r = residual_offdiagonals(t, c);
    return toeplitz_offdiag_norm_sq(r) / t.order();
}

double scaled_residual_norm_sq_closed_nearest(double rho, int order) {
    if (order < 2) throw std::invalid_argument("scaled_residual_norm_sq_closed_nearest: order must be >= 2");
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::domain_error("scaled_residual_norm_sq_closed_nearest: rho must lie in [0, 1); "
                                "use the direct path at rho = 1 (the residual vanishes)");
    const double m = order;
    const double r2 = rho * rho;
    const double one = 1.0 - r2;
    const double q_2m2 = pow_int(rho, 2ull * static_cast<std::uint64_t>(order - 1));
    const double q_2m = pow_int(rho, 2ull * static_cast<std::uint64_t>(order));
    const double q_m = pow_int(rho, static_cast<std::uint64_t>(order));
    const double bracket = (1.0 + q_2m2) / one
        - (1.0 + r2 + q_2m2 - 3.0 * q_2m) / (m * one * one)
        - q_2m2 * (m - 1.0) / m;
    return (2.0 * r2 / (m * one)) * bracket - (1.0 / 3.0) * q_m * (m - 1.0 / m);
}

double scaled_residual_norm_sq_closed_gs(double rho, int order) {
    if (order < 2) throw std::invalid_argument("scaled_residual_norm_sq_closed_gs: order must be >= 2");
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::domain_error("scaled_residual_norm_sq_closed_gs: rho must lie in [0, 1)");
    const double m = order;
    const double r2 = rho * rho;
    const double one = 1.0 - r2;
    const double q_m = pow_int(rho, static_cast<std::uint64_t>(order));
    const double q_2m = pow_int(rho, 2ull * static_cast<std::uint64_t>(order));
    return (2.0 / ((1.0 - q_m) * (1.0 - q_m))) *
           (r2 * (1.0 - q_2m) * (1.0 - q_2m) / (one * one * m) + (m - 2.0) * q_2m);
}

double scaled_residual_norm_sq_general(const SymmetricToeplitz& t) {
    const int n = t.order();
    const auto& row = t.row();
    CompensatedSum sum;
    for (int m = 1; m < n; ++m) {
        const double a = row[static_cast<std::size_t>(m)];
        const double b = row[static_cast<std::size_t>(n - m)];
        sum.add(static_cast<double>(n - m) * m * m * (a * a - 2.0 * a * b + b * b));
    }
    return 2.0 * sum.value() / (static_cast<double>(n) * n * n);
}

double leading_term_nearest(double rho, int order) {
    if (order < 1) throw std::invalid_argument("leading_term_nearest: order must be positive");
    if (!(rho >= 0.0 && rho < 1.0)) throw std::domain_error("leading_term_nearest: rho must lie in [0, 1)");
    return std::numbers::sqrt2 * rho / ((1.0 - rho * rho) * std::sqrt(static_cast<double>(order)));
}

double leading_term_gs(double rho, int order) {
    if (order < 1) throw std::invalid_argument("leading_term_gs: order must be positive");
    if (!(rho >= 0.0 && rho < 1.0)) throw std::domain_error("leading_term_gs: rho must lie in [0, 1)");
    return std::numbers::sqrt2 * rho /
           ((1.0 - rho * rho) * (1.0 - pow_int(rho, static_cast<std::uint64_t>(order))) *
            std::sqrt(static_cast<double>(order)));
}

std::vector<double> nearest_eigenvalues(const SymmetricToeplitz& t) {
    const int n = t.order();
    const auto& row = t.row();
    std::vector<double> values(static_cast<std::size_t>(n));
    const double two_pi = 2.0 * std::numbers::pi;
    for (int k = 0; k < n; ++k) {
        CompensatedSum sum;
        sum.add(row[0]);
        for (int m = 1; m < n; ++m) {
            const long long r = (static_cast<long long>(m) * k) % n;
            const double theta = two_pi * static_cast<double>(r) / n;
            sum.add(2.0 * (static_cast<double>(n - m) / n) * row[static_cast<std::size_t>(m)] * std::cos(theta));
        }
        values[static_cast<std::size_t>(k)] = sum.value();
    }
    return values;
}

ResidualReport residual_report(ApproximationMethod method, double rho, int order) {
    if (order < 1) throw std::invalid_argument("residual_report: order must be positive");
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("residual_report: rho must lie in [0, 1]");

    const SymmetricToeplitz sigma = expand_exponential({rho, order});
    ResidualReport report;
    report.method = method;
    report.rho = rho;
    report.order = order;

    switch (method) {
        case ApproximationMethod::Nearest: {
            report.scaled_norm_sq_direct = scaled_residual_norm_sq_direct(sigma, nearest_circulant(sigma));
            if (rho < 1.0) {
                if (order >= 2) report.scaled_norm_sq_closed = scaled_residual_norm_sq_closed_nearest(rho, order);
                report.leading_term = leading_term_nearest(rho, order);
            }
            break;
        }
        case ApproximationMethod::GS: {
            report.scaled_norm_sq_direct = scaled_residual_norm_sq_direct(sigma, gs_circulant(rho, order));
            if (order >= 2) report.scaled_norm_sq_closed = scaled_residual_norm_sq_closed_gs(rho, order);
            report.leading_term = leading_term_gs(rho, order);
            break;
        }
        case ApproximationMethod::Common: {
            std::vector<double> row(static_cast<std::size_t>(order), rho);
            row[0] = 1.0;
            report.scaled_norm_sq_direct = scaled_residual_norm_sq_direct(sigma, Circulant(std::move(row)));
            break;
        }
    }
    return report;
}

}  // namespace tcirc
