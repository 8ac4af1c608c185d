#include "tcirc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tcirc/numeric.hpp"

namespace tcirc::oracle {

namespace {

double offdiagonal_mass(const DenseMatrix& a) {
    const int n = a.order();
    CompensatedSum sum;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) sum.add(a(i, j) * a(i, j));
    return std::sqrt(sum.value());
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const DenseMatrix& input, const JacobiSettings& settings) {
    if (settings.max_sweeps < 1) throw std::invalid_argument("jacobi_eigenvalues: max_sweeps must be >= 1");
    const int n = input.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(input(i, j) - input(j, i)) > 1e-12)
                throw std::domain_error("jacobi_eigenvalues: input is not symmetric within 1e-12");

    const double tolerance = settings.off_diagonal_tolerance.value_or(1e-12 * frobenius_norm(input));
    if (settings.off_diagonal_tolerance && *settings.off_diagonal_tolerance <= 0.0)
        throw std::invalid_argument("jacobi_eigenvalues: tolerance must be positive");

    DenseMatrix a = input;
    bool converged = offdiagonal_mass(a) <= tolerance;
    for (int sweep = 0; sweep < settings.max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Stable half-angle rotation: t = sign(theta)/(|theta| + sqrt(theta^2 + 1)).
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = a(p, p);
                const double aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(p, i) = a(i, p);
                    a(i, q) = s * aip + c * aiq;
                    a(q, i) = a(i, q);
                }
            }
        }
        converged = offdiagonal_mass(a) <= tolerance;
    }
    if (!converged) throw std::runtime_error("jacobi_eigenvalues: no convergence within max_sweeps");

    std::vector<double> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = a(i, i);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

Circulant cyclic_diagonal_average(const DenseMatrix& a) {
    const int n = a.order();
    std::vector<double> row(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        CompensatedSum sum;
        for (int i = 0; i < n; ++i) sum.add(a(i, (i + m) % n));
        row[static_cast<std::size_t>(m)] = sum.value() / n;
    }
    return Circulant(std::move(row));
}

double direct_power_sum(long long n_terms, int k, double p) {
    if (n_terms < 1) throw std::invalid_argument("direct_power_sum: N must be positive");
    if (k < 0) throw std::invalid_argument("direct_power_sum: k must be nonnegative");
    CompensatedSum sum;
    double p_n = 1.0;
    for (long long n = 1; n <= n_terms; ++n) {
        p_n *= p;
        sum.add(p_n * pow_int(static_cast<double>(n), static_cast<std::uint64_t>(k)));
    }
    return sum.value();
}

Circulant gs_entries_spectral(double rho, int order, int truncation) {
    if (order < 1) throw std::invalid_argument("gs_entries_spectral: order must be positive");
    if (truncation < 1) throw std::invalid_argument("gs_entries_spectral: truncation must be >= 1");
    if (!(rho >= 0.0 && rho < 1.0)) throw std::domain_error("gs_entries_spectral: rho must lie in [0, 1)");

    const double two_pi = 2.0 * std::numbers::pi;
    // f_K(2 pi j / M) = 1 + sum_{k=1}^{K} 2 rho^k cos(2 pi j k / M)
    std::vector<double> density(static_cast<std::size_t>(order));
    for (int j = 0; j < order; ++j) {
        const double x = two_pi * j / order;
        CompensatedSum sum;
        sum.add(1.0);
        double rho_k = 1.0;
        for (int k = 1; k <= truncation; ++k) {
            rho_k *= rho;
            sum.add(2.0 * rho_k * std::cos(k * x));
        }
        density[static_cast<std::size_t>(j)] = sum.value();
    }

    std::vector<double> row(static_cast<std::size_t>(order));
    row[0] = 1.0;
    for (int m = 1; m < order; ++m) {
        CompensatedSum re;
        CompensatedSum im;
        for (int j = 0; j < order; ++j) {
            const long long r = (static_cast<long long>(j) * m) % order;
            const double theta = two_pi * static_cast<double>(r) / order;
            re.add(density[static_cast<std::size_t>(j)] * std::cos(theta));
            im.add(density[static_cast<std::size_t>(j)] * std::sin(theta));
        }
        if (std::abs(im.value() / order) > 1e-10)
            throw std::runtime_error("gs_entries_spectral: imaginary residue above 1e-10");
        row[static_cast<std::size_t>(m)] = re.value() / order;
    }
    return Circulant(std::move(row));
}

double dense_residual_norm(const DenseMatrix& sigma, const DenseMatrix& c) {
    if (sigma.order() != c.order()) throw std::domain_error("dense_residual_norm: order mismatch");
    const int n = sigma.order();
    CompensatedSum sum;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double d = sigma(i, j) - c(i, j);
            sum.add(d * d);
        }
    return std::sqrt(sum.value());
}

}  // namespace tcirc::oracle
