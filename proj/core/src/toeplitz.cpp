#include "tcirc/toeplitz.hpp"

#include <cmath>
#include <stdexcept>

#include "tcirc/numeric.hpp"

namespace tcirc {

SymmetricToeplitz::SymmetricToeplitz(std::vector<double> row) : row_(std::move(row)) {
    if (row_.empty()) throw std::invalid_argument("SymmetricToeplitz: row must be nonempty");
}

Circulant::Circulant(std::vector<double> row) : row_(std::move(row)) {
    if (row_.empty()) throw std::invalid_argument("Circulant: row must be nonempty");
}

bool Circulant::is_symmetric() const {
    const int m_total = order();
    for (int m = 1; m < m_total; ++m) {
        if (row_[static_cast<std::size_t>(m)] != row_[static_cast<std::size_t>(m_total - m)]) return false;
    }
    return true;
}

DenseMatrix::DenseMatrix(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("DenseMatrix: order must be positive");
    entries_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

SymmetricToeplitz expand_exponential(const ExponentialToeplitz& profile) {
    if (!(profile.rho >= 0.0 && profile.rho <= 1.0))
        throw std::domain_error("expand_exponential: rho must lie in [0, 1]");
    if (profile.order < 1) throw std::domain_error("expand_exponential: order must be positive");
    std::vector<double> row(static_cast<std::size_t>(profile.order));
    for (int m = 0; m < profile.order; ++m)
        row[static_cast<std::size_t>(m)] = pow_int(profile.rho, static_cast<std::uint64_t>(m));
    return SymmetricToeplitz(std::move(row));
}

DenseMatrix materialize(const SymmetricToeplitz& t) {
    const int n = t.order();
    DenseMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = t.entry(i, j);
    return a;
}

DenseMatrix materialize(const Circulant& c) {
    const int n = c.order();
    DenseMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = c.entry(i, j);
    return a;
}

DenseMatrix cyclic_shift_power(int order, int m) {
    if (order < 1) throw std::invalid_argument("cyclic_shift_power: order must be positive");
    if (m < 0 || m >= order) throw std::domain_error("cyclic_shift_power: m must lie in [0, order)");
    std::vector<double> row(static_cast<std::size_t>(order), 0.0);
    row[static_cast<std::size_t>(m)] = 1.0;
    return materialize(Circulant(std::move(row)));
}

double frobenius_norm(const DenseMatrix& a) {
    CompensatedSum sum;
    for (double x : a.entries()) sum.add(x * x);
    return std::sqrt(sum.value());
}

double toeplitz_offdiag_norm_sq(std::span<const double> row) {
    if (row.empty()) throw std::invalid_argument("toeplitz_offdiag_norm: row must be nonempty");
    const int m_total = static_cast<int>(row.size());
    CompensatedSum sum;
    sum.add(m_total * row[0] * row[0]);
    for (int m = 1; m < m_total; ++m) {
        const double r = row[static_cast<std::size_t>(m)];
        sum.add(2.0 * (m_total - m) * r * r);
    }
    return sum.value();
}

double toeplitz_offdiag_norm(std::span<const double> row) {
    return std::sqrt(toeplitz_offdiag_norm_sq(row));
}

CommonCorrelation common_correlation(double rho, int order) {
    if (order < 1) throw std::invalid_argument("common_correlation: order must be positive");
    DenseMatrix a(order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) a(i, j) = i == j ? 1.0 : rho;
    std::vector<double> eigenvalues(static_cast<std::size_t>(order), 1.0 - rho);
    eigenvalues[0] = 1.0 + (order - 1) * rho;
    return {std::move(a), std::move(eigenvalues)};
}

}  // namespace tcirc
