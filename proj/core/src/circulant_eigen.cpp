#include "tcirc/circulant_eigen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tcirc/numeric.hpp"

namespace tcirc {

namespace {

double reduced_angle(int order, long long j) {
    long long r = j % order;
    if (r < 0) r += order;
    return 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(order);
}

}  // namespace

Complex unit_root(int order, long long j) {
    if (order < 1) throw std::invalid_argument("unit_root: order must be positive");
    const double theta = reduced_angle(order, j);
    return {std::cos(theta), std::sin(theta)};
}

EigenSystem circulant_eigenvalues(const Circulant& c) {
    const int n = c.order();
    const auto& row = c.row();
    EigenSystem system;
    system.order = n;
    system.values.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        CompensatedSum re;
        CompensatedSum im;
        re.add(row[0]);
        for (int m = 1; m < n; ++m) {
            const Complex w = unit_root(n, static_cast<long long>(m) * k);
            re.add(row[static_cast<std::size_t>(m)] * w.real());
            im.add(row[static_cast<std::size_t>(m)] * w.imag());
        }
        system.values[static_cast<std::size_t>(k)] = {re.value(), im.value()};
    }
    return system;
}

std::vector<Complex> circulant_eigenvector(int order, int k) {
    if (order < 1) throw std::invalid_argument("circulant_eigenvector: order must be positive");
    if (k < 0 || k >= order) throw std::domain_error("circulant_eigenvector: k must lie in [0, order)");
    std::vector<Complex> x(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) x[static_cast<std::size_t>(i)] = unit_root(order, static_cast<long long>(i) * k);
    return x;
}

std::vector<double> symmetric_circulant_eigenvalues(const Circulant& c) {
    if (!c.is_symmetric())
        throw std::invalid_argument("symmetric_circulant_eigenvalues: row is not a symmetric circulant");
    const int n = c.order();
    const auto& row = c.row();
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        CompensatedSum sum;
        sum.add(row[0]);
        for (int m = 1; m < n; ++m) {
            const double theta = reduced_angle(n, static_cast<long long>(m) * k);
            sum.add(row[static_cast<std::size_t>(m)] * std::cos(theta));
        }
        values[static_cast<std::size_t>(k)] = sum.value();
    }
    return values;
}

}  // namespace tcirc
