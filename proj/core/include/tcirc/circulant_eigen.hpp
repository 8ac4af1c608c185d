#pragma once

#include <complex>
#include <vector>

#include "tcirc/toeplitz.hpp"

namespace tcirc {

using Complex = std::complex<double>;

/// Circulant eigenvalues indexed by k = 0..M-1 (not ordered by magnitude);
/// values[k] pairs with the root-of-unity eigenvector circulant_eigenvector(M, k).
struct EigenSystem {
    int order = 0;
    std::vector<Complex> values;
};

/// omega^j for omega = e^{2 pi i / M}, evaluated at the reduced angle
/// 2 pi (j mod M) / M so large exponents do not drift in phase.
Complex unit_root(int order, long long j);

/// lambda_k = c_0 + sum_{m>=1} c_m omega^{mk}.
EigenSystem circulant_eigenvalues(const Circulant& c);

/// (1, omega^k, omega^{2k}, ..., omega^{(M-1)k}); unnormalized, Euclidean
/// length sqrt(M).
std::vector<Complex> circulant_eigenvector(int order, int k);

/// Real eigenvalues lambda_k = c_0 + sum_{m>=1} c_m cos(2 pi m k / M) of a
/// symmetric circulant. Rejects rows that fail the exact symmetry predicate.
std::vector<double> symmetric_circulant_eigenvalues(const Circulant& c);

}  // namespace tcirc
