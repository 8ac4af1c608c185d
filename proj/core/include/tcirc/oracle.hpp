#pragma once

#include <optional>
#include <vector>

#include "tcirc/toeplitz.hpp"

// Independent brute-force verifiers. Everything here is deliberately plain:
// an oracle must be simpler than the code it checks, so nothing in this
// namespace calls the closed-form or eigenvalue routines under test.

namespace tcirc::oracle {

struct JacobiSettings {
    /// Convergence threshold on the off-diagonal Frobenius mass.
    /// Defaults to 1e-12 times the Frobenius norm of the input.
    std::optional<double> off_diagonal_tolerance;
    int max_sweeps = 100;
};

/// All eigenvalues of a symmetric matrix, descending, via cyclic Jacobi
/// rotations. Rejects inputs that are not symmetric within 1e-12 entrywise;
/// throws if the off-diagonal mass fails to converge within max_sweeps.
std::vector<double> jacobi_eigenvalues(const DenseMatrix& a, const JacobiSettings& settings = {});

/// Mean over each cyclic diagonal: row[m] = (1/M) sum of entries with
/// (j - i) mod M = m. The Frobenius objective decouples over cyclic
/// diagonals, so this independently reconstructs the nearest circulant.
Circulant cyclic_diagonal_average(const DenseMatrix& a);

/// Literal loop sum_{n=1}^{N} n^k p^n with compensated summation.
double direct_power_sum(long long n_terms, int k, double p);

/// Circulant entries from the truncated spectral density
/// f_K(x) = sum_{|k| <= K} rho^|k| e^{ikx} via the length-M DFT sum; entry 0
/// is rho^0 = 1 by the defining case split. Truncation error is bounded by
/// rho^K / (1 - rho).
Circulant gs_entries_spectral(double rho, int order, int truncation);

/// Frobenius norm of sigma - c by entrywise subtraction.
double dense_residual_norm(const DenseMatrix& sigma, const DenseMatrix& c);

}  // namespace tcirc::oracle
