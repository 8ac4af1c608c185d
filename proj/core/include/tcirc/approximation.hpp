#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tcirc/toeplitz.hpp"

namespace tcirc {

/// The three circulant baselines compared throughout: the Frobenius-nearest
/// circulant, the classical spectral-density ("GS") circulant for exponential
/// rows, and the common-correlation matrix rho 11^T + (1-rho) I.
enum class ApproximationMethod { Nearest, GS, Common };

/// Lowercase wire name: "nearest", "gs", "common".
std::string_view method_name(ApproximationMethod method);
std::optional<ApproximationMethod> parse_method(std::string_view name);

/// One (method, rho, M) cell of the residual comparison.
/// scaled_norm_sq_direct is (1/M) ||Sigma - C||_F^2 by direct summation;
/// the closed form and the 1/sqrt(M) leading-term value are present only
/// where defined (rho < 1, and M >= 2 for the closed forms).
struct ResidualReport {
    ApproximationMethod method = ApproximationMethod::Nearest;
    std::optional<double> rho;
    int order = 0;
    double scaled_norm_sq_direct = 0.0;
    std::optional<double> scaled_norm_sq_closed;
    std::optional<double> leading_term;
};

/// The circulant minimizing Frobenius distance to the given symmetric
/// Toeplitz matrix: c_0 = r_0, c_m = r_m + (m/M)(r_{M-m} - r_m). The result
/// is a symmetric circulant by construction.
Circulant nearest_circulant(const SymmetricToeplitz& t);

/// First-row residuals r_m - c_m, m = 0..M-1. Requires a symmetric circulant
/// of the same order so the difference is itself symmetric Toeplitz.
std::vector<double> residual_offdiagonals(const SymmetricToeplitz& t, const Circulant& c);

/// Classical circulant for the exponential row: c_0 = 1,
/// c_m = (rho^m + rho^{M-m}) / (1 - rho^M). Defined only for rho < 1.
Circulant gs_circulant(double rho, int order);

/// (1/M) ||Sigma - C||_F^2 via the O(M) off-diagonal sum.
double scaled_residual_norm_sq_direct(const SymmetricToeplitz& t, const Circulant& c);

/// Closed form of (1/M) ||Sigma_e - C_nearest||_F^2 for the exponential row.
double scaled_residual_norm_sq_closed_nearest(double rho, int order);

/// Closed form of (1/M) ||Sigma_e - C_gs||_F^2 for the exponential row.
double scaled_residual_norm_sq_closed_gs(double rho, int order);

/// (2/M^3) sum (M-m) m^2 (r_m^2 - 2 r_m r_{M-m} + r_{M-m}^2): the nearest-
/// circulant residual norm for an arbitrary symmetric Toeplitz row.
double scaled_residual_norm_sq_general(const SymmetricToeplitz& t);

/// sqrt(2) rho / ((1 - rho^2) sqrt(M)).
double leading_term_nearest(double rho, int order);

/// sqrt(2) rho / ((1 - rho^2)(1 - rho^M) sqrt(M)).
double leading_term_gs(double rho, int order);

/// Eigenvalues of the nearest circulant straight from the Toeplitz row:
/// lambda_k = r_0 + 2 sum ((M-m)/M) r_m cos(2 pi m k / M).
std::vector<double> nearest_eigenvalues(const SymmetricToeplitz& t);

/// Builds the full report for an exponential (rho, M) cell.
ResidualReport residual_report(ApproximationMethod method, double rho, int order);

}  // namespace tcirc
