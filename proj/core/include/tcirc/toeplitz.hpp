#pragma once

#include <span>
#include <vector>

namespace tcirc {

/// Real symmetric Toeplitz matrix stored as its first row (r_0, ..., r_{M-1});
/// entry (i, j) equals row[|i - j|].
class SymmetricToeplitz {
public:
    explicit SymmetricToeplitz(std::vector<double> row);

    int order() const { return static_cast<int>(row_.size()); }
    const std::vector<double>& row() const { return row_; }
    double entry(int i, int j) const { return row_[static_cast<std::size_t>(i > j ? i - j : j - i)]; }

private:
    std::vector<double> row_;
};

/// Exponential-decay profile: expands to the symmetric Toeplitz row r_m = rho^m.
struct ExponentialToeplitz {
    double rho = 0.0;
    int order = 0;
};

/// Real circulant matrix stored as its first row (c_0, ..., c_{M-1});
/// entry (i, j) equals row[(j - i) mod M], so row i is row 0 cyclically
/// shifted i places to the right.
class Circulant {
public:
    explicit Circulant(std::vector<double> row);

    int order() const { return static_cast<int>(row_.size()); }
    const std::vector<double>& row() const { return row_; }
    double entry(int i, int j) const {
        const int m = j - i;
        return row_[static_cast<std::size_t>(m < 0 ? m + order() : m)];
    }

    /// True iff row[m] == row[M-m] exactly for all 1 <= m <= M-1.
    /// Rows are constructed, not measured, so the comparison is exact.
    bool is_symmetric() const;

private:
    std::vector<double> row_;
};

/// Square dense matrix of 64-bit reals, row-major.
class DenseMatrix {
public:
    explicit DenseMatrix(int order);

    int order() const { return order_; }
    double& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * order_ + j]; }
    double operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * order_ + j]; }
    std::span<const double> entries() const { return entries_; }

private:
    int order_ = 0;
    std::vector<double> entries_;
};

/// Expands (rho, M) to the row (1, rho, rho^2, ..., rho^{M-1}), with 0^0 = 1.
/// Rejects rho outside [0, 1] and M < 1.
SymmetricToeplitz expand_exponential(const ExponentialToeplitz& profile);

DenseMatrix materialize(const SymmetricToeplitz& t);
DenseMatrix materialize(const Circulant& c);

/// P^m for the cyclic right-shift permutation P: the circulant whose first
/// row is 1 at index m and 0 elsewhere. P^0 is the identity.
DenseMatrix cyclic_shift_power(int order, int m);

/// sqrt(sum of squared entries).
double frobenius_norm(const DenseMatrix& a);

/// Frobenius norm of the symmetric Toeplitz matrix with the given first row,
/// in O(M) via off-diagonal multiplicities:
/// sqrt(M r_0^2 + sum_{m>=1} 2 (M-m) r_m^2).
double toeplitz_offdiag_norm(std::span<const double> row);

/// Squared form of toeplitz_offdiag_norm, without the sqrt round trip.
double toeplitz_offdiag_norm_sq(std::span<const double> row);

/// The matrix rho 11^T + (1 - rho) I together with its known eigenvalues:
/// 1 + (M-1) rho once, then 1 - rho with multiplicity M-1.
struct CommonCorrelation {
    DenseMatrix matrix;
    std::vector<double> eigenvalues;
};

CommonCorrelation common_correlation(double rho, int order);

}  // namespace tcirc
