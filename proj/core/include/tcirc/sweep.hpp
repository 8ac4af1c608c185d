#pragma once

#include <iosfwd>
#include <vector>

#include "tcirc/approximation.hpp"

namespace tcirc {

/// The (method, rho, M) comparison grid behind the residual plots.
struct SweepRequest {
    std::vector<double> rho_values = {0.1, 0.5, 0.9, 0.99};
    int m_min = 3;
    int m_max = 400;
    std::vector<ApproximationMethod> methods = {ApproximationMethod::Nearest, ApproximationMethod::GS};
};

/// Emits the report header and one CSV row per cell in deterministic order:
/// method (nearest before gs), then rho ascending, then M ascending.
void run_sweep(const SweepRequest& request, std::ostream& out);

}  // namespace tcirc
