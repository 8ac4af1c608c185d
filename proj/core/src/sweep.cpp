#include "tcirc/sweep.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "tcirc/io.hpp"

namespace tcirc {

void run_sweep(const SweepRequest& request, std::ostream& out) {
    if (request.rho_values.empty()) throw std::invalid_argument("run_sweep: rho_values must be nonempty");
    for (double rho : request.rho_values)
        if (!(rho >= 0.0 && rho < 1.0)) throw std::domain_error("run_sweep: every rho must lie in [0, 1)");
    if (request.m_min < 2) throw std::invalid_argument("run_sweep: m_min must be >= 2");
    if (request.m_max < request.m_min) throw std::invalid_argument("run_sweep: m_max must be >= m_min");
    if (request.methods.empty()) throw std::invalid_argument("run_sweep: methods must be nonempty");
    for (ApproximationMethod method : request.methods)
        if (method == ApproximationMethod::Common)
            throw std::invalid_argument("run_sweep: methods are restricted to nearest and gs");

    std::vector<double> rhos = request.rho_values;
    std::sort(rhos.begin(), rhos.end());
    rhos.erase(std::unique(rhos.begin(), rhos.end()), rhos.end());

    std::vector<ApproximationMethod> methods;
    for (ApproximationMethod canonical : {ApproximationMethod::Nearest, ApproximationMethod::GS})
        if (std::find(request.methods.begin(), request.methods.end(), canonical) != request.methods.end())
            methods.push_back(canonical);

    out << io::report_csv_header() << '\n';
    for (ApproximationMethod method : methods)
        for (double rho : rhos)
            for (int m = request.m_min; m <= request.m_max; ++m)
                out << io::report_csv(residual_report(method, rho, m)) << '\n';
    out.flush();
}

}  // namespace tcirc
