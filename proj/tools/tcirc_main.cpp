// tcirc: circulant approximations of symmetric Toeplitz matrices.
//
// Exit codes: 0 success, 1 failed verification, 2 invalid arguments,
// 3 domain errors, 4 unwritable output.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tcirc/approximation.hpp"
#include "tcirc/circulant_eigen.hpp"
#include "tcirc/io.hpp"
#include "tcirc/sweep.hpp"
#include "tcirc/toeplitz.hpp"
#include "tcirc/verify.hpp"

namespace {

struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!std::cout) throw OutputError("cannot write to standard output");
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw OutputError("cannot open output file: " + out_path);
    out << text;
    out.flush();
    if (!out) throw OutputError("cannot write output file: " + out_path);
}

struct CommonArgs {
    double rho = 0.0;
    int order = 0;
    std::string method_text = "nearest";
    std::string row_file;
    std::string format = "csv";
    std::string out_path;
    bool dense = false;
};

tcirc::ApproximationMethod method_from(const std::string& text) {
    const auto method = tcirc::parse_method(text);
    if (!method) throw UsageError("unknown method: " + text);
    return *method;
}

tcirc::Circulant build_circulant(const CommonArgs& args, bool have_row_file) {
    const tcirc::ApproximationMethod method = method_from(args.method_text);
    if (have_row_file) {
        if (method != tcirc::ApproximationMethod::Nearest)
            throw UsageError("--row-file input supports only --method nearest; gs and common need an exponential (rho, M)");
        return tcirc::nearest_circulant(tcirc::SymmetricToeplitz(tcirc::io::read_row_file(args.row_file)));
    }
    switch (method) {
        case tcirc::ApproximationMethod::Nearest:
            return tcirc::nearest_circulant(tcirc::expand_exponential({args.rho, args.order}));
        case tcirc::ApproximationMethod::GS:
            return tcirc::gs_circulant(args.rho, args.order);
        case tcirc::ApproximationMethod::Common: {
            if (args.order < 1) throw UsageError("--m must be positive");
            if (!(args.rho >= 0.0 && args.rho <= 1.0)) throw std::domain_error("common: rho must lie in [0, 1]");
            std::vector<double> row(static_cast<std::size_t>(args.order), args.rho);
            row[0] = 1.0;
            return tcirc::Circulant(std::move(row));
        }
    }
    throw UsageError("unknown method");
}

int cmd_approximate(const CommonArgs& args, bool have_row_file) {
    const tcirc::Circulant c = build_circulant(args, have_row_file);
    std::string text;
    if (args.dense) {
        const tcirc::DenseMatrix dense = materialize(c);
        if (args.format == "json") {
            text = "[";
            for (int i = 0; i < dense.order(); ++i) {
                if (i != 0) text.push_back(',');
                std::vector<double> row(static_cast<std::size_t>(dense.order()));
                for (int j = 0; j < dense.order(); ++j) row[static_cast<std::size_t>(j)] = dense(i, j);
                text += tcirc::io::row_json(row);
            }
            text += "]\n";
        } else {
            text = tcirc::io::dense_csv(dense);
        }
    } else if (args.format == "json") {
        text = tcirc::io::row_json(c.row()) + "\n";
    } else {
        text = tcirc::io::row_csv(c.row()) + "\n";
    }
    write_output(text, args.out_path);
    return 0;
}

int cmd_eigvals(const CommonArgs& args, bool have_row_file, bool have_method) {
    std::string text;
    if (have_row_file && !have_method) {
        const tcirc::Circulant c(tcirc::io::read_row_file(args.row_file));
        if (c.is_symmetric()) {
            const std::vector<double> values = tcirc::symmetric_circulant_eigenvalues(c);
            text = args.format == "json" ? tcirc::io::row_json(values) + "\n" : tcirc::io::row_csv(values) + "\n";
        } else {
            const tcirc::EigenSystem system = tcirc::circulant_eigenvalues(c);
            text = args.format == "json" ? tcirc::io::complex_values_json(system.values) + "\n"
                                         : tcirc::io::complex_values_csv(system.values);
        }
    } else {
        const tcirc::ApproximationMethod method = method_from(args.method_text);
        std::vector<double> values;
        switch (method) {
            case tcirc::ApproximationMethod::Nearest:
                values = tcirc::nearest_eigenvalues(tcirc::expand_exponential({args.rho, args.order}));
                break;
            case tcirc::ApproximationMethod::GS:
                values = tcirc::symmetric_circulant_eigenvalues(tcirc::gs_circulant(args.rho, args.order));
                break;
            case tcirc::ApproximationMethod::Common:
                values = tcirc::common_correlation(args.rho, args.order).eigenvalues;
                break;
        }
        text = args.format == "json" ? tcirc::io::row_json(values) + "\n" : tcirc::io::row_csv(values) + "\n";
    }
    write_output(text, args.out_path);
    return 0;
}

int cmd_residual(const CommonArgs& args) {
    const tcirc::ResidualReport report = tcirc::residual_report(method_from(args.method_text), args.rho, args.order);
    std::string text;
    if (args.format == "json") {
        text = tcirc::io::report_json(report) + "\n";
    } else {
        text = tcirc::io::report_csv_header() + "\n" + tcirc::io::report_csv(report) + "\n";
    }
    write_output(text, args.out_path);
    return 0;
}

int cmd_sweep(const tcirc::SweepRequest& request, const std::string& out_path) {
    if (out_path.empty()) {
        tcirc::run_sweep(request, std::cout);
        if (!std::cout) throw OutputError("cannot write to standard output");
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) throw OutputError("cannot open output file: " + out_path);
    tcirc::run_sweep(request, out);
    if (!out) throw OutputError("cannot write output file: " + out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius-nearest circulant approximation of symmetric Toeplitz matrices"};
    app.require_subcommand(1);

    CommonArgs args;
    const auto in_unit = CLI::Range(0.0, 1.0);

    auto* approximate = app.add_subcommand("approximate", "First row of the chosen circulant approximation");
    auto* approx_rho = approximate->add_option("--rho", args.rho, "Exponential decay rate in [0, 1]")->check(in_unit);
    auto* approx_m = approximate->add_option("--m", args.order, "Matrix order M")->check(CLI::PositiveNumber);
    approximate->add_option("--method", args.method_text, "nearest|gs|common")
        ->check(CLI::IsMember({"nearest", "gs", "common"}));
    auto* approx_row = approximate->add_option("--row-file", args.row_file, "Toeplitz first row (CSV line or JSON array)")
                           ->check(CLI::ExistingFile)
                           ->excludes(approx_rho)
                           ->excludes(approx_m);
    approximate->add_flag("--dense", args.dense, "Emit the full dense matrix instead of the first row");
    approximate->add_option("--format", args.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    approximate->add_option("--out", args.out_path, "Output path (default: stdout)");

    auto* eigvals = app.add_subcommand("eigvals", "Eigenvalues indexed k = 0..M-1");
    auto* eig_rho = eigvals->add_option("--rho", args.rho, "Exponential decay rate in [0, 1]")->check(in_unit);
    auto* eig_m = eigvals->add_option("--m", args.order, "Matrix order M")->check(CLI::PositiveNumber);
    auto* eig_method = eigvals->add_option("--method", args.method_text, "nearest|gs|common")
                           ->check(CLI::IsMember({"nearest", "gs", "common"}));
    auto* eig_row = eigvals->add_option("--row-file", args.row_file, "Circulant first row (CSV line or JSON array)")
                        ->check(CLI::ExistingFile)
                        ->excludes(eig_rho)
                        ->excludes(eig_m)
                        ->excludes(eig_method);
    eigvals->add_option("--format", args.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    eigvals->add_option("--out", args.out_path, "Output path (default: stdout)");

    auto* residual = app.add_subcommand("residual", "Scaled residual norms for one (method, rho, M) cell");
    residual->add_option("--rho", args.rho, "Exponential decay rate in [0, 1]")->required()->check(in_unit);
    residual->add_option("--m", args.order, "Matrix order M")->required()->check(CLI::PositiveNumber);
    residual->add_option("--method", args.method_text, "nearest|gs|common")
        ->check(CLI::IsMember({"nearest", "gs", "common"}));
    residual->add_option("--format", args.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    residual->add_option("--out", args.out_path, "Output path (default: stdout)");

    tcirc::SweepRequest request;
    std::string sweep_method;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep", "Residual comparison grid as CSV");
    sweep->add_option("--rhos", request.rho_values, "Comma-separated rho grid, each in [0, 1)")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--m-min", request.m_min, "Smallest order (>= 2)")->check(CLI::Range(2, 1 << 30));
    sweep->add_option("--m-max", request.m_max, "Largest order");
    sweep->add_option("--method", sweep_method, "Restrict to one method")->check(CLI::IsMember({"nearest", "gs"}));
    sweep->add_option("--out", sweep_out, "Output path (default: stdout)");

    std::uint64_t seed = 0;
    std::string level_text = "quick";
    auto* verify = app.add_subcommand("verify", "Run the oracle-equivalence and property suites");
    verify->add_option("--seed", seed, "Random seed for the sampled suites");
    verify->add_option("--level", level_text, "quick|full")->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (approximate->parsed()) {
            const bool have_row_file = approx_row->count() > 0;
            if (!have_row_file && (approximate->count("--rho") == 0 || approximate->count("--m") == 0)) {
                std::cerr << "approximate: need --rho and --m, or --row-file\n";
                return 2;
            }
            return cmd_approximate(args, have_row_file);
        }
        if (eigvals->parsed()) {
            const bool have_row_file = eig_row->count() > 0;
            if (!have_row_file && (eigvals->count("--rho") == 0 || eigvals->count("--m") == 0)) {
                std::cerr << "eigvals: need --rho and --m, or --row-file\n";
                return 2;
            }
            return cmd_eigvals(args, have_row_file, eig_method->count() > 0);
        }
        if (residual->parsed()) return cmd_residual(args);
        if (sweep->parsed()) {
            if (!sweep_method.empty()) request.methods = {method_from(sweep_method)};
            return cmd_sweep(request, sweep_out);
        }
        if (verify->parsed()) {
            const tcirc::VerifyLevel level = level_text == "full" ? tcirc::VerifyLevel::Full : tcirc::VerifyLevel::Quick;
            return tcirc::run_verification_report(seed, level, std::cout);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const OutputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
