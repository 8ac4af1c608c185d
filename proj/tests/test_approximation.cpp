#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "tcirc/approximation.hpp"
#include "tcirc/circulant_eigen.hpp"
#include "tcirc/numeric.hpp"
#include "tcirc/oracle.hpp"
#include "tcirc/rng.hpp"
#include "tcirc/toeplitz.hpp"

using namespace tcirc;

TEST_CASE("nearest_circulant rows") {
    CHECK(nearest_circulant(expand_exponential({0.5, 4})).row() ==
          std::vector<double>{1.0, 0.40625, 0.25, 0.40625});
    CHECK(nearest_circulant(expand_exponential({0.0, 5})).row() ==
          std::vector<double>{1.0, 0.0, 0.0, 0.0, 0.0});
    // already-circulant rows are fixed points
    CHECK(nearest_circulant(SymmetricToeplitz({1.0, 0.3, 0.2, 0.3})).row() ==
          std::vector<double>{1.0, 0.3, 0.2, 0.3});
}

TEST_CASE("nearest_circulant output is always exactly symmetric") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = uniform_int(gen, 1, 32);
        std::vector<double> row(static_cast<std::size_t>(m));
        for (double& v : row) v = uniform(gen, -1.0, 1.0);
        CHECK(nearest_circulant(SymmetricToeplitz(std::move(row))).is_symmetric());
    }
}

TEST_CASE("nearest_circulant matches the cyclic-diagonal average oracle") {
    std::mt19937_64 gen(32);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = uniform_int(gen, 1, 32);
        std::vector<double> row(static_cast<std::size_t>(m));
        for (double& v : row) v = uniform(gen, -1.0, 1.0);
        const SymmetricToeplitz sigma(std::move(row));
        const auto fast = nearest_circulant(sigma).row();
        const auto averaged = oracle::cyclic_diagonal_average(materialize(sigma)).row();
        for (int i = 0; i < m; ++i)
            CHECK(std::abs(fast[static_cast<std::size_t>(i)] - averaged[static_cast<std::size_t>(i)]) <= 1e-12);
    }
}

TEST_CASE("nearest row is the weighted average of paired entries") {
    std::mt19937_64 gen(33);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = uniform_int(gen, 2, 64);
        const double rho = uniform01(gen);
        const auto c = nearest_circulant(expand_exponential({rho, m})).row();
        for (int i = 1; i < m; ++i) {
            const double weighted = (static_cast<double>(i) / m) * pow_int(rho, static_cast<std::uint64_t>(m - i)) +
                                    (static_cast<double>(m - i) / m) * pow_int(rho, static_cast<std::uint64_t>(i));
            CHECK(c[static_cast<std::size_t>(i)] == doctest::Approx(weighted).epsilon(1e-15));
        }
    }
}

TEST_CASE("residual_offdiagonals") {
    const SymmetricToeplitz sigma = expand_exponential({0.5, 3});
    const auto nearest = residual_offdiagonals(sigma, nearest_circulant(sigma));
    CHECK(nearest[0] == 0.0);
    CHECK(nearest[1] == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK(nearest[2] == doctest::Approx(-1.0 / 6.0).epsilon(1e-14));

    const SymmetricToeplitz flat = expand_exponential({0.0, 5});
    for (double r : residual_offdiagonals(flat, nearest_circulant(flat))) CHECK(r == 0.0);

    const auto gs = residual_offdiagonals(sigma, gs_circulant(0.5, 3));
    CHECK(gs[0] == 0.0);
    CHECK(gs[1] == doctest::Approx(-5.0 / 14.0).epsilon(1e-14));
    CHECK(gs[2] == doctest::Approx(-17.0 / 28.0).epsilon(1e-14));

    CHECK_THROWS_AS(residual_offdiagonals(sigma, Circulant({0, 1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(residual_offdiagonals(sigma, Circulant({1.0, 0.5})), std::invalid_argument);
}

TEST_CASE("gs_circulant rows") {
    const auto three = gs_circulant(0.5, 3).row();
    CHECK(three[0] == 1.0);
    CHECK(three[1] == doctest::Approx(6.0 / 7.0).epsilon(1e-15));
    CHECK(three[2] == doctest::Approx(6.0 / 7.0).epsilon(1e-15));

    const auto four = gs_circulant(0.5, 4).row();
    CHECK(four[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(four[2] == doctest::Approx(8.0 / 15.0).epsilon(1e-15));
    CHECK(four[3] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    CHECK(gs_circulant(0.0, 6).row() == std::vector<double>{1, 0, 0, 0, 0, 0});
    CHECK(gs_circulant(0.9, 7).is_symmetric());
    CHECK_THROWS_AS(gs_circulant(1.0, 3), std::domain_error);
    CHECK_THROWS_AS(gs_circulant(-0.1, 3), std::domain_error);
}

TEST_CASE("scaled_residual_norm_sq_direct") {
    const SymmetricToeplitz sigma3 = expand_exponential({0.5, 3});
    CHECK(scaled_residual_norm_sq_direct(sigma3, nearest_circulant(sigma3)) ==
          doctest::Approx(1.0 / 36.0).epsilon(1e-12));
    CHECK(scaled_residual_norm_sq_direct(sigma3, gs_circulant(0.5, 3)) ==
          doctest::Approx(163.0 / 392.0).epsilon(1e-12));

    const SymmetricToeplitz sigma2 = expand_exponential({0.5, 2});
    CHECK(scaled_residual_norm_sq_direct(sigma2, nearest_circulant(sigma2)) == 0.0);
}

TEST_CASE("closed forms match their pinned values") {
    CHECK(scaled_residual_norm_sq_closed_nearest(0.5, 3) == doctest::Approx(1.0 / 36.0).epsilon(1e-10));
    CHECK(scaled_residual_norm_sq_closed_nearest(0.5, 2) == doctest::Approx(0.0).margin(1e-14));
    CHECK(scaled_residual_norm_sq_closed_nearest(0.0, 9) == 0.0);
    CHECK(scaled_residual_norm_sq_closed_gs(0.5, 3) == doctest::Approx(163.0 / 392.0).epsilon(1e-12));
    CHECK(scaled_residual_norm_sq_closed_gs(0.0, 9) == 0.0);
    // large-M regime used by the comparison plots
    CHECK(scaled_residual_norm_sq_closed_nearest(0.9, 400) == doctest::Approx(0.10951651115322932).epsilon(1e-12));
    CHECK(scaled_residual_norm_sq_closed_gs(0.9, 400) == doctest::Approx(0.1121883656509696).epsilon(1e-12));

    CHECK_THROWS_AS(scaled_residual_norm_sq_closed_nearest(1.0, 4), std::domain_error);
    CHECK_THROWS_AS(scaled_residual_norm_sq_closed_gs(1.0, 4), std::domain_error);
    CHECK_THROWS_AS(scaled_residual_norm_sq_closed_nearest(0.5, 1), std::invalid_argument);
}

TEST_CASE("closed equals direct over a sample grid") {
    for (double rho : {0.0, 0.3, 0.6, 0.9, 0.99})
        for (int m : {2, 3, 7, 25, 100}) {
            const SymmetricToeplitz sigma = expand_exponential({rho, m});
            const double direct_nearest = scaled_residual_norm_sq_direct(sigma, nearest_circulant(sigma));
            CHECK(std::abs(scaled_residual_norm_sq_closed_nearest(rho, m) - direct_nearest) <=
                  1e-10 * (1.0 + direct_nearest));
            const double direct_gs = scaled_residual_norm_sq_direct(sigma, gs_circulant(rho, m));
            CHECK(std::abs(scaled_residual_norm_sq_closed_gs(rho, m) - direct_gs) <= 1e-10 * (1.0 + direct_gs));
        }
}

TEST_CASE("scaled_residual_norm_sq_general") {
    CHECK(scaled_residual_norm_sq_general(expand_exponential({0.5, 3})) ==
          doctest::Approx(1.0 / 36.0).epsilon(1e-12));
    CHECK(scaled_residual_norm_sq_general(SymmetricToeplitz({1.0, 0.3, 0.2, 0.3})) == 0.0);
    // both off-diagonal pairs contribute: (2/27)(2*0.49 + 4*0.49)
    const SymmetricToeplitz skewed({1.0, 0.8, 0.1});
    CHECK(scaled_residual_norm_sq_general(skewed) == doctest::Approx(0.21777777777777782).epsilon(1e-12));
    CHECK(scaled_residual_norm_sq_general(skewed) ==
          doctest::Approx(scaled_residual_norm_sq_direct(skewed, nearest_circulant(skewed))).epsilon(1e-12));
}

TEST_CASE("general closed form equals direct on random rows") {
    std::mt19937_64 gen(34);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = uniform_int(gen, 1, 32);
        std::vector<double> row(static_cast<std::size_t>(m));
        for (double& v : row) v = uniform(gen, -1.0, 1.0);
        const SymmetricToeplitz sigma(std::move(row));
        const double direct = scaled_residual_norm_sq_direct(sigma, nearest_circulant(sigma));
        CHECK(relative_gap(scaled_residual_norm_sq_general(sigma), direct) <= 1e-10);
    }
}

TEST_CASE("leading terms") {
    CHECK(leading_term_nearest(0.9, 400) == doctest::Approx(0.33494531740415423).epsilon(1e-14));
    CHECK(leading_term_nearest(0.5, 400) == doctest::Approx(0.047140452079103175).epsilon(1e-14));
    CHECK(leading_term_nearest(0.0, 50) == 0.0);
    CHECK(leading_term_gs(0.5, 3) == doctest::Approx(0.62209263308779128).epsilon(1e-14));
    CHECK(leading_term_gs(0.0, 50) == 0.0);
    // the two terms differ only by the 1 - rho^M scaling
    for (double rho : {0.2, 0.5, 0.9})
        for (int m : {3, 10, 400}) {
            const double expected = leading_term_nearest(rho, m) / (1.0 - pow_int(rho, static_cast<std::uint64_t>(m)));
            CHECK(leading_term_gs(rho, m) == doctest::Approx(expected).epsilon(1e-14));
        }
    CHECK_THROWS_AS(leading_term_nearest(1.0, 4), std::domain_error);
    CHECK_THROWS_AS(leading_term_gs(1.0, 4), std::domain_error);
}

TEST_CASE("nearest_eigenvalues") {
    const auto three = nearest_eigenvalues(expand_exponential({0.5, 3}));
    CHECK(three[0] == doctest::Approx(11.0 / 6.0).epsilon(1e-13));
    CHECK(three[1] == doctest::Approx(7.0 / 12.0).epsilon(1e-12));
    CHECK(three[2] == doctest::Approx(7.0 / 12.0).epsilon(1e-12));

    for (double v : nearest_eigenvalues(expand_exponential({0.0, 6}))) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));

    // rank-one all-ones case matches the common-correlation eigensystem
    const auto ones = nearest_eigenvalues(expand_exponential({1.0, 3}));
    CHECK(ones[0] == doctest::Approx(3.0).margin(1e-12));
    CHECK(ones[1] == doctest::Approx(0.0).margin(1e-12));
    CHECK(ones[2] == doctest::Approx(0.0).margin(1e-12));
}

TEST_CASE("nearest_eigenvalues equals the symmetric circulant formula") {
    std::mt19937_64 gen(35);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = uniform_int(gen, 1, 48);
        const double rho = uniform01(gen);
        const SymmetricToeplitz sigma = expand_exponential({rho, m});
        const auto direct = nearest_eigenvalues(sigma);
        const auto via_row = symmetric_circulant_eigenvalues(nearest_circulant(sigma));
        for (int k = 0; k < m; ++k)
            CHECK(std::abs(direct[static_cast<std::size_t>(k)] - via_row[static_cast<std::size_t>(k)]) <= 1e-10);
    }
}

TEST_CASE("nearest circulant beats random symmetric perturbations") {
    std::mt19937_64 gen(36);
    for (int trial = 0; trial < 5; ++trial) {
        const int m = uniform_int(gen, 2, 24);
        const double rho = uniform01(gen);
        const SymmetricToeplitz sigma = expand_exponential({rho, m});
        const DenseMatrix dense = materialize(sigma);
        const Circulant nearest = nearest_circulant(sigma);
        const double nearest_distance = oracle::dense_residual_norm(dense, materialize(nearest));
        for (int perturbation = 0; perturbation < 50; ++perturbation) {
            std::vector<double> candidate = nearest.row();
            candidate[0] += uniform(gen, -0.5, 0.5);
            for (int i = 1; 2 * i <= m; ++i) {
                const double delta = uniform(gen, -0.5, 0.5);
                candidate[static_cast<std::size_t>(i)] += delta;
                candidate[static_cast<std::size_t>(m - i)] = candidate[static_cast<std::size_t>(i)];
            }
            CHECK(nearest_distance <= oracle::dense_residual_norm(dense, materialize(Circulant(std::move(candidate)))));
        }
    }
}

TEST_CASE("nearest dominates gs across the grid") {
    for (double rho : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99})
        for (int m = 2; m <= 100; ++m) {
            const SymmetricToeplitz sigma = expand_exponential({rho, m});
            CHECK(scaled_residual_norm_sq_direct(sigma, nearest_circulant(sigma)) <=
                  scaled_residual_norm_sq_direct(sigma, gs_circulant(rho, m)));
        }
}

TEST_CASE("residual_report per method") {
    const ResidualReport nearest = residual_report(ApproximationMethod::Nearest, 0.5, 3);
    CHECK(nearest.rho == 0.5);
    CHECK(nearest.order == 3);
    CHECK(nearest.scaled_norm_sq_direct == doctest::Approx(1.0 / 36.0).epsilon(1e-12));
    REQUIRE(nearest.scaled_norm_sq_closed.has_value());
    CHECK(*nearest.scaled_norm_sq_closed == doctest::Approx(1.0 / 36.0).epsilon(1e-10));
    REQUIRE(nearest.leading_term.has_value());

    // closed forms are undefined at rho = 1; the direct residual vanishes
    const ResidualReport at_one = residual_report(ApproximationMethod::Nearest, 1.0, 5);
    CHECK(at_one.scaled_norm_sq_direct == 0.0);
    CHECK_FALSE(at_one.scaled_norm_sq_closed.has_value());
    CHECK_FALSE(at_one.leading_term.has_value());

    const ResidualReport common = residual_report(ApproximationMethod::Common, 0.5, 4);
    CHECK(common.scaled_norm_sq_direct > 0.0);
    CHECK_FALSE(common.scaled_norm_sq_closed.has_value());
    CHECK_FALSE(common.leading_term.has_value());

    CHECK_THROWS_AS(residual_report(ApproximationMethod::GS, 1.0, 4), std::domain_error);
    CHECK_THROWS_AS(residual_report(ApproximationMethod::Nearest, 1.5, 4), std::domain_error);
}

TEST_CASE("method names round-trip") {
    CHECK(method_name(ApproximationMethod::Nearest) == "nearest");
    CHECK(method_name(ApproximationMethod::GS) == "gs");
    CHECK(method_name(ApproximationMethod::Common) == "common");
    CHECK(parse_method("gs") == ApproximationMethod::GS);
    CHECK_FALSE(parse_method("fancy").has_value());
}
