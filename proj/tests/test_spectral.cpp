#include <doctest.h>

#include <cmath>

#include "latdirac/spectral.hpp"

using namespace latdirac;

TEST_CASE("zero eigenvalue is present and kernel count matches the formula") {
    for (int d = 1; d <= 3; ++d) {
        for (std::int64_t m : {2, 3, 4}) {
            TorusLattice coarse(d, m, 1.0);
            SpectrumResult res = compute_spectrum(OperatorTag::BlockKS, coarse, SpectrumMethod::Dense);
            CHECK(static_cast<std::int64_t>(res.eigenvalues.size()) == coarse.num_sites() << d);
            CHECK(count_zero_modes(res.eigenvalues) == analytic_kernel_dimension(coarse));
            // no species doubling: only the zero momentum contributes
            CHECK(analytic_kernel_dimension(coarse) == std::int64_t(1) << d);
        }
    }
}

TEST_CASE("dispersion matches the analytic list") {
    for (int d = 1; d <= 3; ++d)
        for (std::int64_t m : {2, 3, 4})
            for (double h : {1.0, 0.5}) {
                TorusLattice coarse(d, m, 2.0 * h);
                CHECK(check_dispersion(coarse, SpectrumMethod::Dense) <= 1e-10);
            }
}

TEST_CASE("dense and momentum methods agree") {
    for (int d = 1; d <= 3; ++d)
        for (std::int64_t m : {2, 3, 4})
            for (auto tag : {OperatorTag::BlockKS, OperatorTag::StandardHodgeDirac}) {
                TorusLattice coarse(d, m, 0.5);
                SpectrumResult a = compute_spectrum(tag, coarse, SpectrumMethod::Dense);
                SpectrumResult b = compute_spectrum(tag, coarse, SpectrumMethod::Momentum);
                REQUIRE(a.eigenvalues.size() == b.eigenvalues.size());
                for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
                    CHECK(std::abs(a.eigenvalues[i] - b.eigenvalues[i]) <= 1e-10);
            }
}

TEST_CASE("spectrum is symmetric about zero") {
    TorusLattice coarse(2, 4, 0.5);
    SpectrumResult res = compute_spectrum(OperatorTag::BlockKS, coarse, SpectrumMethod::Dense);
    const std::size_t n = res.eigenvalues.size();
    for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(res.eigenvalues[i] + res.eigenvalues[n - 1 - i]) <= 1e-10);
}

TEST_CASE("spectra of block KS and Hodge-Dirac coincide") {
    TorusLattice coarse(2, 3, 1.0);
    SpectrumResult a = compute_spectrum(OperatorTag::BlockKS, coarse, SpectrumMethod::Dense);
    SpectrumResult b = compute_spectrum(OperatorTag::HodgeDirac, coarse, SpectrumMethod::Dense);
    for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
        CHECK(std::abs(a.eigenvalues[i] - b.eigenvalues[i]) <= 1e-12);
}

TEST_CASE("spectral equivalence of the two Hodge-Dirac variants") {
    for (int d = 1; d <= 3; ++d) {
        TorusLattice coarse(d, 3, 0.5);
        SpectrumResult a = compute_spectrum(OperatorTag::HodgeDirac, coarse, SpectrumMethod::Dense);
        SpectrumResult b =
            compute_spectrum(OperatorTag::StandardHodgeDirac, coarse, SpectrumMethod::Dense);
        for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
            CHECK(std::abs(a.eigenvalues[i] - b.eigenvalues[i]) <= 1e-10);
    }
}

TEST_CASE("non-self-adjoint tags are rejected") {
    TorusLattice coarse(1, 4, 1.0);
    CHECK_THROWS_AS(compute_spectrum(OperatorTag::BoldD, coarse, SpectrumMethod::Dense),
                    std::invalid_argument);
}

TEST_CASE("continuum consistency table") {
    // k = 0: error is identically zero
    auto zero_table = continuum_consistency({0.0}, {0.2, 0.1});
    for (const auto& row : zero_table) CHECK(row.error == 0.0);

    // d=1, k=1: error(h) = |sin(h)/h - 1| ~ h^2/6
    auto table = continuum_consistency({1.0}, {0.2, 0.1, 0.05});
    REQUIRE(table.size() == 3);
    for (const auto& row : table)
        CHECK(std::abs(row.error - std::abs(std::sin(row.h) / row.h - 1.0)) < 1e-15);
    CHECK(std::abs(table[1].order - 2.0) <= 0.3);
    CHECK(std::abs(table[2].order - 2.0) <= 0.3);
    // halving h cuts the error by roughly four
    CHECK(table[0].error / table[1].error == doctest::Approx(4.0).epsilon(0.05));
}
