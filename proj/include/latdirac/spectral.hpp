#pragma once

#include <cstdint>
#include <vector>

#include "latdirac/dense.hpp"
#include "latdirac/lattice.hpp"

namespace latdirac {

enum class SpectrumMethod { Dense, Momentum };

struct SpectrumResult {
    int d = 0;
    std::int64_t M = 0;
    double h = 0.0;  // fine mesh
    std::vector<double> eigenvalues;           // sorted ascending
    std::vector<double> analytic_eigenvalues;  // sorted; filled for block_ks
    double max_deviation = 0.0;
};

// Sorted analytic staggered spectrum on the coarse torus:
// +-sqrt(sum_j sin^2(pi m_j / M)) / h, each sign with multiplicity 2^{d-1}
// per momentum.
std::vector<double> analytic_dispersion(const TorusLattice& coarse);

// Eigenvalues of a self-adjoint block operator. `Dense` diagonalizes the
// assembled matrix; `Momentum` block-diagonalizes over coarse momenta into
// M^d Hermitian 2^d x 2^d blocks.
SpectrumResult compute_spectrum(OperatorTag tag, const TorusLattice& coarse,
                                SpectrumMethod method,
                                std::int64_t cap = kDefaultDenseCap);

// Max absolute deviation between the sorted computed block_ks spectrum and
// the sorted analytic dispersion list.
double check_dispersion(const TorusLattice& coarse, SpectrumMethod method = SpectrumMethod::Dense,
                        std::int64_t cap = kDefaultDenseCap);

// 2^d x number of momenta with all sin(pi m_j / M) = 0.
std::int64_t analytic_kernel_dimension(const TorusLattice& coarse);

std::int64_t count_zero_modes(const std::vector<double>& eigenvalues, double threshold = 1e-8);

struct ContinuumRow {
    double h = 0.0;
    double error = 0.0;
    double order = 0.0;  // NaN on the first row and wherever errors vanish
};

// Dispersion error of the positive branch at fixed physical momentum k:
// error(h) = |sqrt(sum_j sin^2(h k_j))/h - |k||, with the empirical
// convergence order between consecutive mesh sizes.
std::vector<ContinuumRow> continuum_consistency(const std::vector<double>& k,
                                                const std::vector<double>& h_list);

}  // namespace latdirac
