#include "latdirac/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace latdirac {

namespace {

bool is_self_adjoint_tag(OperatorTag tag) {
    switch (tag) {
        case OperatorTag::BlockKS:
        case OperatorTag::HodgeDirac:
        case OperatorTag::StandardHodgeDirac:
        case OperatorTag::CoarseLaplacian:
            return true;
        default:
            return false;
    }
}

// Symbol of the exterior derivative at phase theta_j = 2h * kappa_j:
// (d)(theta)_{a,b} = sign(j,b) * i * (e^{i theta_j} - 1)/(2ih) for a = b+e_j.
Eigen::MatrixXcd exterior_derivative_symbol(const TorusLattice& coarse,
                                            const std::vector<double>& theta) {
    const int d = coarse.dim;
    const std::int64_t nc = std::int64_t(1) << d;
    const double two_h = coarse.mesh;
    Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(nc, nc);
    const cplx iunit(0.0, 1.0);
    for (std::int64_t comp = 0; comp < nc; ++comp) {
        CornerIndex b(static_cast<std::uint32_t>(comp), d);
        for (int j = 1; j <= d; ++j) {
            auto w = wedge_with_generator(j, b);
            if (!w) continue;
            cplx dplus = (std::exp(iunit * theta[j - 1]) - 1.0) / (iunit * two_h);
            sym(w->corner.code(), comp) += double(w->sign) * iunit * dplus;
        }
    }
    return sym;
}

// Symbol of the block staggered Hamiltonian from its own matrix elements.
Eigen::MatrixXcd block_ks_symbol(const TorusLattice& coarse, const std::vector<double>& theta) {
    const int d = coarse.dim;
    const std::int64_t nc = std::int64_t(1) << d;
    const double two_h = coarse.mesh;
    const cplx iunit(0.0, 1.0);
    Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(nc, nc);
    for (std::int64_t comp = 0; comp < nc; ++comp) {
        CornerIndex a(static_cast<std::uint32_t>(comp), d);
        for (int j = 1; j <= d; ++j) {
            double sgn = staircase_parity(a, j - 1);
            if (a.has(j)) {
                cplx dplus = (std::exp(iunit * theta[j - 1]) - 1.0) / (iunit * two_h);
                sym(comp, a.with_bit_cleared(j).code()) += sgn * dplus;
            } else {
                cplx dminus = (1.0 - std::exp(-iunit * theta[j - 1])) / (iunit * two_h);
                sym(comp, a.with_bit_set(j).code()) += sgn * dminus;
            }
        }
    }
    return sym;
}

Eigen::MatrixXcd symbol_matrix(OperatorTag tag, const TorusLattice& coarse,
                               const std::vector<double>& theta) {
    const std::int64_t nc = std::int64_t(1) << coarse.dim;
    const cplx iunit(0.0, 1.0);
    switch (tag) {
        case OperatorTag::CoarseLaplacian: {
            double lam = 0.0;
            for (double t : theta) lam += (2.0 - 2.0 * std::cos(t)) / (coarse.mesh * coarse.mesh);
            return lam * Eigen::MatrixXcd::Identity(nc, nc);
        }
        case OperatorTag::BlockKS:
            return block_ks_symbol(coarse, theta);
        case OperatorTag::HodgeDirac:
        case OperatorTag::StandardHodgeDirac: {
            Eigen::MatrixXcd dsym = exterior_derivative_symbol(coarse, theta);
            Eigen::MatrixXcd dadj = dsym.adjoint();
            if (tag == OperatorTag::StandardHodgeDirac) return dsym + dadj;
            return -iunit * (dsym - dadj);
        }
        default:
            throw std::invalid_argument("spectrum: operator tag is not self-adjoint");
    }
}

}  // namespace

std::vector<double> analytic_dispersion(const TorusLattice& coarse) {
    const int d = coarse.dim;
    const std::int64_t m_per_axis = coarse.sites_per_axis;
    const double h = coarse.mesh / 2.0;
    const std::int64_t n_momenta = coarse.num_sites();
    const std::int64_t half_block = std::int64_t(1) << (d - 1);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_momenta) << d);
    for (std::int64_t flat = 0; flat < n_momenta; ++flat) {
        std::int64_t rest = flat;
        double s = 0.0;
        for (int j = 0; j < d; ++j) {
            double sj = std::sin(std::numbers::pi * double(rest % m_per_axis) / double(m_per_axis));
            s += sj * sj;
            rest /= m_per_axis;
        }
        double omega = std::sqrt(s) / h;
        for (std::int64_t c = 0; c < half_block; ++c) {
            out.push_back(-omega);
            out.push_back(omega);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SpectrumResult compute_spectrum(OperatorTag tag, const TorusLattice& coarse,
                                SpectrumMethod method, std::int64_t cap) {
    if (!is_self_adjoint_tag(tag))
        throw std::invalid_argument("spectrum: operator tag is not self-adjoint");
    if (coarse.sites_per_axis < 2) throw std::invalid_argument("coarse torus needs M >= 2");

    SpectrumResult res;
    res.d = coarse.dim;
    res.M = coarse.sites_per_axis;
    res.h = coarse.mesh / 2.0;

    if (method == SpectrumMethod::Dense) {
        DenseMatrix m = assemble_dense<cplx>(tag, coarse, cap);
        Eigen::MatrixXcd em(m.dim, m.dim);
        for (std::int64_t r = 0; r < m.dim; ++r)
            for (std::int64_t c = 0; c < m.dim; ++c) em(r, c) = m.at(r, c);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em, Eigen::EigenvaluesOnly);
        res.eigenvalues.assign(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + m.dim);
    } else {
        const std::int64_t n_momenta = coarse.num_sites();
        std::vector<double> theta(coarse.dim);
        for (std::int64_t flat = 0; flat < n_momenta; ++flat) {
            std::int64_t rest = flat;
            for (int j = 0; j < coarse.dim; ++j) {
                theta[j] = 2.0 * std::numbers::pi * double(rest % coarse.sites_per_axis) /
                           double(coarse.sites_per_axis);
                rest /= coarse.sites_per_axis;
            }
            Eigen::MatrixXcd blk = symbol_matrix(tag, coarse, theta);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(blk, Eigen::EigenvaluesOnly);
            for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
                res.eigenvalues.push_back(solver.eigenvalues()(i));
        }
    }
    std::sort(res.eigenvalues.begin(), res.eigenvalues.end());

    if (tag == OperatorTag::BlockKS || tag == OperatorTag::HodgeDirac) {
        res.analytic_eigenvalues = analytic_dispersion(coarse);
        double dev = 0.0;
        for (std::size_t i = 0; i < res.eigenvalues.size(); ++i)
            dev = std::max(dev, std::abs(res.eigenvalues[i] - res.analytic_eigenvalues[i]));
        res.max_deviation = dev;
    }
    return res;
}

double check_dispersion(const TorusLattice& coarse, SpectrumMethod method, std::int64_t cap) {
    return compute_spectrum(OperatorTag::BlockKS, coarse, method, cap).max_deviation;
}

std::int64_t analytic_kernel_dimension(const TorusLattice& coarse) {
    const std::int64_t m_per_axis = coarse.sites_per_axis;
    std::int64_t zero_momenta = 0;
    for (std::int64_t flat = 0; flat < coarse.num_sites(); ++flat) {
        std::int64_t rest = flat;
        bool all_zero = true;
        for (int j = 0; j < coarse.dim; ++j) {
            std::int64_t mj = rest % m_per_axis;
            rest /= m_per_axis;
            if (std::sin(std::numbers::pi * double(mj) / double(m_per_axis)) != 0.0)
                all_zero = false;
        }
        if (all_zero) ++zero_momenta;
    }
    return zero_momenta << coarse.dim;
}

std::int64_t count_zero_modes(const std::vector<double>& eigenvalues, double threshold) {
    std::int64_t n = 0;
    for (double v : eigenvalues)
        if (std::abs(v) <= threshold) ++n;
    return n;
}

std::vector<ContinuumRow> continuum_consistency(const std::vector<double>& k,
                                                const std::vector<double>& h_list) {
    double knorm = 0.0;
    for (double kj : k) knorm += kj * kj;
    knorm = std::sqrt(knorm);
    std::vector<ContinuumRow> table;
    table.reserve(h_list.size());
    for (std::size_t i = 0; i < h_list.size(); ++i) {
        double h = h_list[i];
        if (h <= 0.0) throw std::invalid_argument("mesh sizes must be positive");
        double s = 0.0;
        for (double kj : k) {
            double sj = std::sin(h * kj);
            s += sj * sj;
        }
        ContinuumRow row;
        row.h = h;
        row.error = std::abs(std::sqrt(s) / h - knorm);
        row.order = std::nan("");
        if (i > 0) {
            const ContinuumRow& prev = table.back();
            if (row.error > 0.0 && prev.error > 0.0 && prev.h != h)
                row.order = std::log(prev.error / row.error) / std::log(prev.h / h);
        }
        table.push_back(row);
    }
    return table;
}

}  // namespace latdirac
