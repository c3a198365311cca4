// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "latdirac/bench.hpp"
#include "latdirac/dense.hpp"
#include "latdirac/hodge.hpp"
#include "latdirac/spectral.hpp"
#include "latdirac/staggered.hpp"

using namespace latdirac;

namespace {

int failures = 0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

struct SweepCase {
    int d;
    std::int64_t M;
    double h;
};

std::vector<SweepCase> sweep() {
    std::vector<SweepCase> cases;
    for (int d : {1, 2, 3})
        for (std::int64_t M : {2, 3, 4})
            for (double h : {1.0, 0.5}) {
                double dim = std::pow(2.0, d) * std::pow(double(M), d);
                if (dim <= double(kDefaultDenseCap)) cases.push_back({d, M, h});
            }
    return cases;
}

}  // namespace

int main() {
    auto cases = sweep();

    {  // 1: operator identity, exact arithmetic
        bool ok = true;
        for (const auto& c : cases) {
            TorusLattice coarse(c.d, c.M, 2.0 * c.h);
            if (!verify_equivalence(coarse, ArithmeticMode::Exact).exact_equal) ok = false;
        }
        report(1, "operator identity (exact)", ok,
               std::to_string(cases.size()) + " cases, exact_equal");
    }

    {  // 2: operator identity, floating
        double worst = 0.0;
        for (const auto& c : cases) {
            TorusLattice coarse(c.d, c.M, 2.0 * c.h);
            worst = std::max(worst,
                             verify_equivalence(coarse, ArithmeticMode::Float).max_abs_residual);
        }
        report(2, "operator identity (float)", worst <= 1e-13,
               "max residual " + fmt(worst));
    }

    {  // 3: negative control, wrong component ordering must be detected
        TorusLattice coarse(2, 3, 2.0);
        EquivalenceReport rep =
            verify_equivalence(coarse, ArithmeticMode::Float, {0, 2, 1, 3});
        report(3, "negative control (perm 0,2,1,3)", rep.max_abs_residual > 1e-3,
               "residual " + fmt(rep.max_abs_residual));
    }

    {  // 4: cochain axioms
        bool dd_ok = true;
        double adj_worst = 0.0;
        for (const auto& c : cases) {
            TorusLattice coarse(c.d, c.M, 2.0 * c.h);
            ExactDenseMatrix dm = assemble_dense<GaussInt>(OperatorTag::ExteriorDerivative, coarse);
            if (max_abs_entry(multiply(dm, dm)) != 0.0) dd_ok = false;
            for (int p = 0; p < 100; ++p) {
                BlockField f = random_block_field(coarse, 10000 + p);
                BlockField g = random_block_field(coarse, 20000 + p);
                cplx lhs = inner(exterior_derivative(f), g);
                cplx rhs = inner(f, codifferential(g));
                adj_worst = std::max(adj_worst, std::abs(lhs - rhs) / (norm(f) * norm(g)));
            }
        }
        report(4, "cochain axioms (d^2=0 exact, adjointness)", dd_ok && adj_worst <= 1e-13,
               std::string("d^2 ") + (dd_ok ? "exact zero" : "NONZERO") +
                   ", adjointness worst (rel) " + fmt(adj_worst));
    }

    {  // 5: square identity in exact arithmetic
        bool ok = true;
        for (const auto& c : cases) {
            TorusLattice coarse(c.d, c.M, 2.0 * c.h);
            if (verify_square_is_laplacian(coarse, ArithmeticMode::Exact) != 0.0) ok = false;
        }
        report(5, "square identity (exact)", ok, std::to_string(cases.size()) + " cases");
    }

    {  // 6: unitarity of the split
        bool ok = true;
        double worst = 0.0;
        for (int d = 1; d <= 3; ++d)
            for (std::int64_t n : {4, 6, 8}) {
                TorusLattice fine(d, n, 0.5);
                for (int trial = 0; trial < 100; ++trial) {
                    Field u = random_field(fine, 30000 + 100 * d + trial);
                    BlockField v = split(u);
                    worst = std::max(worst, std::abs(norm(v) - norm(u)) / norm(u));
                    Field back = unsplit(v);
                    for (std::int64_t i = 0; i < u.size(); ++i)
                        if (back[i] != u[i]) ok = false;
                }
            }
        report(6, "split unitarity and inversion", ok && worst <= 1e-13,
               "norm drift " + fmt(worst));
    }

    {  // 7: conjugation identity, block vs scalar route
        double worst = 0.0;
        for (const auto& c : cases) {
            TorusLattice fine(c.d, 2 * c.M, c.h);
            for (int trial = 0; trial < 100; ++trial) {
                Field u = random_field(fine, 40000 + trial);
                BlockField lhs = apply_block_ks(split(u));
                BlockField rhs = split(apply_scalar_ks(u));
                for (std::size_t i = 0; i < lhs.values.size(); ++i)
                    worst = std::max(worst, std::abs(lhs.values[i] - rhs.values[i]));
            }
        }
        report(7, "block = split o scalar o unsplit", worst <= 1e-13,
               "worst entry " + fmt(worst));
    }

    {  // 8: dispersion, method agreement, spectral symmetry
        double disp_worst = 0.0, agree_worst = 0.0, sym_worst = 0.0;
        for (int d = 1; d <= 3; ++d)
            for (std::int64_t M : {2, 3, 4})
                for (double h : {1.0, 0.5}) {
                    TorusLattice coarse(d, M, 2.0 * h);
                    SpectrumResult dense_res =
                        compute_spectrum(OperatorTag::BlockKS, coarse, SpectrumMethod::Dense);
                    SpectrumResult mom_res =
                        compute_spectrum(OperatorTag::BlockKS, coarse, SpectrumMethod::Momentum);
                    disp_worst = std::max(disp_worst, dense_res.max_deviation);
                    const std::size_t n = dense_res.eigenvalues.size();
                    for (std::size_t i = 0; i < n; ++i) {
                        agree_worst = std::max(agree_worst, std::abs(dense_res.eigenvalues[i] -
                                                                    mom_res.eigenvalues[i]));
                        sym_worst = std::max(sym_worst,
                                             std::abs(dense_res.eigenvalues[i] +
                                                      dense_res.eigenvalues[n - 1 - i]));
                    }
                }
        bool ok = disp_worst <= 1e-10 && agree_worst <= 1e-10 && sym_worst <= 1e-10;
        report(8, "dispersion / methods / symmetry", ok,
               "disp " + fmt(disp_worst) + ", agree " + fmt(agree_worst) +
                   ", sym " + fmt(sym_worst));
    }

    {  // 9: spectral equivalence of d+d* and -i(d-d*)
        double worst = 0.0;
        for (int d = 1; d <= 3; ++d)
            for (std::int64_t M : {2, 3, 4}) {
                TorusLattice coarse(d, M, 1.0);
                SpectrumResult a =
                    compute_spectrum(OperatorTag::HodgeDirac, coarse, SpectrumMethod::Dense);
                SpectrumResult b = compute_spectrum(OperatorTag::StandardHodgeDirac, coarse,
                                                    SpectrumMethod::Dense);
                for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
                    worst = std::max(worst, std::abs(a.eigenvalues[i] - b.eigenvalues[i]));
            }
        report(9, "spectral equivalence of the two variants", worst <= 1e-10,
               "worst " + fmt(worst));
    }

    {  // 10: continuum consistency at d=1, k=1
        auto table = continuum_consistency({1.0}, {0.2, 0.1, 0.05});
        bool ok = table.size() == 3;
        for (std::size_t i = 1; i < table.size(); ++i)
            if (!(std::abs(table[i].order - 2.0) <= 0.3)) ok = false;
        report(10, "continuum convergence order 2.0 +- 0.3", ok,
               "orders " + fmt(table[1].order) + ", " + fmt(table[2].order));
    }

    {  // 11: determinism and performance smoke
        BenchReport a = run_bench(3, 64, 1.0, 10);
        BenchReport b = run_bench(3, 64, 1.0, 10);
        bool ok = a.oracle_checked && b.oracle_checked && a.checksum == b.checksum;
        report(11, "bench determinism and dense-oracle checksum", ok,
               "oracle residual " + fmt(a.oracle_residual) + ", checksum repeat " +
                   (a.checksum == b.checksum ? "identical" : "mismatch"));
    }

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
