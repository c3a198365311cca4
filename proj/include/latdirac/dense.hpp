#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "latdirac/diffops.hpp"
#include "latdirac/hodge.hpp"
#include "latdirac/staggered.hpp"

namespace latdirac {

enum class OperatorTag {
    BlockKS,
    HodgeDirac,
    StandardHodgeDirac,
    BoldD,
    BoldDAdjoint,
    ExteriorDerivative,
    Codifferential,
    CoarseLaplacian,
};

inline std::optional<OperatorTag> parse_operator_tag(const std::string& s) {
    if (s == "block_ks") return OperatorTag::BlockKS;
    if (s == "hodge_dirac") return OperatorTag::HodgeDirac;
    if (s == "standard_hodge_dirac") return OperatorTag::StandardHodgeDirac;
    if (s == "bold_d") return OperatorTag::BoldD;
    if (s == "bold_d_adjoint") return OperatorTag::BoldDAdjoint;
    if (s == "exterior_derivative") return OperatorTag::ExteriorDerivative;
    if (s == "codifferential") return OperatorTag::Codifferential;
    if (s == "coarse_laplacian") return OperatorTag::CoarseLaplacian;
    return std::nullopt;
}

// Power of the factored-out 1/(2h) scale in exact mode: first-order operators
// carry (2h)^1, the Laplacian (2h)^2.
inline int scale_power(OperatorTag tag) {
    return tag == OperatorTag::CoarseLaplacian ? 2 : 1;
}

template <class T>
BlockFieldT<T> apply_operator(OperatorTag tag, const BlockFieldT<T>& v) {
    switch (tag) {
        case OperatorTag::BlockKS: return apply_block_ks(v);
        case OperatorTag::HodgeDirac: return apply_hodge_dirac(v);
        case OperatorTag::StandardHodgeDirac: return apply_standard_hodge_dirac(v);
        case OperatorTag::BoldD: return apply_bold_d(v);
        case OperatorTag::BoldDAdjoint: return apply_bold_d_adjoint(v);
        case OperatorTag::ExteriorDerivative: return exterior_derivative(v);
        case OperatorTag::Codifferential: return codifferential(v);
        case OperatorTag::CoarseLaplacian: return apply_coarse_laplacian(v);
    }
    throw std::invalid_argument("unknown operator tag");
}

constexpr std::int64_t kDefaultDenseCap = 4096;

// Explicit matrix of a block operator, row/column index = comp * M^d + site.
template <class T>
struct DenseMatrixT {
    std::int64_t dim = 0;
    std::vector<T> a;  // row-major

    DenseMatrixT() = default;
    explicit DenseMatrixT(std::int64_t n)
        : dim(n), a(static_cast<std::size_t>(n) * n, scalar_traits<T>::zero()) {}

    T& at(std::int64_t r, std::int64_t c) { return a[static_cast<std::size_t>(r) * dim + c]; }
    const T& at(std::int64_t r, std::int64_t c) const {
        return a[static_cast<std::size_t>(r) * dim + c];
    }
};

using DenseMatrix = DenseMatrixT<cplx>;
using ExactDenseMatrix = DenseMatrixT<GaussInt>;

// Column-by-column assembly from canonical basis fields.
template <class T>
DenseMatrixT<T> assemble_dense(OperatorTag tag, const TorusLattice& coarse,
                               std::int64_t cap = kDefaultDenseCap) {
    const std::int64_t n = coarse.num_sites() << coarse.dim;
    if (n > cap) throw std::length_error("dense dimension exceeds cap");
    DenseMatrixT<T> mat(n);
    for (std::int64_t col = 0; col < n; ++col) {
        BlockFieldT<T> e(coarse);
        e.values[static_cast<std::size_t>(col)] = scalar_traits<T>::one();
        BlockFieldT<T> out = apply_operator(tag, e);
        for (std::int64_t row = 0; row < n; ++row)
            mat.at(row, col) = out.values[static_cast<std::size_t>(row)];
    }
    return mat;
}

template <class T>
DenseMatrixT<T> adjoint(const DenseMatrixT<T>& m) {
    DenseMatrixT<T> out(m.dim);
    for (std::int64_t r = 0; r < m.dim; ++r)
        for (std::int64_t c = 0; c < m.dim; ++c)
            out.at(r, c) = scalar_traits<T>::conj(m.at(c, r));
    return out;
}

template <class T>
DenseMatrixT<T> multiply(const DenseMatrixT<T>& x, const DenseMatrixT<T>& y) {
    if (x.dim != y.dim) throw std::invalid_argument("multiply: dimension mismatch");
    DenseMatrixT<T> out(x.dim);
    const std::int64_t n = x.dim;
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t r = 0; r < n; ++r)
        for (std::int64_t k = 0; k < n; ++k) {
            T xv = x.at(r, k);
            for (std::int64_t c = 0; c < n; ++c) out.at(r, c) += xv * y.at(k, c);
        }
    return out;
}

inline double abs_value(cplx v) { return std::abs(v); }
inline double abs_value(GaussInt v) { return std::hypot(double(v.re), double(v.im)); }

template <class T>
double max_abs_diff(const DenseMatrixT<T>& x, const DenseMatrixT<T>& y) {
    if (x.dim != y.dim) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        m = std::max(m, abs_value(x.a[i] - y.a[i]));
    return m;
}

template <class T>
double max_abs_entry(const DenseMatrixT<T>& x) {
    double m = 0.0;
    for (const auto& v : x.a) m = std::max(m, abs_value(v));
    return m;
}

// Conjugation by a permutation of block components (sites untouched):
// out = P m P*, where P sends component c to perm[c].
template <class T>
DenseMatrixT<T> conjugate_by_component_permutation(const DenseMatrixT<T>& m,
                                                   const std::vector<std::int64_t>& perm,
                                                   std::int64_t sites_per_block) {
    DenseMatrixT<T> out(m.dim);
    auto mapped = [&](std::int64_t idx) {
        std::int64_t comp = idx / sites_per_block;
        std::int64_t site = idx % sites_per_block;
        return perm[static_cast<std::size_t>(comp)] * sites_per_block + site;
    };
    for (std::int64_t r = 0; r < m.dim; ++r)
        for (std::int64_t c = 0; c < m.dim; ++c)
            out.at(mapped(r), mapped(c)) = m.at(r, c);
    return out;
}

// The basis identification of the equivalence theorem: with components of the
// staggered block field and cochain coefficients both ordered by corner code,
// the unitary is the identity permutation. Exposed so alternative orderings
// can be plugged in.
inline std::vector<std::int64_t> theorem_unitary(int d) {
    if (d < 1) throw std::invalid_argument("theorem_unitary: d must be >= 1");
    std::vector<std::int64_t> perm(std::size_t(1) << d);
    std::iota(perm.begin(), perm.end(), 0);
    return perm;
}

enum class ArithmeticMode { Float, Exact };

struct EquivalenceReport {
    int d = 0;
    std::int64_t M = 0;
    double h = 0.0;  // fine mesh; the shared coarse torus has spacing 2h
    ArithmeticMode mode = ArithmeticMode::Exact;
    bool exact_equal = false;
    double max_abs_residual = 0.0;
    std::int64_t worst_block_a = 0;
    std::int64_t worst_block_b = 0;

    bool passed(double tol) const {
        return mode == ArithmeticMode::Exact ? exact_equal : max_abs_residual <= tol;
    }
};

namespace detail {

template <class T>
EquivalenceReport verify_equivalence_impl(const TorusLattice& coarse,
                                          const std::vector<std::int64_t>& perm,
                                          std::int64_t cap) {
    DenseMatrixT<T> ks = assemble_dense<T>(OperatorTag::BlockKS, coarse, cap);
    DenseMatrixT<T> hd = assemble_dense<T>(OperatorTag::HodgeDirac, coarse, cap);
    const std::int64_t m = coarse.num_sites();
    DenseMatrixT<T> hd_conj = conjugate_by_component_permutation(hd, perm, m);

    EquivalenceReport rep;
    rep.d = coarse.dim;
    rep.M = coarse.sites_per_axis;
    rep.h = coarse.mesh / 2.0;
    rep.exact_equal = true;
    // residual localized per (a,b) component block for sign diagnosis
    double scale = std::is_same_v<T, GaussInt> ? 1.0 / coarse.mesh : 1.0;
    for (std::int64_t r = 0; r < ks.dim; ++r)
        for (std::int64_t c = 0; c < ks.dim; ++c) {
            double dv = abs_value(ks.at(r, c) - hd_conj.at(r, c)) * scale;
            if (dv > 0.0) rep.exact_equal = false;
            if (dv > rep.max_abs_residual) {
                rep.max_abs_residual = dv;
                rep.worst_block_a = r / m;
                rep.worst_block_b = c / m;
            }
        }
    return rep;
}

}  // namespace detail

inline EquivalenceReport verify_equivalence(const TorusLattice& coarse, ArithmeticMode mode,
                                            const std::vector<std::int64_t>& perm,
                                            std::int64_t cap = kDefaultDenseCap) {
    EquivalenceReport rep = (mode == ArithmeticMode::Exact)
                                ? detail::verify_equivalence_impl<GaussInt>(coarse, perm, cap)
                                : detail::verify_equivalence_impl<cplx>(coarse, perm, cap);
    rep.mode = mode;
    return rep;
}

inline EquivalenceReport verify_equivalence(const TorusLattice& coarse,
                                            ArithmeticMode mode = ArithmeticMode::Exact,
                                            std::int64_t cap = kDefaultDenseCap) {
    return verify_equivalence(coarse, mode, theorem_unitary(coarse.dim), cap);
}

// max entry of |dense(H_KS)^2 - Laplacian x I|; zero in exact mode.
inline double verify_square_is_laplacian(const TorusLattice& coarse, ArithmeticMode mode,
                                         std::int64_t cap = kDefaultDenseCap) {
    if (mode == ArithmeticMode::Exact) {
        ExactDenseMatrix h = assemble_dense<GaussInt>(OperatorTag::BlockKS, coarse, cap);
        ExactDenseMatrix lap = assemble_dense<GaussInt>(OperatorTag::CoarseLaplacian, coarse, cap);
        double scale = 1.0 / (coarse.mesh * coarse.mesh);
        return max_abs_diff(multiply(h, h), lap) * scale;
    }
    DenseMatrix h = assemble_dense<cplx>(OperatorTag::BlockKS, coarse, cap);
    DenseMatrix lap = assemble_dense<cplx>(OperatorTag::CoarseLaplacian, coarse, cap);
    return max_abs_diff(multiply(h, h), lap);
}

}  // namespace latdirac
