#pragma once

#include <optional>
#include <utility>

#include "latdirac/diffops.hpp"
#include "latdirac/field.hpp"
#include "latdirac/lattice.hpp"

namespace latdirac {

// dx^j ^ dx^b = sign * dx^{b+e_j}, vanishing when b_j = 1. The sign counts
// the set bits of b below j.
struct WedgeResult {
    int sign;  // +1 or -1
    CornerIndex corner;
};

inline std::optional<WedgeResult> wedge_with_generator(int j, const CornerIndex& b) {
    if (j < 1 || j > b.dim) throw std::out_of_range("wedge_with_generator: axis out of range");
    if (b.has(j)) return std::nullopt;
    return WedgeResult{staircase_parity(b, j - 1), b.with_bit_set(j)};
}

// Discrete exterior derivative on cochains, assembled from the wedge rule:
//   d(f^b dx^b) = sum_j (1/2h)(f^b(z+2he_j) - f^b(z)) dx^j ^ dx^b
//               = sum_{a=b+e_j} sign(j,b) (i D^+_{2h;j} f^b) dx^a
template <class T>
BlockFieldT<T> exterior_derivative(const BlockFieldT<T>& f) {
    const TorusLattice& lat = f.lattice;
    if (lat.sites_per_axis < 2) throw std::invalid_argument("coarse torus needs M >= 2");
    BlockFieldT<T> out(lat);
    out.log2_scale_half = f.log2_scale_half;
    T unit = mul_i(scalar_traits<T>::inv_two_h(lat.mesh));
    for (std::int64_t comp = 0; comp < f.num_components(); ++comp) {
        CornerIndex b(static_cast<std::uint32_t>(comp), lat.dim);
        for (int j = 1; j <= lat.dim; ++j) {
            auto w = wedge_with_generator(j, b);
            if (!w) continue;
            T scale = (w->sign > 0) ? unit : -unit;
            accum_fwd_diff(lat, f.component(comp), out.component(w->corner.code()), j, scale);
        }
    }
    return out;
}

// Codifferential d*: the inner-product adjoint of the exterior derivative.
// Component b collects from each a = b + e_j via the conjugated entry
// -sign(j,b) i D^-_{2h;j}.
template <class T>
BlockFieldT<T> codifferential(const BlockFieldT<T>& f) {
    const TorusLattice& lat = f.lattice;
    if (lat.sites_per_axis < 2) throw std::invalid_argument("coarse torus needs M >= 2");
    BlockFieldT<T> out(lat);
    out.log2_scale_half = f.log2_scale_half;
    T unit = mul_i(scalar_traits<T>::inv_two_h(lat.mesh));
    for (std::int64_t comp = 0; comp < f.num_components(); ++comp) {
        CornerIndex b(static_cast<std::uint32_t>(comp), lat.dim);
        for (int j = 1; j <= lat.dim; ++j) {
            auto w = wedge_with_generator(j, b);
            if (!w) continue;
            T scale = (w->sign > 0) ? -unit : unit;
            accum_bwd_diff(lat, f.component(w->corner.code()), out.component(comp), j, scale);
        }
    }
    return out;
}

// H_HD = -i(d - d*)
template <class T>
BlockFieldT<T> apply_hodge_dirac(const BlockFieldT<T>& f) {
    BlockFieldT<T> d = exterior_derivative(f);
    BlockFieldT<T> ds = codifferential(f);
    BlockFieldT<T> out(f.lattice);
    out.log2_scale_half = f.log2_scale_half;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = mul_i(-(d.values[i] - ds.values[i]));
    return out;
}

// Standard variant d + d*, unitarily equivalent to -i(d - d*).
template <class T>
BlockFieldT<T> apply_standard_hodge_dirac(const BlockFieldT<T>& f) {
    BlockFieldT<T> d = exterior_derivative(f);
    BlockFieldT<T> ds = codifferential(f);
    BlockFieldT<T> out(f.lattice);
    out.log2_scale_half = f.log2_scale_half;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = d.values[i] + ds.values[i];
    return out;
}

}  // namespace latdirac
