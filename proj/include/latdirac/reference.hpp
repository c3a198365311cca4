#pragma once

// Serial reference implementations, written directly from the defining
// formulas with per-site coordinate arithmetic. They are deliberately naive
// and independent of the stencil kernels; tests compare the two paths and the
// benchmark reports both.

#include "latdirac/field.hpp"
#include "latdirac/hodge.hpp"
#include "latdirac/lattice.hpp"

namespace latdirac::reference {

inline cplx sym_diff_at(const Field& u, const SiteIndex& z, int j) {
    const TorusLattice& lat = u.lattice;
    SiteIndex zp = shift_site(z, j, +1, lat.sites_per_axis);
    SiteIndex zm = shift_site(z, j, -1, lat.sites_per_axis);
    return (u[site_to_flat(lat, zp)] - u[site_to_flat(lat, zm)]) /
           (cplx(0.0, 2.0 * lat.mesh));
}

inline Field apply_scalar_ks(const Field& u) {
    const TorusLattice& lat = u.lattice;
    Field out(lat);
    for (std::int64_t idx = 0; idx < lat.num_sites(); ++idx) {
        SiteIndex z = flat_to_site(lat, idx);
        cplx acc = 0.0;
        for (int j = 1; j <= lat.dim; ++j)
            acc += double(staircase_parity(z, j - 1)) * sym_diff_at(u, z, j);
        out[idx] = acc;
    }
    return out;
}

inline cplx block_fwd_at(const BlockField& v, std::int64_t comp, const SiteIndex& z, int j) {
    const TorusLattice& lat = v.lattice;
    SiteIndex zp = shift_site(z, j, +1, lat.sites_per_axis);
    return (v.at(comp, site_to_flat(lat, zp)) - v.at(comp, site_to_flat(lat, z))) /
           cplx(0.0, lat.mesh);
}

inline cplx block_bwd_at(const BlockField& v, std::int64_t comp, const SiteIndex& z, int j) {
    const TorusLattice& lat = v.lattice;
    SiteIndex zm = shift_site(z, j, -1, lat.sites_per_axis);
    return -(v.at(comp, site_to_flat(lat, zm)) - v.at(comp, site_to_flat(lat, z))) /
           cplx(0.0, lat.mesh);
}

inline BlockField apply_block_ks(const BlockField& v) {
    const TorusLattice& lat = v.lattice;
    BlockField out(lat);
    for (std::int64_t comp = 0; comp < v.num_components(); ++comp) {
        CornerIndex a(static_cast<std::uint32_t>(comp), lat.dim);
        for (std::int64_t idx = 0; idx < lat.num_sites(); ++idx) {
            SiteIndex z = flat_to_site(lat, idx);
            cplx acc = 0.0;
            for (int j = 1; j <= lat.dim; ++j) {
                double sgn = staircase_parity(a, j - 1);
                if (a.has(j))
                    acc += sgn * block_fwd_at(v, a.with_bit_cleared(j).code(), z, j);
                else
                    acc += sgn * block_bwd_at(v, a.with_bit_set(j).code(), z, j);
            }
            out.at(comp, idx) = acc;
        }
    }
    return out;
}

inline BlockField exterior_derivative(const BlockField& f) {
    const TorusLattice& lat = f.lattice;
    BlockField out(lat);
    const cplx iunit(0.0, 1.0);
    for (std::int64_t comp = 0; comp < f.num_components(); ++comp) {
        CornerIndex b(static_cast<std::uint32_t>(comp), lat.dim);
        for (int j = 1; j <= lat.dim; ++j) {
            auto w = wedge_with_generator(j, b);
            if (!w) continue;
            std::int64_t a = w->corner.code();
            for (std::int64_t idx = 0; idx < lat.num_sites(); ++idx) {
                SiteIndex z = flat_to_site(lat, idx);
                out.at(a, idx) += double(w->sign) * iunit * block_fwd_at(f, comp, z, j);
            }
        }
    }
    return out;
}

}  // namespace latdirac::reference
