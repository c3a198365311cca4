#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latdirac {

// Finite periodic truncation of the square lattice: `sites_per_axis` sites
// along each of `dim` axes, spacing `mesh`. Sites are addressed by a flat
// index with axis 1 fastest (row-major over coordinates).
struct TorusLattice {
    int dim = 1;
    std::int64_t sites_per_axis = 2;
    double mesh = 1.0;

    TorusLattice() = default;
    TorusLattice(int d, std::int64_t n, double h) : dim(d), sites_per_axis(n), mesh(h) {
        if (d < 1) throw std::invalid_argument("lattice dimension must be >= 1");
        if (n < 2) throw std::invalid_argument("need at least 2 sites per axis");
        if (h <= 0.0) throw std::invalid_argument("mesh must be positive");
    }

    std::int64_t num_sites() const {
        std::int64_t n = 1;
        for (int j = 0; j < dim; ++j) n *= sites_per_axis;
        return n;
    }

    // stride of axis j (1-based): product of lengths of faster axes
    std::int64_t stride(int axis) const {
        std::int64_t s = 1;
        for (int j = 1; j < axis; ++j) s *= sites_per_axis;
        return s;
    }

    // The interleaved sublattice structure requires an even site count.
    bool splits_in_two() const { return sites_per_axis % 2 == 0 && sites_per_axis / 2 >= 2; }

    // Coarse torus of the even sublattice: half the sites, double the mesh.
    TorusLattice coarse() const {
        if (!splits_in_two())
            throw std::invalid_argument("fine lattice must have even N with N/2 >= 2");
        return TorusLattice(dim, sites_per_axis / 2, 2.0 * mesh);
    }
};

// Coordinates of one site, each entry reduced modulo the axis length.
using SiteIndex = std::vector<std::int64_t>;

inline std::int64_t site_to_flat(const TorusLattice& lat, const SiteIndex& s) {
    std::int64_t idx = 0, stride = 1;
    for (int j = 0; j < lat.dim; ++j) {
        idx += s[j] * stride;
        stride *= lat.sites_per_axis;
    }
    return idx;
}

inline SiteIndex flat_to_site(const TorusLattice& lat, std::int64_t idx) {
    SiteIndex s(lat.dim);
    for (int j = 0; j < lat.dim; ++j) {
        s[j] = idx % lat.sites_per_axis;
        idx /= lat.sites_per_axis;
    }
    return s;
}

// Periodic shift along `axis` (1-based) by `steps` (typically +-1).
inline SiteIndex shift_site(const SiteIndex& s, int axis, std::int64_t steps, std::int64_t axis_len) {
    if (axis < 1 || axis > static_cast<int>(s.size()))
        throw std::out_of_range("shift_site: axis out of range");
    SiteIndex out = s;
    std::int64_t c = (out[axis - 1] + steps) % axis_len;
    if (c < 0) c += axis_len;
    out[axis - 1] = c;
    return out;
}

// Corner index a in {0,1}^d: labels a sublattice offset and, via |a|, a
// cochain degree. code(a) packs a_1 into the least significant bit.
struct CornerIndex {
    std::uint32_t bits = 0;
    int dim = 0;

    CornerIndex() = default;
    CornerIndex(std::uint32_t code, int d) : bits(code), dim(d) {
        if (d < 1 || d > 30) throw std::invalid_argument("corner dimension out of range");
        if (code >> d) throw std::invalid_argument("corner code out of range");
    }

    int bit(int j) const { return (bits >> (j - 1)) & 1u; }  // a_j, 1-based
    std::uint32_t code() const { return bits; }
    int degree() const { return __builtin_popcount(bits); }

    bool has(int j) const { return bit(j) == 1; }
    CornerIndex with_bit_set(int j) const { return CornerIndex(bits | (1u << (j - 1)), dim); }
    CornerIndex with_bit_cleared(int j) const { return CornerIndex(bits & ~(1u << (j - 1)), dim); }

    bool operator==(const CornerIndex&) const = default;
};

// s_j(n) = n_1 + ... + n_j, with s_0 = 0.
template <class Vec>
inline std::int64_t staircase_sum(const Vec& n, int j) {
    if (j < 0 || j > static_cast<int>(n.size()))
        throw std::out_of_range("staircase_sum: j out of range");
    std::int64_t s = 0;
    for (int k = 0; k < j; ++k) s += n[k];
    return s;
}

inline std::int64_t staircase_sum(const CornerIndex& a, int j) {
    if (j < 0 || j > a.dim) throw std::out_of_range("staircase_sum: j out of range");
    std::uint32_t mask = (j == 0) ? 0u : ((1u << j) - 1u);
    return __builtin_popcount(a.bits & mask);
}

// (-1)^{s_j}
inline int staircase_parity(const CornerIndex& a, int j) {
    return (staircase_sum(a, j) % 2 == 0) ? +1 : -1;
}

template <class Vec>
inline int staircase_parity(const Vec& n, int j) {
    std::int64_t s = staircase_sum(n, j);
    return ((s % 2 + 2) % 2 == 0) ? +1 : -1;
}

// All 2^d corner indices in ascending code order; a degree filter gives Lambda_k.
inline std::vector<CornerIndex> enumerate_corners(int d) {
    if (d < 1) throw std::invalid_argument("enumerate_corners: d must be >= 1");
    std::vector<CornerIndex> out;
    out.reserve(std::size_t(1) << d);
    for (std::uint32_t c = 0; c < (1u << d); ++c) out.emplace_back(c, d);
    return out;
}

}  // namespace latdirac
