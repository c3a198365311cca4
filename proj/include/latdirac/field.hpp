#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "latdirac/lattice.hpp"

namespace latdirac {

using cplx = std::complex<double>;

// Gaussian integer: exact-mode scalar. Operator entries are Gaussian
// integers once the global 1/(2h) scale is factored out.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    GaussInt() = default;
    GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussInt operator-() const { return {-re, -im}; }
    GaussInt& operator+=(GaussInt b) { re += b.re; im += b.im; return *this; }
    GaussInt& operator-=(GaussInt b) { re -= b.re; im -= b.im; return *this; }
    bool operator==(const GaussInt&) const = default;

    GaussInt conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
};

inline GaussInt mul_i(GaussInt a) { return {-a.im, a.re}; }
inline cplx mul_i(cplx a) { return {-a.imag(), a.real()}; }

inline cplx to_cplx(GaussInt a) { return {double(a.re), double(a.im)}; }
inline cplx to_cplx(cplx a) { return a; }

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<cplx> {
    static cplx zero() { return {0.0, 0.0}; }
    static cplx one() { return {1.0, 0.0}; }
    // numeric mode carries the physical 1/(2h) prefactor in the entries
    static cplx inv_two_h(double two_h) { return {1.0 / two_h, 0.0}; }
    static cplx conj(cplx a) { return std::conj(a); }
};

template <>
struct scalar_traits<GaussInt> {
    static GaussInt zero() { return {0, 0}; }
    static GaussInt one() { return {1, 0}; }
    // exact mode factors 1/(2h) out globally: entries are 2h * operator
    static GaussInt inv_two_h(double) { return {1, 0}; }
    static GaussInt conj(GaussInt a) { return a.conj(); }
};

// Complex-valued function on torus sites, canonical flat order.
template <class T>
struct FieldT {
    TorusLattice lattice;
    std::vector<T> values;

    FieldT() = default;
    explicit FieldT(const TorusLattice& lat)
        : lattice(lat), values(static_cast<std::size_t>(lat.num_sites()), scalar_traits<T>::zero()) {}

    T& operator[](std::int64_t i) { return values[static_cast<std::size_t>(i)]; }
    const T& operator[](std::int64_t i) const { return values[static_cast<std::size_t>(i)]; }
    std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
};

using Field = FieldT<cplx>;
using ExactField = FieldT<GaussInt>;

// 2^d-component field on the coarse torus; doubles as the cochain space,
// with component a holding the coefficient of dx^a.
//
// `log2_scale_half` is a global factor 2^{log2_scale_half/2} multiplying the
// stored values. The split normalization 2^{-d/2} is irrational for odd d;
// materializing it into the entries is non-invertible in binary floating
// point (the rounded scaling map has collisions), so the factor is kept
// symbolic and every linear operator simply carries it through.
template <class T>
struct BlockFieldT {
    TorusLattice lattice;  // coarse torus (spacing 2h)
    std::vector<T> values; // component-major: [comp * num_sites + site]
    int log2_scale_half = 0;

    BlockFieldT() = default;
    explicit BlockFieldT(const TorusLattice& lat)
        : lattice(lat),
          values(static_cast<std::size_t>(lat.num_sites()) << lat.dim, scalar_traits<T>::zero()) {}

    double scale() const { return std::pow(2.0, 0.5 * log2_scale_half); }

    std::int64_t num_components() const { return std::int64_t(1) << lattice.dim; }
    std::int64_t sites() const { return lattice.num_sites(); }

    T* component(std::int64_t comp) { return values.data() + comp * sites(); }
    const T* component(std::int64_t comp) const { return values.data() + comp * sites(); }

    T& at(std::int64_t comp, std::int64_t site) { return values[comp * sites() + site]; }
    const T& at(std::int64_t comp, std::int64_t site) const { return values[comp * sites() + site]; }

    std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
};

using BlockField = BlockFieldT<cplx>;
using ExactBlockField = BlockFieldT<GaussInt>;

// --- inner products and norms (h^d site weight) ---

inline double site_weight(const TorusLattice& lat) { return std::pow(lat.mesh, lat.dim); }

inline cplx inner(const Field& u, const Field& w) {
    if (u.size() != w.size()) throw std::invalid_argument("inner: size mismatch");
    cplx s = 0.0;
    for (std::int64_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * w[i];
    return site_weight(u.lattice) * s;
}

inline double norm(const Field& u) { return std::sqrt(std::real(inner(u, u))); }

inline cplx inner(const BlockField& u, const BlockField& w) {
    if (u.size() != w.size()) throw std::invalid_argument("inner: size mismatch");
    cplx s = 0.0;
    for (std::int64_t i = 0; i < u.size(); ++i)
        s += std::conj(u.values[static_cast<std::size_t>(i)]) * w.values[static_cast<std::size_t>(i)];
    double scale = std::pow(2.0, 0.5 * (u.log2_scale_half + w.log2_scale_half));
    return site_weight(u.lattice) * scale * s;
}

inline double norm(const BlockField& u) { return std::sqrt(std::real(inner(u, u))); }

// --- random fields (test and benchmark inputs; deterministic per seed) ---

inline Field random_field(const TorusLattice& lat, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Field u(lat);
    for (auto& v : u.values) v = {dist(rng), dist(rng)};
    return u;
}

inline BlockField random_block_field(const TorusLattice& lat, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    BlockField u(lat);
    for (auto& v : u.values) v = {dist(rng), dist(rng)};
    return u;
}

}  // namespace latdirac
