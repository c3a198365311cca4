#include "latdirac/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "latdirac/dense.hpp"
#include "latdirac/io.hpp"
#include "latdirac/reference.hpp"
#include "latdirac/staggered.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace latdirac {

namespace {

cplx checksum_of(const BlockField& v) {
    cplx s = 0.0;
    for (const auto& x : v.values) s += x;
    return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

BenchReport run_bench(int d, std::int64_t M, double h, int reps, std::uint64_t seed) {
    if (d < 1 || M < 2 || reps < 1) throw std::invalid_argument("bench: invalid parameters");
    BenchReport rep;
    rep.d = d;
    rep.M = M;
    rep.reps = reps;
#if defined(_OPENMP)
    rep.threads = omp_get_max_threads();
#endif

    // dense-oracle checksum at a small size before timing
    std::int64_t m_small = M;
    while ((std::int64_t(1) << d) * std::pow(double(m_small), d) > double(kDefaultDenseCap) &&
           m_small > 2)
        m_small /= 2;
    {
        TorusLattice small(d, m_small, 2.0 * h);
        BlockField in = random_block_field(small, seed);
        BlockField out = apply_block_ks(in);
        DenseMatrix mat = assemble_dense<cplx>(OperatorTag::BlockKS, small);
        double worst = 0.0;
        for (std::int64_t r = 0; r < mat.dim; ++r) {
            cplx acc = 0.0;
            for (std::int64_t c = 0; c < mat.dim; ++c)
                acc += mat.at(r, c) * in.values[static_cast<std::size_t>(c)];
            worst = std::max(worst, std::abs(acc - out.values[static_cast<std::size_t>(r)]));
        }
        rep.oracle_residual = worst;
        rep.oracle_dim = mat.dim;
        rep.oracle_checked = worst <= 1e-12;
    }

    TorusLattice coarse(d, M, 2.0 * h);
    BlockField v = random_block_field(coarse, seed);

    auto t0 = std::chrono::steady_clock::now();
    BlockField out = v;
    for (int r = 0; r < reps; ++r) out = apply_block_ks(out);
    rep.parallel_seconds = seconds_since(t0);
    rep.checksum = checksum_of(out);

    rep.serial_reps = std::max(1, std::min(reps, 2));
    t0 = std::chrono::steady_clock::now();
    BlockField sref = v;
    for (int r = 0; r < rep.serial_reps; ++r) sref = reference::apply_block_ks(sref);
    rep.serial_seconds = seconds_since(t0);

    const double sites = double(coarse.num_sites()) * double(std::int64_t(1) << d);
    rep.parallel_sites_per_sec = sites * reps / std::max(rep.parallel_seconds, 1e-12);
    rep.serial_sites_per_sec = sites * rep.serial_reps / std::max(rep.serial_seconds, 1e-12);
    // traffic model: per component-site and axis, 3 complex reads + 1 write
    rep.bytes_moved_estimate = double(reps) * sites * d * 4.0 * sizeof(cplx);
    rep.model_work_units = sites * d;
    return rep;
}

std::string bench_report_to_json(const BenchReport& rep) {
    nlohmann::json j{{"schema", 1},
                     {"d", rep.d},
                     {"M", rep.M},
                     {"reps", rep.reps},
                     {"threads", rep.threads},
                     {"parallel_seconds", rep.parallel_seconds},
                     {"serial_seconds", rep.serial_seconds},
                     {"serial_reps", rep.serial_reps},
                     {"parallel_sites_per_sec", rep.parallel_sites_per_sec},
                     {"serial_sites_per_sec", rep.serial_sites_per_sec},
                     {"bytes_moved_estimate", rep.bytes_moved_estimate},
                     {"model_work_units", rep.model_work_units},
                     {"checksum", {rep.checksum.real(), rep.checksum.imag()}},
                     {"oracle_checked", rep.oracle_checked},
                     {"oracle_residual", rep.oracle_residual},
                     {"oracle_dim", rep.oracle_dim}};
    return j.dump(2);
}

}  // namespace latdirac
