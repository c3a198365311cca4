#pragma once

#include <cstdint>
#include <string>

#include "latdirac/field.hpp"

namespace latdirac {

struct BenchReport {
    int d = 0;
    std::int64_t M = 0;
    int reps = 0;
    int threads = 1;
    double parallel_seconds = 0.0;
    double serial_seconds = 0.0;   // serial reference path, serial_reps applications
    int serial_reps = 0;
    double parallel_sites_per_sec = 0.0;
    double serial_sites_per_sec = 0.0;
    double bytes_moved_estimate = 0.0;  // per parallel run, stencil traffic model
    double model_work_units = 0.0;      // 2^d * M^d * d per application
    cplx checksum;                      // fixed-order sum of the final output
    bool oracle_checked = false;
    double oracle_residual = 0.0;
    std::int64_t oracle_dim = 0;
};

// Repeated matrix-free block staggered application on a (d, M) torus, with a
// dense-oracle checksum at a small size first and a serial-reference timing
// for comparison.
BenchReport run_bench(int d, std::int64_t M, double h, int reps, std::uint64_t seed = 7);

std::string bench_report_to_json(const BenchReport& rep);

}  // namespace latdirac
