#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "latdirac/bench.hpp"
#include "latdirac/dense.hpp"
#include "latdirac/io.hpp"
#include "latdirac/reference.hpp"
#include "latdirac/spectral.hpp"
#include "latdirac/staggered.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace {

using namespace latdirac;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void apply_thread_setting(int threads) {
    if (threads <= 0) {
        if (const char* env = std::getenv("LATTICE_DIRAC_THREADS")) threads = std::atoi(env);
    }
#if defined(_OPENMP)
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write output file: " + out_path);
        out << text << "\n";
    }
}

std::vector<std::int64_t> parse_perm(const std::string& s, int d) {
    std::vector<std::int64_t> perm;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) perm.push_back(std::stoll(item));
    const std::int64_t n = std::int64_t(1) << d;
    if (static_cast<std::int64_t>(perm.size()) != n)
        throw std::invalid_argument("--perm must list all 2^d components");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::int64_t p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("--perm is not a permutation of 0..2^d-1");
        seen[static_cast<std::size_t>(p)] = true;
    }
    return perm;
}

struct VerifyOptions {
    int d = 2;
    std::int64_t M = 3;
    double h = 1.0;
    std::string mode = "exact";
    std::string perm;
    std::string out;
    double tol = 1e-13;
    std::int64_t cap = kDefaultDenseCap;
    int threads = 0;
    int pairs = 100;
    std::uint64_t seed = 2024;
};

int cmd_verify(const VerifyOptions& opt) {
    apply_thread_setting(opt.threads);
    ArithmeticMode mode = (opt.mode == "exact") ? ArithmeticMode::Exact : ArithmeticMode::Float;
    TorusLattice coarse(opt.d, opt.M, 2.0 * opt.h);
    std::vector<std::int64_t> perm =
        opt.perm.empty() ? theorem_unitary(opt.d) : parse_perm(opt.perm, opt.d);

    EquivalenceReport eq = verify_equivalence(coarse, mode, perm, opt.cap);
    double square_residual = verify_square_is_laplacian(coarse, mode, opt.cap);

    // d o d = 0 at the dense level
    double dd_residual;
    if (mode == ArithmeticMode::Exact) {
        ExactDenseMatrix dm = assemble_dense<GaussInt>(OperatorTag::ExteriorDerivative, coarse, opt.cap);
        dd_residual = max_abs_entry(multiply(dm, dm)) / (coarse.mesh * coarse.mesh);
    } else {
        DenseMatrix dm = assemble_dense<cplx>(OperatorTag::ExteriorDerivative, coarse, opt.cap);
        dd_residual = max_abs_entry(multiply(dm, dm));
    }

    // <df, g> = <f, d*g> on random pairs, relative to the field norms
    double adj_max = 0.0;
    for (int p = 0; p < opt.pairs; ++p) {
        BlockField f = random_block_field(coarse, opt.seed + 2 * p);
        BlockField g = random_block_field(coarse, opt.seed + 2 * p + 1);
        cplx lhs = inner(exterior_derivative(f), g);
        cplx rhs = inner(f, codifferential(g));
        adj_max = std::max(adj_max, std::abs(lhs - rhs) / (norm(f) * norm(g)));
    }

    // chiral anticommutation: P H P = -H with P = diag((-1)^{|a|})
    auto chiral_residual = [&](OperatorTag tag) {
        DenseMatrix hm = assemble_dense<cplx>(tag, coarse, opt.cap);
        const std::int64_t sites = coarse.num_sites();
        double worst = 0.0;
        for (std::int64_t r = 0; r < hm.dim; ++r)
            for (std::int64_t c = 0; c < hm.dim; ++c) {
                int pr = (CornerIndex(static_cast<std::uint32_t>(r / sites), opt.d).degree() % 2) ? -1 : 1;
                int pc = (CornerIndex(static_cast<std::uint32_t>(c / sites), opt.d).degree() % 2) ? -1 : 1;
                worst = std::max(worst, std::abs(double(pr * pc) * hm.at(r, c) + hm.at(r, c)));
            }
        return worst;
    };
    double chiral_ks = chiral_residual(OperatorTag::BlockKS);
    double chiral_hd = chiral_residual(OperatorTag::HodgeDirac);

    bool pass = eq.passed(opt.tol) && square_residual <= (mode == ArithmeticMode::Exact ? 0.0 : 1e-12) &&
                dd_residual <= (mode == ArithmeticMode::Exact ? 0.0 : opt.tol) &&
                adj_max <= opt.tol && chiral_ks <= opt.tol && chiral_hd <= opt.tol;

    json j{{"schema", 1},
           {"command", "verify"},
           {"equivalence", json::parse(report_to_json(eq))},
           {"square_residual", square_residual},
           {"dd_residual", dd_residual},
           {"adjointness_max_rel", adj_max},
           {"chiral_residual_block_ks", chiral_ks},
           {"chiral_residual_hodge_dirac", chiral_hd},
           {"pass", pass}};
    emit(j.dump(2), opt.out);
    return pass ? kExitPass : kExitFail;
}

struct SpectrumOptions {
    int d = 1;
    std::int64_t M = 4;
    double h = 1.0;
    std::string method = "dense";
    std::string op = "block_ks";
    std::string out;
    double tol = 1e-10;
    std::int64_t cap = kDefaultDenseCap;
    int threads = 0;
};

int cmd_spectrum(const SpectrumOptions& opt) {
    apply_thread_setting(opt.threads);
    TorusLattice coarse(opt.d, opt.M, 2.0 * opt.h);
    auto tag = parse_operator_tag(opt.op);
    if (!tag) throw std::invalid_argument("unknown operator tag: " + opt.op);
    SpectrumMethod method =
        (opt.method == "momentum") ? SpectrumMethod::Momentum : SpectrumMethod::Dense;
    SpectrumResult res = compute_spectrum(*tag, coarse, method, opt.cap);
    if (opt.out.empty()) {
        std::ostringstream ss;
        ss << "lambda,multiplicity\n";
        for (double v : res.eigenvalues) ss << format_double(v) << ",1\n";
        std::cout << ss.str();
    } else {
        write_spectrum(opt.out, res);
    }
    bool pass = res.analytic_eigenvalues.empty() || res.max_deviation <= opt.tol;
    return pass ? kExitPass : kExitFail;
}

struct ApplyOptions {
    std::string op = "block_ks";
    std::string in;
    std::string out;
    int threads = 0;
};

int cmd_apply(const ApplyOptions& opt) {
    apply_thread_setting(opt.threads);
    if (opt.op == "scalar_ks") {
        Field u = read_field(opt.in);
        write_field(opt.out, apply_scalar_ks(u));
        return kExitPass;
    }
    auto tag = parse_operator_tag(opt.op);
    if (!tag) throw std::invalid_argument("unknown operator tag: " + opt.op);
    if (!is_block_field_file(opt.in))
        throw std::invalid_argument("operator " + opt.op + " expects a block field file");
    BlockField v = read_block_field(opt.in);
    write_block_field(opt.out, apply_operator(*tag, v));
    return kExitPass;
}

struct BenchOptions {
    int d = 3;
    std::int64_t M = 64;
    double h = 1.0;
    int reps = 10;
    int threads = 0;
    std::string out;
};

int cmd_bench(const BenchOptions& opt) {
    apply_thread_setting(opt.threads);
    BenchReport rep = run_bench(opt.d, opt.M, opt.h, opt.reps);
    emit(bench_report_to_json(rep), opt.out);
    return rep.oracle_checked ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Staggered-fermion / Hodge-Dirac lattice operator toolkit"};
    app.require_subcommand(1);

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "certify operator identities on a coarse torus");
    verify->set_help_flag("--help", "print help");  // leave -h free for the mesh size
    verify->add_option("--d", vo.d, "space dimension")->check(CLI::PositiveNumber);
    verify->add_option("--M", vo.M, "coarse sites per axis")->check(CLI::Range(std::int64_t(2), std::int64_t(1) << 30));
    verify->add_option("--h", vo.h, "fine mesh size")->check(CLI::PositiveNumber);
    verify->add_option("--mode", vo.mode)->check(CLI::IsMember({"exact", "float"}));
    verify->add_option("--perm", vo.perm, "component permutation override, comma separated");
    verify->add_option("--tol", vo.tol);
    verify->add_option("--cap", vo.cap, "dense dimension cap");
    verify->add_option("--out", vo.out);
    verify->add_option("--threads", vo.threads);

    SpectrumOptions so;
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and dispersion check");
    spectrum->set_help_flag("--help", "print help");
    spectrum->add_option("--d", so.d)->check(CLI::PositiveNumber);
    spectrum->add_option("--M", so.M)->check(CLI::Range(std::int64_t(2), std::int64_t(1) << 30));
    spectrum->add_option("--h", so.h)->check(CLI::PositiveNumber);
    spectrum->add_option("--method", so.method)->check(CLI::IsMember({"dense", "momentum"}));
    spectrum->add_option("--op", so.op);
    spectrum->add_option("--tol", so.tol);
    spectrum->add_option("--cap", so.cap);
    spectrum->add_option("--out", so.out);
    spectrum->add_option("--threads", so.threads);

    ApplyOptions ao;
    auto* apply = app.add_subcommand("apply", "apply an operator to a stored field");
    apply->add_option("--op", ao.op);
    apply->add_option("--in", ao.in)->required();
    apply->add_option("--out", ao.out)->required();
    apply->add_option("--threads", ao.threads);

    BenchOptions bo;
    auto* bench = app.add_subcommand("bench", "matrix-free throughput, serial vs parallel");
    bench->set_help_flag("--help", "print help");
    bench->add_option("--d", bo.d)->check(CLI::PositiveNumber);
    bench->add_option("--M", bo.M)->check(CLI::Range(std::int64_t(2), std::int64_t(1) << 30));
    bench->add_option("--h", bo.h)->check(CLI::PositiveNumber);
    bench->add_option("--reps", bo.reps)->check(CLI::PositiveNumber);
    bench->add_option("--threads", bo.threads);
    bench->add_option("--out", bo.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(vo);
        if (spectrum->parsed()) return cmd_spectrum(so);
        if (apply->parsed()) return cmd_apply(ao);
        if (bench->parsed()) return cmd_bench(bo);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
