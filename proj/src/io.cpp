#include "latdirac/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace latdirac {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json read_sidecar(const std::string& path) {
    std::ifstream in(path + ".json");
    if (!in) throw std::runtime_error("missing sidecar descriptor: " + path + ".json");
    json j;
    in >> j;
    return j;
}

void write_sidecar(const std::string& path, const json& j) {
    std::ofstream out(path + ".json");
    if (!out) throw std::runtime_error("cannot write sidecar: " + path + ".json");
    out << j.dump(2) << "\n";
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

void check_finite(const cplx& v, const std::string& path) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::runtime_error("non-finite value in field file: " + path);
}

}  // namespace

void write_field(const std::string& path, const Field& u) {
    const TorusLattice& lat = u.lattice;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write field file: " + path);
    for (int j = 1; j <= lat.dim; ++j) out << "n" << j << ",";
    out << "re,im\n";
    for (std::int64_t idx = 0; idx < lat.num_sites(); ++idx) {
        SiteIndex z = flat_to_site(lat, idx);
        for (int j = 0; j < lat.dim; ++j) out << z[j] << ",";
        out << format_double(u[idx].real()) << "," << format_double(u[idx].imag()) << "\n";
    }
    write_sidecar(path, json{{"schema", 1},
                             {"d", lat.dim},
                             {"N", lat.sites_per_axis},
                             {"h", lat.mesh}});
}

Field read_field(const std::string& path) {
    json meta = read_sidecar(path);
    TorusLattice lat(meta.at("d").get<int>(), meta.at("N").get<std::int64_t>(),
                     meta.at("h").get<double>());
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read field file: " + path);
    std::string line;
    std::getline(in, line);  // header
    Field u(lat);
    std::int64_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cols = split_csv_line(line);
        if (static_cast<int>(cols.size()) != lat.dim + 2)
            throw std::runtime_error("bad column count in field file: " + path);
        SiteIndex z(lat.dim);
        for (int j = 0; j < lat.dim; ++j) z[j] = std::stoll(cols[j]);
        cplx v(std::stod(cols[lat.dim]), std::stod(cols[lat.dim + 1]));
        check_finite(v, path);
        u[site_to_flat(lat, z)] = v;
        ++rows;
    }
    if (rows != lat.num_sites())
        throw std::runtime_error("row count does not match lattice size: " + path);
    return u;
}

void write_block_field(const std::string& path, const BlockField& v) {
    const TorusLattice& lat = v.lattice;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write field file: " + path);
    out << "comp,";
    for (int j = 1; j <= lat.dim; ++j) out << "n" << j << ",";
    out << "re,im\n";
    const double scale = v.scale();  // materialized on write
    for (std::int64_t comp = 0; comp < v.num_components(); ++comp)
        for (std::int64_t idx = 0; idx < lat.num_sites(); ++idx) {
            SiteIndex z = flat_to_site(lat, idx);
            out << comp << ",";
            for (int j = 0; j < lat.dim; ++j) out << z[j] << ",";
            out << format_double(scale * v.at(comp, idx).real()) << ","
                << format_double(scale * v.at(comp, idx).imag()) << "\n";
        }
    write_sidecar(path, json{{"schema", 1},
                             {"d", lat.dim},
                             {"M", lat.sites_per_axis},
                             {"two_h", lat.mesh}});
}

BlockField read_block_field(const std::string& path) {
    json meta = read_sidecar(path);
    TorusLattice lat(meta.at("d").get<int>(), meta.at("M").get<std::int64_t>(),
                     meta.at("two_h").get<double>());
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read field file: " + path);
    std::string line;
    std::getline(in, line);  // header
    BlockField v(lat);
    std::int64_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cols = split_csv_line(line);
        if (static_cast<int>(cols.size()) != lat.dim + 3)
            throw std::runtime_error("bad column count in block field file: " + path);
        std::int64_t comp = std::stoll(cols[0]);
        if (comp < 0 || comp >= v.num_components())
            throw std::runtime_error("component index out of range: " + path);
        SiteIndex z(lat.dim);
        for (int j = 0; j < lat.dim; ++j) z[j] = std::stoll(cols[j + 1]);
        cplx val(std::stod(cols[lat.dim + 1]), std::stod(cols[lat.dim + 2]));
        check_finite(val, path);
        v.at(comp, site_to_flat(lat, z)) = val;
        ++rows;
    }
    if (rows != v.size())
        throw std::runtime_error("row count does not match lattice size: " + path);
    return v;
}

bool is_block_field_file(const std::string& path) {
    json meta = read_sidecar(path);
    return meta.contains("M");
}

std::string report_to_json(const EquivalenceReport& rep) {
    json j{{"schema", 1},
           {"d", rep.d},
           {"M", rep.M},
           {"h", rep.h},
           {"mode", rep.mode == ArithmeticMode::Exact ? "exact" : "float"},
           {"exact_equal", rep.exact_equal},
           {"max_abs_residual", rep.max_abs_residual},
           {"worst_block", {rep.worst_block_a, rep.worst_block_b}}};
    return j.dump(2);
}

void write_spectrum(const std::string& csv_path, const SpectrumResult& res, double merge_tol) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot write spectrum file: " + csv_path);
    out << "lambda,multiplicity\n";
    std::size_t i = 0;
    while (i < res.eigenvalues.size()) {
        std::size_t j = i + 1;
        while (j < res.eigenvalues.size() &&
               res.eigenvalues[j] - res.eigenvalues[i] <= merge_tol)
            ++j;
        out << format_double(res.eigenvalues[i]) << "," << (j - i) << "\n";
        i = j;
    }
    write_sidecar(csv_path, nlohmann::json{{"schema", 1},
                                           {"d", res.d},
                                           {"M", res.M},
                                           {"h", res.h},
                                           {"max_deviation", res.max_deviation}});
}

}  // namespace latdirac
