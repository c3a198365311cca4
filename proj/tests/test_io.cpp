#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "latdirac/io.hpp"

using namespace latdirac;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("latdirac_test_" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("scalar field round trip") {
    TempDir tmp;
    TorusLattice lat(2, 4, 0.5);
    Field u = random_field(lat, 123);
    write_field(tmp.file("u.csv"), u);
    Field v = read_field(tmp.file("u.csv"));
    CHECK(v.lattice.dim == 2);
    CHECK(v.lattice.sites_per_axis == 4);
    CHECK(v.lattice.mesh == 0.5);
    for (std::int64_t i = 0; i < u.size(); ++i) CHECK(u[i] == v[i]);
}

TEST_CASE("block field round trip") {
    TempDir tmp;
    TorusLattice coarse(3, 3, 1.0);
    BlockField u = random_block_field(coarse, 321);
    write_block_field(tmp.file("v.csv"), u);
    BlockField v = read_block_field(tmp.file("v.csv"));
    CHECK(v.num_components() == 8);
    for (std::size_t i = 0; i < u.values.size(); ++i) CHECK(u.values[i] == v.values[i]);
    CHECK(is_block_field_file(tmp.file("v.csv")));
}

TEST_CASE("missing sidecar and non-finite values are rejected") {
    TempDir tmp;
    {
        std::ofstream f(tmp.file("bare.csv"));
        f << "n1,re,im\n0,1,0\n";
    }
    CHECK_THROWS(read_field(tmp.file("bare.csv")));

    TorusLattice lat(1, 2, 1.0);
    {
        std::ofstream f(tmp.file("nan.csv"));
        f << "n1,re,im\n0,nan,0\n1,0,0\n";
        std::ofstream s(tmp.file("nan.csv") + ".json");
        s << R"({"schema":1,"d":1,"N":2,"h":1.0})";
    }
    CHECK_THROWS(read_field(tmp.file("nan.csv")));
}

TEST_CASE("equivalence report serializes") {
    EquivalenceReport rep;
    rep.d = 2;
    rep.M = 3;
    rep.h = 0.5;
    rep.mode = ArithmeticMode::Exact;
    rep.exact_equal = true;
    std::string j = report_to_json(rep);
    CHECK(j.find("\"exact_equal\": true") != std::string::npos);
    CHECK(j.find("\"mode\": \"exact\"") != std::string::npos);
    CHECK(j.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("spectrum CSV groups multiplicities") {
    TempDir tmp;
    SpectrumResult res;
    res.d = 1;
    res.M = 2;
    res.h = 1.0;
    res.eigenvalues = {-1.0, -1.0, 0.0, 1.0, 1.0, 1.0};
    write_spectrum(tmp.file("spec.csv"), res);
    std::ifstream in(tmp.file("spec.csv"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "lambda,multiplicity");
    std::getline(in, line);
    CHECK(line == "-1,2");
    std::getline(in, line);
    CHECK(line == "0,1");
    std::getline(in, line);
    CHECK(line == "1,3");
}
