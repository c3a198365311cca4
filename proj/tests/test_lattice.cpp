#include <doctest.h>

#include <vector>

#include "latdirac/lattice.hpp"

using namespace latdirac;

TEST_CASE("staircase_sum basics") {
    std::vector<std::int64_t> n{1, 1, 0};
    CHECK(staircase_sum(n, 0) == 0);
    CHECK(staircase_sum(n, 2) == 2);
    std::vector<std::int64_t> m{1, 0};
    CHECK(staircase_sum(m, 1) == 1);
    CHECK(staircase_parity(m, 1) == -1);
    CHECK_THROWS_AS(staircase_sum(m, 3), std::out_of_range);
    CHECK_THROWS_AS(staircase_sum(m, -1), std::out_of_range);
}

TEST_CASE("staircase_parity on corners") {
    CornerIndex zero(0, 3);
    for (int j = 0; j <= 3; ++j) CHECK(staircase_parity(zero, j) == +1);
    CornerIndex a(0b11, 2);
    CHECK(staircase_parity(a, 1) == -1);
}

TEST_CASE("enumerate_corners ordering and grading") {
    auto c1 = enumerate_corners(1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0].code() == 0);
    CHECK(c1[1].code() == 1);

    auto c2 = enumerate_corners(2);
    REQUIRE(c2.size() == 4);
    // binary counting with a_1 least significant: (0,0),(1,0),(0,1),(1,1)
    CHECK(c2[1].bit(1) == 1);
    CHECK(c2[1].bit(2) == 0);
    CHECK(c2[2].bit(1) == 0);
    CHECK(c2[2].bit(2) == 1);

    int count_deg2 = 0;
    for (const auto& a : enumerate_corners(3))
        if (a.degree() == 2) ++count_deg2;
    CHECK(count_deg2 == 3);
}

TEST_CASE("code of enumerate is the identity") {
    for (int d = 1; d <= 6; ++d) {
        auto corners = enumerate_corners(d);
        for (std::size_t i = 0; i < corners.size(); ++i)
            CHECK(corners[i].code() == i);
    }
}

TEST_CASE("shift_site wraps") {
    SiteIndex s{0, 0};
    auto t = shift_site(s, 1, +1, 4);
    CHECK(t == SiteIndex{1, 0});
    SiteIndex w{3, 0};
    CHECK(shift_site(w, 1, +1, 4) == SiteIndex{0, 0});
    CHECK_THROWS_AS(shift_site(s, 3, 1, 4), std::out_of_range);
}

TEST_CASE("shift then unshift is the identity") {
    TorusLattice lat(3, 5, 1.0);
    for (std::int64_t idx = 0; idx < lat.num_sites(); ++idx) {
        SiteIndex s = flat_to_site(lat, idx);
        for (int j = 1; j <= 3; ++j) {
            auto back = shift_site(shift_site(s, j, +1, 5), j, -1, 5);
            CHECK(back == s);
        }
        CHECK(site_to_flat(lat, s) == idx);
    }
}

// s_{j-1}(a) = s_{j-1}(a +- e_j) mod 2: the staggered sign is insensitive to
// the transition axis. Exhaustive for d <= 6.
TEST_CASE("staircase parity matches across valid transitions") {
    for (int d = 1; d <= 6; ++d) {
        for (const auto& a : enumerate_corners(d)) {
            for (int j = 1; j <= d; ++j) {
                CornerIndex b = a.has(j) ? a.with_bit_cleared(j) : a.with_bit_set(j);
                CHECK(staircase_parity(a, j - 1) == staircase_parity(b, j - 1));
            }
        }
    }
}

// For z = w + h a with w on the coarse lattice, the staggered phase of z/h
// depends only on the corner a.
TEST_CASE("fine-torus staggered phase depends only on the corner") {
    for (int d = 1; d <= 3; ++d) {
        TorusLattice fine(d, 4, 1.0);
        TorusLattice coarse = fine.coarse();
        for (std::int64_t ws = 0; ws < coarse.num_sites(); ++ws) {
            SiteIndex w = flat_to_site(coarse, ws);
            for (const auto& a : enumerate_corners(d)) {
                SiteIndex z(d);
                for (int j = 0; j < d; ++j) z[j] = 2 * w[j] + a.bit(j + 1);
                for (int j = 0; j <= d; ++j)
                    CHECK(staircase_parity(z, j) == staircase_parity(a, j));
            }
        }
    }
}

TEST_CASE("lattice constructor validation") {
    CHECK_THROWS_AS(TorusLattice(0, 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(TorusLattice(2, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(TorusLattice(2, 4, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(TorusLattice(2, 5, 1.0).coarse(), std::invalid_argument);
    CHECK_THROWS_AS(TorusLattice(2, 2, 1.0).coarse(), std::invalid_argument);
    TorusLattice fine(2, 6, 0.5);
    TorusLattice c = fine.coarse();
    CHECK(c.sites_per_axis == 3);
    CHECK(c.mesh == doctest::Approx(1.0));
}
