#include <catch2/catch_amalgamated.hpp>

#include "rank2/measures.hpp"
#include "rank2/fusion.hpp"

using namespace rank2;

TEST_CASE("Dirac grids") {
    auto g = dirac_grid(6);
    CHECK(g.support_size() == 36);
    CHECK_THAT(g.mass(), Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK_THROWS_AS(dirac_grid(0), std::invalid_argument);
}

TEST_CASE("orbit measure supports") {
    CHECK(d8_orbit_measure(Rat(0), Rat(0)).support_size() == 2);
    CHECK(d8_orbit_measure(Rat(1, 20), Rat(9, 20)).support_size() == 8);
    auto d = d8_orbit_measure(Rat(1, 20), Rat(2, 20));
    CHECK(d.support_size() == 16);
    CHECK_THAT(d.mass(), Catch::Matchers::WithinAbs(1.0, 1e-12));
    bool partner = false;
    for (const auto& a : d.atoms)
        if (a.p == TorusPoint(Rat(8, 20), Rat(9, 20))) partner = true;
    CHECK(partner);
}

TEST_CASE("|J| and the characters are constant on an orbit-measure support") {
    auto d = d8_orbit_measure(Rat(1, 20), Rat(2, 20));
    double j0 = -1, y0 = 0, z0 = 0;
    for (const auto& a : d.atoms) {
        double j = std::abs(jacobian_xy(a.p));
        double y = char_fund(FundRep::y, a.p);
        double z = char_fund(FundRep::z, a.p);
        if (j0 < 0) {
            j0 = j;
            y0 = y;
            z0 = z;
        }
        CHECK_THAT(j, Catch::Matchers::WithinAbs(j0, 1e-9));
        CHECK_THAT(y, Catch::Matchers::WithinAbs(y0, 1e-12));
        CHECK_THAT(z, Catch::Matchers::WithinAbs(z0, 1e-12));
    }
}

TEST_CASE("level-k measures reproduce graph moments") {
    for (int k = 1; k <= 5; ++k) {
        auto mu = measure_for(Model::A_Sp2, k);
        auto gx = a_graph(Group::Sp2, k, FundRep::x);
        auto gy = a_graph(Group::Sp2, k, FundRep::y);
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; m + n <= 4; ++n)
                CHECK_THAT(measure_cross_moment(mu, GenPair::xy, m, n),
                           Catch::Matchers::WithinAbs(
                               static_cast<double>(graph_cross_moment(gx, gy, m, n)), 1e-6));

        auto ms = measure_for(Model::A_SO5, k);
        auto hy = a_graph(Group::SO5, k, FundRep::y);
        auto hz = a_graph(Group::SO5, k, FundRep::z);
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; m + n <= 4; ++n)
                CHECK_THAT(measure_cross_moment(ms, GenPair::yz, m, n),
                           Catch::Matchers::WithinAbs(
                               static_cast<double>(graph_cross_moment(hy, hz, m, n)), 1e-6));
    }
}

TEST_CASE("SO5 correction-line support is already inside the grid term") {
    // The printed wall-correction line adds no new support: its orbit points
    // are 2kappa-grid points, and the grid term alone carries mass 1, which
    // is why the correction weight must be zero.
    int k = 4, kap = k + 3;
    auto mu = measure_for(Model::A_SO5, k);
    CHECK_THAT(mu.atomic.mass(), Catch::Matchers::WithinAbs(1.0, 1e-10));
    for (int j = 1; j <= k - 1; ++j) {
        auto d = d8_orbit_measure(Rat(j, 2 * kap), Rat(kap - j, 2 * kap));
        for (const auto& a : d.atoms) {
            bool found = false;
            for (const auto& b : mu.atomic.atoms)
                if (b.p == a.p) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("D measures match the orbifold eigendata") {
    for (int k = 2; k <= 6; ++k) {
        auto mu = measure_for(Model::D, k);
        auto ed = eigendata(Model::D, k);
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; m + n <= 4; ++n)
                CHECK_THAT(measure_cross_moment(mu, GenPair::xy, m, n),
                           Catch::Matchers::WithinAbs(exponent_sum_moment(ed, GenPair::xy, m, n),
                                                      1e-8));
    }
}

TEST_CASE("exceptional measures match their exponent tables in both pairs") {
    for (Model mo : {Model::E3, Model::E3M, Model::E7, Model::E7M, Model::E8, Model::E12}) {
        auto mu = measure_for(mo);
        auto ed = eigendata(mo);
        CHECK_THAT(mu.atomic.mass(), Catch::Matchers::WithinAbs(ed.mass(), 1e-10));
        for (GenPair pr : {GenPair::xy, GenPair::yz})
            for (int m = 0; m <= 4; ++m)
                for (int n = 0; m + n <= 4; ++n)
                    CHECK_THAT(measure_cross_moment(mu, pr, m, n),
                               Catch::Matchers::WithinAbs(exponent_sum_moment(ed, pr, m, n),
                                                          1e-8));
    }
}

TEST_CASE("A_infinity density moments are the stable folded walk counts") {
    auto mu = measure_a_infinity(200);
    auto gx = a_graph(Group::Sp2, 14, FundRep::x);
    auto gy = a_graph(Group::Sp2, 14, FundRep::y);
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n)
            CHECK_THAT(measure_cross_moment(mu, GenPair::xy, m, n),
                       Catch::Matchers::WithinAbs(
                           static_cast<double>(graph_cross_moment(gx, gy, m, n)), 1e-6));
}
