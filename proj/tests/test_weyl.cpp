#include <catch2/catch_amalgamated.hpp>

#include "rank2/weyl.hpp"

using namespace rank2;

TEST_CASE("D8 closure and orbits") {
    CHECK(d8_elements().size() == 8);
    CHECK(d8_orbit(TorusPoint(Rat(0), Rat(0))).size() == 1);
    CHECK(d8_orbit(TorusPoint(Rat(1, 4), Rat(1, 4))).size() == 4);   // on a reflection line
    CHECK(d8_orbit(TorusPoint(Rat(1, 20), Rat(2, 20))).size() == 8); // generic
}

TEST_CASE("Jacobian theta form vs sine product") {
    CHECK_THAT(jacobian_xy(1.0 / 8, 1.0 / 4),
               Catch::Matchers::WithinAbs(16 * kPi2, 1e-9));
    for (auto [t1, t2] : {std::pair{0.11, 0.37}, {0.52, 0.81}, {0.03, 0.64}, {0.9, 0.2}}) {
        CHECK_THAT(jacobian_xy(t1, t2),
                   Catch::Matchers::WithinAbs(jacobian_xy_sine(t1, t2), 1e-8));
        CHECK_THAT(jacobian_yz(t1, t2),
                   Catch::Matchers::WithinAbs(jacobian_yz_sine(t1, t2), 1e-8));
    }
}

TEST_CASE("Jacobians factorized over the character domains") {
    for (auto [t1, t2] : {std::pair{0.11, 0.37}, {0.52, 0.81}, {0.03, 0.64}, {0.23, 0.71}}) {
        double x = char_fund(FundRep::x, t1, t2);
        double y = char_fund(FundRep::y, t1, t2);
        double z = char_fund(FundRep::z, t1, t2);
        CHECK(in_domain_xy(x, y));
        CHECK(in_domain_yz(y, z));
        CHECK_THAT(jacobian_xy_from_xy({x, y}),
                   Catch::Matchers::WithinAbs(std::abs(jacobian_xy(t1, t2)), 1e-8));
        CHECK_THAT(jacobian_yz_from_yz({y, z}),
                   Catch::Matchers::WithinAbs(std::abs(jacobian_yz(t1, t2)), 1e-8));
        CHECK_THAT(jacobian_xy_from_yz({y, z}),
                   Catch::Matchers::WithinAbs(std::abs(jacobian_xy(t1, t2)), 1e-8));
        // |J_yz| = 2 sqrt(z+y+1) |J_xy|
        CHECK_THAT(std::abs(jacobian_yz(t1, t2)),
                   Catch::Matchers::WithinAbs(
                       2 * std::sqrt(z + y + 1) * std::abs(jacobian_xy(t1, t2)), 1e-8));
    }
    CHECK_THROWS_AS(jacobian_xy_from_xy({5.0, 0.0}), std::domain_error);
}

TEST_CASE("Jacobians vanish on orbit boundaries") {
    // fixed points of reflections lie on the vanishing locus
    CHECK_THAT(jacobian_xy(0.3, 0.3), Catch::Matchers::WithinAbs(0.0, 1e-9));
    CHECK_THAT(jacobian_xy(0.3, 0.7), Catch::Matchers::WithinAbs(0.0, 1e-9));
    CHECK_THAT(jacobian_xy(0.0, 0.41), Catch::Matchers::WithinAbs(0.0, 1e-9));
    CHECK_THAT(jacobian_xy(0.41, 0.5), Catch::Matchers::WithinAbs(0.0, 1e-9));
}

TEST_CASE("J squared is D8 invariant") {
    TorusPoint p(Rat(3, 17), Rat(5, 17));
    double j2 = jacobian_xy(p);
    j2 *= j2;
    for (const auto& g : d8_elements()) {
        double j = jacobian_xy(d8_act(g, p));
        CHECK_THAT(j * j, Catch::Matchers::WithinAbs(j2, 1e-6));
    }
}

TEST_CASE("canonical representatives") {
    TorusPoint p(Rat(3, 10), Rat(1, 10));
    TorusPoint c = orbit_canonical(p);
    CHECK(in_fundamental_domain(c));
    CHECK(d8_orbit(p).count(c) == 1);
}
