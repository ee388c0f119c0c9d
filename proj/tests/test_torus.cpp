#include <catch2/catch_amalgamated.hpp>

#include "rank2/torus.hpp"

using namespace rank2;

TEST_CASE("mod1 and torus points") {
    CHECK(mod1(Rat(-1, 3)) == Rat(2, 3));
    CHECK(mod1(Rat(7, 3)) == Rat(1, 3));
    TorusPoint p(Rat(5, 4), Rat(-1, 4));
    CHECK(p.t1 == Rat(1, 4));
    CHECK(p.t2 == Rat(3, 4));
    CHECK(TorusPoint(Rat(0), Rat(0)) == TorusPoint(Rat(1), Rat(2)));
}

TEST_CASE("weight label conversions") {
    Weight w(2, 1);
    CHECK(w.partition() == std::array<int, 2>{3, 1});
    CHECK(Weight::from_partition(3, 1) == w);
    CHECK_THROWS_AS(Weight::from_partition(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Weight(-1, 0), std::invalid_argument);
}

TEST_CASE("fundamental characters") {
    // dimensions 4, 5, 10
    CHECK(char_fund_poly(FundRep::x).sum_coeffs() == 4);
    CHECK(char_fund_poly(FundRep::y).sum_coeffs() == 5);
    CHECK(char_fund_poly(FundRep::z).sum_coeffs() == 10);

    // z = x^2 - y - 1 pointwise
    for (auto [t1, t2] : {std::pair{0.13, 0.71}, {0.4, 0.09}, {0.62, 0.35}}) {
        double x = char_fund(FundRep::x, t1, t2);
        double y = char_fund(FundRep::y, t1, t2);
        CHECK_THAT(char_fund(FundRep::z, t1, t2),
                   Catch::Matchers::WithinAbs(x * x - y - 1, 1e-12));
    }

    // closed form vs Laurent evaluation
    for (FundRep u : {FundRep::x, FundRep::y, FundRep::z}) {
        auto v = char_fund_poly(u).eval(0.27, 0.81);
        CHECK_THAT(v.imag(), Catch::Matchers::WithinAbs(0.0, 1e-12));
        CHECK_THAT(v.real(),
                   Catch::Matchers::WithinAbs(char_fund(u, 0.27, 0.81), 1e-12));
    }
}

TEST_CASE("Weyl dimension formula") {
    CHECK(weyl_dim(1, 0) == 4);
    CHECK(weyl_dim(1, 1) == 5);
    CHECK(weyl_dim(2, 0) == 10);
    CHECK(weyl_dim(2, 2) == 14);
    CHECK(weyl_dim(0, 0) == 1);
    CHECK(weyl_dim(2, 1) == 16);
}

TEST_CASE("general characters agree with dimensions and the Weyl oracle") {
    for (int l1 = 0; l1 <= 4; ++l1)
        for (int l2 = 0; l2 <= 4; ++l2) {
            Weight w(l1, l2);
            auto mu = w.partition();
            const auto& chi = char_general(w);
            CHECK(chi.sum_coeffs() == weyl_dim(mu[0], mu[1]));
            // determinant-ratio character formula at generic points
            for (auto [t1, t2] : {std::pair{0.137, 0.7113}, {0.4021, 0.0912}}) {
                double direct = chi.eval(t1, t2).real();
                CHECK_THAT(direct,
                           Catch::Matchers::WithinAbs(char_weyl_oracle(w, t1, t2),
                                                      1e-8 * std::max(1.0, std::abs(direct))));
            }
        }
}

TEST_CASE("character ring relations") {
    // chi_x * chi_x = chi_(2,0) + chi_(1,1) + 1  (partition labels)
    LaurentPoly2 lhs = char_fund_poly(FundRep::x) * char_fund_poly(FundRep::x);
    LaurentPoly2 rhs = detail::char_partition(2, 0);
    rhs += detail::char_partition(1, 1);
    rhs += LaurentPoly2::one();
    lhs.sub(rhs);
    CHECK(lhs.c.empty());
}
