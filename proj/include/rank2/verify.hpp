#pragma once

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "rank2/fusion.hpp"

#include "rank2/measures.hpp"
#include "rank2/weights1d.hpp"

namespace rank2 {

struct Check {
    std::string id;      // stable sort key, e.g. "c06.so5.k03"
    std::string model;
    std::string params;
    double lhs = 0, rhs = 0;
    double abs_error = 0;
    double tolerance = 0;
    std::string status;  // pass | fail | discrepancy-documented
};

using CheckList = std::vector<Check>;

namespace detail {

inline Check make_check(std::string id, std::string model, std::string params, double lhs,
                        double rhs, double tol) {
    Check c;
    c.id = std::move(id);
    c.model = std::move(model);
    c.params = std::move(params);
    c.lhs = lhs;
    c.rhs = rhs;
    c.abs_error = std::abs(lhs - rhs);
    c.tolerance = tol;
    c.status = (c.abs_error <= tol) ? "pass" : "fail";
    return c;
}

// As make_check, but an in-tolerance match is reported as a documented
// discrepancy against the printed value rather than a pass.
inline Check make_documented(std::string id, std::string model, std::string params, double lhs,
                             double rhs, double tol) {
    Check c = make_check(std::move(id), std::move(model), std::move(params), lhs, rhs, tol);
    if (c.status == "pass") c.status = "discrepancy-documented";
    return c;
}

inline std::string fmt(const char* f, auto... args) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

}  // namespace detail

// Criterion 1: moment oracle triangle. Multinomial formula, lattice-walk DP
// and Laurent constant term agree as exact integers for m <= 12.
inline CheckList criterion_moment_triangle(int max_m = 12) {
    CheckList out;
    const char* names[3] = {"x", "y", "z"};
    for (int ui = 0; ui < 3; ++ui) {
        FundRep u = static_cast<FundRep>(ui);
        BigInt worst = 0;
        for (int m = 0; m <= max_m; ++m) {
            BigInt a = moment_multinomial(u, m);
            BigInt b = moment_walk_dp(u, m);
            BigInt c = char_fund_poly(u).pow(m).constant_term();
            BigInt d = abs(a - b) + abs(a - c);
            if (d > worst) worst = d;
        }
        out.push_back(detail::make_check(detail::fmt("c01.triangle.%s", names[ui]), "A_infinity",
                                         detail::fmt("u=%s m<=%d", names[ui], max_m),
                                         static_cast<double>(worst), 0.0, 0.0));
    }
    return out;
}

// Criterion 2: S-matrix symmetry and orthogonality residuals, k = 1..20.
inline CheckList criterion_smatrix(int max_k = 20, double tol = 1e-10) {
    CheckList out;
    for (int k = 1; k <= max_k; ++k) {
        SMatrix M = smatrix(k);
        size_t n = M.alcove.size();
        double res = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                res = std::max(res, std::abs(M.S[i][j] - M.S[j][i]));
                double dot = 0;
                for (size_t s = 0; s < n; ++s) dot += M.S[i][s] * M.S[j][s];
                res = std::max(res, std::abs(dot - (i == j ? 1.0 : 0.0)));
            }
        out.push_back(detail::make_check(detail::fmt("c02.smatrix.k%02d", k), "S-matrix",
                                         detail::fmt("k=%d", k), res, 0.0, tol));
    }
    return out;
}

// Criterion 3: Verlinde fusion matrices of the two generators match the A_k
// graph adjacencies entrywise, k <= 8.
inline CheckList criterion_verlinde_graph(int max_k = 8) {
    CheckList out;
    for (int k = 1; k <= max_k; ++k) {
        SMatrix M = smatrix(k);
        int mism = 0;
        const FundRep gens[2] = {FundRep::x, FundRep::y};
        const Weight gw[2] = {Weight(1, 0), Weight(0, 1)};
        for (int gi = 0; gi < 2; ++gi) {
            auto N = verlinde_N(k, gw[gi]);
            auto g = a_graph(Group::Sp2, k, gens[gi]);
            for (size_t a = 0; a < N.size(); ++a)
                for (size_t b = 0; b < N.size(); ++b) {
                    int i = g.index_of(M.alcove[a]), j = g.index_of(M.alcove[b]);
                    long long adj = 0;
                    auto it = g.adj[i].find(j);
                    if (it != g.adj[i].end()) adj = it->second;
                    if (adj != N[a][b]) ++mism;
                }
        }
        out.push_back(detail::make_check(detail::fmt("c03.verlinde.k%02d", k), "A_k(Sp2)",
                                         detail::fmt("k=%d generators x,y", k),
                                         static_cast<double>(mism), 0.0, 0.0));
    }
    return out;
}

// Criterion 4: the Perron-Frobenius eigenvector entry psi* evaluated in its
// three printed forms agrees at every alcove weight, k <= 12.
inline CheckList criterion_psi_star(int max_k = 12, double tol = 1e-10) {
    CheckList out;
    for (int k = 1; k <= max_k; ++k) {
        double worst = 0;
        for (const auto& w : alcove_sp2(k)) {
            double a = psi_star(k, w, PsiMode::cosine);
            double b = psi_star(k, w, PsiMode::jacobian);
            double c = psi_star(k, w, PsiMode::kac_weyl);
            worst = std::max({worst, std::abs(a - b), std::abs(a - c)});
        }
        out.push_back(detail::make_check(detail::fmt("c04.psistar.k%02d", k), "A_k(Sp2)",
                                         detail::fmt("k=%d all alcove weights", k), worst, 0.0,
                                         tol));
    }
    return out;
}

// Criterion 5: Jacobian consistency between the theta form, the sine-product
// form and the (x,y)/(y,z) factorized forms, plus |J_yz| = 2 sqrt(z+y+1) |J_xy|.
inline CheckList criterion_jacobians(int samples = 1000, double tol = 1e-8) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst_xy = 0, worst_yz = 0, worst_rel = 0;
    for (int i = 0; i < samples; ++i) {
        double t1 = uni(rng), t2 = uni(rng);
        double jxy = jacobian_xy(t1, t2);
        double jyz = jacobian_yz(t1, t2);
        double scale_xy = std::max(std::abs(jxy), 1.0);
        double scale_yz = std::max(std::abs(jyz), 1.0);
        worst_xy = std::max(worst_xy, std::abs(jxy - jacobian_xy_sine(t1, t2)) / scale_xy);
        worst_yz = std::max(worst_yz, std::abs(jyz - jacobian_yz_sine(t1, t2)) / scale_yz);
        double x = char_fund(FundRep::x, t1, t2);
        double y = char_fund(FundRep::y, t1, t2);
        double z = char_fund(FundRep::z, t1, t2);
        worst_xy = std::max(
            worst_xy, std::abs(std::abs(jxy) - jacobian_xy_from_xy({x, y})) / scale_xy);
        worst_yz = std::max(
            worst_yz, std::abs(std::abs(jyz) - jacobian_yz_from_yz({y, z})) / scale_yz);
        worst_rel = std::max(
            worst_rel,
            std::abs(std::abs(jyz) - 2 * std::sqrt(std::max(z + y + 1, 0.0)) * std::abs(jxy))
                / scale_yz);
    }
    CheckList out;
    out.push_back(detail::make_check("c05.jacobian.xy", "T^2",
                                     detail::fmt("%d random points", samples), worst_xy, 0.0,
                                     tol));
    out.push_back(detail::make_check("c05.jacobian.yz", "T^2",
                                     detail::fmt("%d random points", samples), worst_yz, 0.0,
                                     tol));
    out.push_back(detail::make_check("c05.jacobian.relation", "T^2",
                                     "|J_yz| = 2 sqrt(z+y+1) |J_xy|", worst_rel, 0.0, tol));
    return out;
}

// Criterion 6: level-k Dirac-grid measure cross-moments equal the graph-walk
// integers, both series, k = 1..8, m+n <= 6.
inline CheckList criterion_level_k_measures(int max_k = 8, int max_order = 6,
                                            double tol = 1e-6) {
    CheckList out;
    for (int k = 1; k <= max_k; ++k) {
        {
            auto gx = a_graph(Group::Sp2, k, FundRep::x);
            auto gy = a_graph(Group::Sp2, k, FundRep::y);
            auto mu = measure_for(Model::A_Sp2, k);
            double worst = 0;
            for (int m = 0; m <= max_order; ++m)
                for (int n = 0; m + n <= max_order; ++n)
                    worst = std::max(worst,
                                     std::abs(measure_cross_moment(mu, GenPair::xy, m, n)
                                              - static_cast<double>(
                                                    graph_cross_moment(gx, gy, m, n))));
            out.push_back(detail::make_check(detail::fmt("c06.sp2.k%02d", k), "A_k(Sp2)",
                                             detail::fmt("k=%d m+n<=%d", k, max_order), worst,
                                             0.0, tol));
        }
        {
            auto gy = a_graph(Group::SO5, k, FundRep::y);
            auto gz = a_graph(Group::SO5, k, FundRep::z);
            auto mu = measure_for(Model::A_SO5, k);
            double worst = 0;
            for (int m = 0; m <= max_order; ++m)
                for (int n = 0; m + n <= max_order; ++n)
                    worst = std::max(worst,
                                     std::abs(measure_cross_moment(mu, GenPair::yz, m, n)
                                              - static_cast<double>(
                                                    graph_cross_moment(gy, gz, m, n))));
            out.push_back(detail::make_check(detail::fmt("c06.so5.k%02d", k), "A_k(SO5)",
                                             detail::fmt("k=%d m+n<=%d", k, max_order), worst,
                                             0.0, tol));
        }
    }
    return out;
}

// Criterion 7: D_k measure moments equal the orbifold exponent-sum moments;
// eigendata mass is 1.
inline CheckList criterion_d_series(int max_k = 8, int max_order = 6, double mom_tol = 1e-8,
                                    double mass_tol = 1e-10) {
    CheckList out;
    for (int k = 2; k <= max_k; ++k) {
        auto mu = measure_for(Model::D, k);
        auto ed = eigendata(Model::D, k);
        double worst = 0;
        for (int m = 0; m <= max_order; ++m)
            for (int n = 0; m + n <= max_order; ++n)
                worst = std::max(worst, std::abs(measure_cross_moment(mu, GenPair::xy, m, n)
                                                 - exponent_sum_moment(ed, GenPair::xy, m, n)));
        out.push_back(detail::make_check(detail::fmt("c07.d.k%02d.moments", k), "D_k",
                                         detail::fmt("k=%d m+n<=%d", k, max_order), worst, 0.0,
                                         mom_tol));
        out.push_back(detail::make_check(detail::fmt("c07.d.k%02d.mass", k), "D_k",
                                         detail::fmt("k=%d", k), ed.mass(), 1.0, mass_tol));
    }
    return out;
}

// Criterion 8: exceptional models. Measure moments vs exponent tables in both
// generator pairs; masses 1 except the documented E3M = 3/2 and E12 = 19/15.
inline CheckList criterion_exceptional(int max_order = 6, double mom_tol = 1e-8,
                                       double mass_tol = 1e-10) {
    CheckList out;
    const Model models[6] = {Model::E3, Model::E3M, Model::E7, Model::E7M, Model::E8,
                             Model::E12};
    for (Model mo : models) {
        auto mu = measure_for(mo);
        auto ed = eigendata(mo);
        std::string name = model_name(mo, model_level(mo, 0));
        double worst = 0;
        for (GenPair pr : {GenPair::xy, GenPair::yz})
            for (int m = 0; m <= max_order; ++m)
                for (int n = 0; m + n <= max_order; ++n)
                    worst = std::max(worst, std::abs(measure_cross_moment(mu, pr, m, n)
                                                     - exponent_sum_moment(ed, pr, m, n)));
        out.push_back(detail::make_check("c08." + name + ".moments", name,
                                         detail::fmt("m+n<=%d both pairs", max_order), worst,
                                         0.0, mom_tol));
        double mass = ed.mass();
        if (mo == Model::E3M) {
            out.push_back(detail::make_documented("c08." + name + ".mass", name,
                                                  "printed mass 3/2, not a probability measure",
                                                  mass, 1.5, mass_tol));
        } else if (mo == Model::E12) {
            out.push_back(detail::make_documented(
                "c08." + name + ".mass", name, "printed mass 19/15, not a probability measure",
                mass, 19.0 / 15.0, mass_tol));
        } else {
            out.push_back(detail::make_check("c08." + name + ".mass", name, "", mass, 1.0,
                                             mass_tol));
        }
    }
    // E8 b-atom total mass 5/11 by Vieta (so a-part carries 6/11).
    double bmass = 0;
    for (double b : e8_quintic_b()) bmass += 1.0 / (11 * b);
    out.push_back(detail::make_check("c08.E8.bmass", "E8", "sum 1/(11 b_i) = 5/11", bmass,
                                     5.0 / 11.0, mass_tol));
    return out;
}

// Criterion 9: orbit-measure support geometry.
inline CheckList criterion_orbit_geometry() {
    CheckList out;
    auto d00 = d8_orbit_measure(Rat(0), Rat(0));
    out.push_back(detail::make_check("c09.support.origin", "d^(0,0)", "support size",
                                     static_cast<double>(d00.support_size()), 2.0, 0.0));
    auto danti = d8_orbit_measure(Rat(1, 20), Rat(9, 20));  // theta2 = 1/2 - theta1
    out.push_back(detail::make_check("c09.support.antidiagonal", "d^(1/20,9/20)", "support size",
                                     static_cast<double>(danti.support_size()), 8.0, 0.0));
    auto dgen = d8_orbit_measure(Rat(1, 20), Rat(2, 20));
    out.push_back(detail::make_check("c09.support.generic", "d^(1/20,2/20)", "support size",
                                     static_cast<double>(dgen.support_size()), 16.0, 0.0));
    bool has_partner = false;
    for (const auto& a : dgen.atoms)
        if (a.p == TorusPoint(Rat(8, 20), Rat(9, 20))) has_partner = true;
    out.push_back(detail::make_check("c09.support.partner", "d^(1/20,2/20)",
                                     "(8/20,9/20) in support", has_partner ? 1.0 : 0.0, 1.0,
                                     0.0));
    return out;
}

// Criterion 10: 1-D weights. Unit mass, the y = x-shift identity, and the
// moment chains against the combinatorial oracles.
inline CheckList criterion_weights(int max_m = 6, double mass_tol = 1e-6,
                                   double shift_tol = 1e-8, double mom_tol = 1e-5) {
    CheckList out;
    const char* names[3] = {"x", "y", "z"};

    // The y weight density must equal the shifted x density; its moments are
    // checked against the independent y oracle below.
    double shift_worst = 0;
    auto wty = weight_T2(FundRep::y);
    for (int i = 0; i < 50; ++i) {
        double y = -3 + 8.0 * (i + 0.5) / 50;
        shift_worst = std::max(shift_worst,
                               std::abs(wty.density(y) - detail::weight_t2_x(y - 1)));
    }
    out.push_back(detail::make_check("c10.shift.y", "weight_T2(y)",
                                     "weight_T2(y)(t) = weight_T2(x)(t-1), 50 points",
                                     shift_worst, 0.0, shift_tol));

    for (int ui = 0; ui < 3; ++ui) {
        FundRep u = static_cast<FundRep>(ui);
        auto wt = weight_T2(u);
        auto wh = weight_Haar(u);
        out.push_back(detail::make_check(detail::fmt("c10.mass.t2.%s", names[ui]), "weight_T2",
                                         detail::fmt("u=%s", names[ui]), wt.mass(), 1.0,
                                         mass_tol));
        out.push_back(detail::make_check(detail::fmt("c10.mass.haar.%s", names[ui]),
                                         "weight_Haar", detail::fmt("u=%s", names[ui]),
                                         wh.mass(), 1.0, mass_tol));
        // errors measured relative to the oracle magnitude: the high z moments
        // are 5-digit integers, so a flat absolute bound would demand more
        // than the (singular-integrand) quadrature can deliver
        double worst_t2 = 0, worst_haar = 0;
        for (int m = 1; m <= max_m; ++m) {
            double oracle_t2 = static_cast<double>(moment_multinomial(u, m));
            worst_t2 = std::max(worst_t2, std::abs(wt.moment(m) - oracle_t2)
                                              / std::max(1.0, std::abs(oracle_t2)));
            Group grp = (u == FundRep::z) ? Group::SO5 : Group::Sp2;
            auto g = a_graph(grp, 2 * m + 2, u);
            double oracle_h = static_cast<double>(graph_moment(g, m));
            worst_haar = std::max(worst_haar, std::abs(wh.moment(m) - oracle_h)
                                                  / std::max(1.0, std::abs(oracle_h)));
        }
        out.push_back(detail::make_check(detail::fmt("c10.moments.t2.%s", names[ui]),
                                         "weight_T2",
                                         detail::fmt("u=%s m<=%d relative", names[ui], max_m),
                                         worst_t2, 0.0, mom_tol));
        out.push_back(detail::make_check(detail::fmt("c10.moments.haar.%s", names[ui]),
                                         "weight_Haar",
                                         detail::fmt("u=%s m<=%d relative", names[ui], max_m),
                                         worst_haar, 0.0, mom_tol));
    }
    return out;
}

// Criterion 11: the A_infinity density measure reproduces the stable graph
// moments (alcove truncation no longer matters once k exceeds the order).
inline CheckList criterion_a_infinity(int max_order = 8, int grid = 400, double tol = 1e-6) {
    auto mu = measure_a_infinity(grid);
    double worst = 0;
    int k = 2 * max_order + 2;
    auto gx = a_graph(Group::Sp2, k, FundRep::x);
    auto gy = a_graph(Group::Sp2, k, FundRep::y);
    for (int m = 0; m <= max_order; ++m)
        for (int n = 0; m + n <= max_order; ++n)
            worst = std::max(worst,
                             std::abs(measure_cross_moment(mu, GenPair::xy, m, n)
                                      - static_cast<double>(graph_cross_moment(gx, gy, m, n))));
    CheckList out;
    out.push_back(detail::make_check("c11.ainf.moments", "A_infinity",
                                     detail::fmt("grid %d^2 m+n<=%d", grid, max_order), worst,
                                     0.0, tol));
    return out;
}

enum class Suite { All, SMatrix, ASeries, DSeries, Exceptional, Weights };

inline CheckList run_suite(Suite s) {
    auto app = [](CheckList& dst, CheckList src) {
        for (auto& c : src) dst.push_back(std::move(c));
    };
    CheckList out;
    if (s == Suite::All || s == Suite::SMatrix) {
        app(out, criterion_smatrix());
        app(out, criterion_verlinde_graph());
        app(out, criterion_psi_star());
    }
    if (s == Suite::All || s == Suite::ASeries) {
        app(out, criterion_moment_triangle());
        app(out, criterion_jacobians());
        app(out, criterion_level_k_measures());
        app(out, criterion_a_infinity());
    }
    if (s == Suite::All || s == Suite::DSeries) app(out, criterion_d_series());
    if (s == Suite::All || s == Suite::Exceptional) {
        app(out, criterion_exceptional());
        app(out, criterion_orbit_geometry());
    }
    if (s == Suite::All || s == Suite::Weights) app(out, criterion_weights());
    std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    return out;
}

inline bool any_failed(const CheckList& cs) {
    for (const auto& c : cs)
        if (c.status == "fail") return true;
    return false;
}

}  // namespace rank2
