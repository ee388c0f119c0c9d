#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rank2/fusion.hpp"
#include "rank2/weyl.hpp"

namespace rank2 {

inline std::vector<Weight> alcove_sp2(int k) {
    std::vector<Weight> a;
    for (int l1 = 0; l1 <= k; ++l1)
        for (int l2 = 0; l2 + l1 <= k; ++l2) a.emplace_back(l1, l2);
    return a;
}

// Modular S matrix at level k (kappa = k+3, xi = pi/2kappa); real, symmetric,
// orthogonal, with strictly positive (0,0) row.
struct SMatrix {
    int k, kappa;
    std::vector<Weight> alcove;
    std::vector<std::vector<double>> S;

    int index_of(const Weight& w) const {
        for (size_t i = 0; i < alcove.size(); ++i)
            if (alcove[i] == w) return static_cast<int>(i);
        throw std::invalid_argument("weight outside alcove");
    }
};

inline SMatrix smatrix(int k) {
    SMatrix M;
    M.k = k;
    M.kappa = k + 3;
    M.alcove = alcove_sp2(k);
    double xi = kPi / (2.0 * M.kappa);
    size_t n = M.alcove.size();
    M.S.assign(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i) {
        double a1 = M.alcove[i].l1 + 1, a2 = M.alcove[i].l2 + 1;
        for (size_t j = 0; j < n; ++j) {
            double b1 = M.alcove[j].l1 + 1, b2 = M.alcove[j].l2 + 1;
            M.S[i][j] = (std::cos(xi * ((a1 + 2 * a2) * (b1 + 2 * b2) + a1 * b1))
                         - std::cos(xi * ((a1 + 2 * a2) * (b1 + 2 * b2) - a1 * b1))
                         + std::cos(xi * ((a1 + 2 * a2) * b1 - a1 * (b1 + 2 * b2)))
                         - std::cos(xi * ((a1 + 2 * a2) * b1 + a1 * (b1 + 2 * b2))))
                        / M.kappa;
        }
    }
    return M;
}

// Verlinde fusion matrix N_w; entries are rounded with an integrality guard.
inline std::vector<std::vector<long long>> verlinde_N(int k, const Weight& w,
                                                      double guard = 1e-6) {
    SMatrix M = smatrix(k);
    size_t n = M.alcove.size();
    int i0 = M.index_of(Weight(0, 0));
    int iw = M.index_of(w);
    std::vector<std::vector<long long>> N(n, std::vector<long long>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            double v = 0;
            for (size_t s = 0; s < n; ++s)
                v += M.S[iw][s] / M.S[i0][s] * M.S[a][s] * M.S[b][s];
            double r = std::round(v);
            if (std::abs(v - r) > guard || r < -0.5)
                throw std::runtime_error("Verlinde integrality violation at k=" +
                                         std::to_string(k));
            N[a][b] = static_cast<long long>(r);
        }
    return N;
}

// Exponent point of a level-k weight: theta = (hat l2 / 2kappa, (hat l1 + hat l2)/ 2kappa).
inline TorusPoint exponent_point(const Weight& w, int kappa) {
    return TorusPoint(Rat(w.l2 + 1, 2 * kappa), Rat(w.l1 + w.l2 + 2, 2 * kappa));
}

enum class PsiMode { cosine, jacobian, kac_weyl };

// Perron-Frobenius eigenvector entry psi^lambda_* in three equivalent forms.
// The Jacobian form carries a plus sign and the Kac-Weyl rescaling is
// 8 sin(xi) sin(2xi) sin(3xi) sin(4xi) / kappa (the printed minus sign and
// factor 16 do not match the S matrix; detected errata).
inline double psi_star(int k, const Weight& w, PsiMode mode) {
    int kappa = k + 3;
    double xi = kPi / (2.0 * kappa);
    double a1 = w.l1 + 1, a2 = w.l2 + 1;
    switch (mode) {
        case PsiMode::cosine:
            return (std::cos(2 * xi * (2 * a1 + 3 * a2)) + std::cos(2 * xi * (a1 - a2))
                    - std::cos(2 * xi * (a1 + 3 * a2)) - std::cos(2 * xi * (2 * a1 + a2)))
                   / kappa;
        case PsiMode::jacobian: {
            TorusPoint th = exponent_point(w, kappa);
            return jacobian_xy(th) / (8 * kappa * kPi2);
        }
        default: {
            double num = std::sin(a1 * xi) * std::sin(2 * a2 * xi)
                       * std::sin((a1 + 2 * a2) * xi) * std::sin((2 * a1 + 2 * a2) * xi);
            return 8 * num / kappa;
        }
    }
}

// ---- quintic root isolation: Sturm bracketing + bisection ----

namespace detail {

using Poly = std::vector<double>;  // coefficients, highest degree first

inline double poly_eval(const Poly& p, double x) {
    double v = 0;
    for (double c : p) v = v * x + c;
    return v;
}

inline Poly poly_derivative(const Poly& p) {
    int n = static_cast<int>(p.size()) - 1;
    Poly d;
    for (int i = 0; i < n; ++i) d.push_back(p[i] * (n - i));
    return d;
}

inline Poly poly_rem(const Poly& a, const Poly& b) {
    Poly r = a;
    while (r.size() >= b.size() && !r.empty()) {
        double q = r[0] / b[0];
        for (size_t i = 0; i < b.size(); ++i) r[i] -= q * b[i];
        r.erase(r.begin());
        while (!r.empty() && std::abs(r[0]) < 1e-300) r.erase(r.begin());
    }
    return r;
}

inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, poly_derivative(p)};
    while (chain.back().size() > 1) {
        Poly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (double& c : r) c = -c;
        chain.push_back(r);
    }
    return chain;
}

inline int sturm_sign_changes(const std::vector<Poly>& chain, double x) {
    int changes = 0, prev = 0;
    for (const auto& q : chain) {
        double v = poly_eval(q, x);
        int s = (v > 0) - (v < 0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace detail

// All real roots of the polynomial in (lo, hi), ascending; each isolated via
// the Sturm chain then bisected, with a Newton polish.
inline std::vector<double> poly_roots(const std::vector<double>& coeffs, double lo, double hi) {
    auto chain = detail::sturm_chain(coeffs);
    auto count = [&](double a, double b) {
        return detail::sturm_sign_changes(chain, a) - detail::sturm_sign_changes(chain, b);
    };
    std::vector<std::pair<double, double>> brackets;
    std::vector<std::pair<double, double>> work{{lo, hi}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int c = count(a, b);
        if (c == 0) continue;
        if (c == 1) {
            brackets.emplace_back(a, b);
        } else {
            double m = (a + b) / 2;
            work.emplace_back(a, m);
            work.emplace_back(m, b);
        }
    }
    std::sort(brackets.begin(), brackets.end());
    std::vector<double> roots;
    auto d = detail::poly_derivative(coeffs);
    for (auto [a, b] : brackets) {
        double fa = detail::poly_eval(coeffs, a);
        for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
            double m = (a + b) / 2, fm = detail::poly_eval(coeffs, m);
            if ((fa <= 0) == (fm <= 0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        double r = (a + b) / 2;
        for (int it = 0; it < 4; ++it) {
            double dv = detail::poly_eval(d, r);
            if (dv != 0) r -= detail::poly_eval(coeffs, r) / dv;
        }
        roots.push_back(r);
    }
    return roots;
}

// E8 quintics. a_i / b_i is the i-th LARGEST root, so index 1 is the last
// element of the ascending root vector.
inline const std::vector<double>& e8_quintic_a() {
    static const std::vector<double> r =
        poly_roots({56689952, -15460896, 1522664, -63888, 968, -1}, 0.0, 1.0);
    return r;
}
inline const std::vector<double>& e8_quintic_b() {
    static const std::vector<double> r = poly_roots({1, -11, 44, -77, 55, -11}, 0.0, 8.0);
    return r;
}

// ---- exponent data ----

enum class WeightTag { grid, orbit, table };

struct ExponentEntry {
    TorusPoint theta;
    int mult = 1;
    double weight = 0;  // total |psi_*|^2 carried by this entry (all copies)
    double bx = 0, by = 0, bz = 0;
};

struct ExponentData {
    std::string model;
    std::vector<ExponentEntry> entries;
    double mass() const {
        double s = 0;
        for (const auto& e : entries) s += e.weight;
        return s;
    }
};

enum class Model { A_Sp2, A_SO5, D, E3, E3M, E7, E7M, E8, E12 };

inline int model_level(Model m, int level = 0) {
    switch (m) {
        case Model::E3: case Model::E3M: return 3;
        case Model::E7: case Model::E7M: return 7;
        case Model::E8: return 8;
        case Model::E12: return 12;
        default: return level;
    }
}

inline std::string model_name(Model m, int level = 0) {
    switch (m) {
        case Model::A_Sp2: return "A" + std::to_string(level) + "_Sp2";
        case Model::A_SO5: return "A" + std::to_string(level) + "_SO5";
        case Model::D: return "D" + std::to_string(level);
        case Model::E3: return "E3";
        case Model::E3M: return "E3M";
        case Model::E7: return "E7";
        case Model::E7M: return "E7M";
        case Model::E8: return "E8";
        default: return "E12";
    }
}

namespace detail {

inline ExponentEntry make_entry(const TorusPoint& th, double w, int mult = 1) {
    ExponentEntry e;
    e.theta = th;
    e.mult = mult;
    e.weight = w;
    e.bx = char_fund(FundRep::x, th);
    e.by = char_fund(FundRep::y, th);
    e.bz = char_fund(FundRep::z, th);
    return e;
}

inline TorusPoint rat_point(long long p, long long q, long long den) {
    return TorusPoint(Rat(p, den), Rat(q, den));
}

}  // namespace detail

inline ExponentData eigendata(Model model, int level = 0);

namespace detail {

inline ExponentData eigendata_a_sp2(int k) {
    ExponentData d;
    d.model = model_name(Model::A_Sp2, k);
    SMatrix M = smatrix(k);
    int i0 = M.index_of(Weight(0, 0));
    for (size_t i = 0; i < M.alcove.size(); ++i) {
        double s = M.S[i0][i];
        d.entries.push_back(make_entry(exponent_point(M.alcove[i], M.kappa), s * s));
    }
    return d;
}

// SO(5) level k: exponents lambda with l1 + 2 l2 <= k; weight 2 S^2 off the
// wall and S^2 on the wall l1 + 2 l2 = k (the two components each see half).
inline ExponentData eigendata_a_so5(int k) {
    ExponentData d;
    d.model = model_name(Model::A_SO5, k);
    SMatrix M = smatrix(k);
    int i0 = M.index_of(Weight(0, 0));
    for (size_t i = 0; i < M.alcove.size(); ++i) {
        const Weight& w = M.alcove[i];
        if (w.l1 + 2 * w.l2 > k) continue;
        double s = M.S[i0][i];
        double wt = (w.l1 + 2 * w.l2 == k) ? s * s : 2 * s * s;
        d.entries.push_back(make_entry(exponent_point(w, M.kappa), wt));
    }
    return d;
}

// Orbifold D_k: exponents are the even-parity alcove weights (l1 even), each
// carrying 2 S^2. Fixed points of the simple current appear as pairs in the
// exponent list but their combined mass is still 2 S^2, so a single combined
// entry per weight conserves total mass 1 for every k (the printed per-copy
// rule S^2 would not; detected erratum, pinned against explicit orbifold
// graphs at low level).
inline ExponentData eigendata_d(int k) {
    ExponentData d;
    d.model = model_name(Model::D, k);
    SMatrix M = smatrix(k);
    int i0 = M.index_of(Weight(0, 0));
    for (size_t i = 0; i < M.alcove.size(); ++i) {
        const Weight& w = M.alcove[i];
        if (w.l1 % 2 != 0) continue;
        double s = M.S[i0][i];
        d.entries.push_back(make_entry(exponent_point(w, M.kappa), 2 * s * s));
    }
    return d;
}

inline ExponentData eigendata_e3(bool orbifold) {
    ExponentData d;
    d.model = orbifold ? "E3M" : "E3";
    double s3 = std::sqrt(3.0);
    double f = orbifold ? 2.0 : 1.0;
    d.entries = {
        make_entry(rat_point(1, 2, 12), f * (3 - s3) / 24),
        make_entry(rat_point(2, 5, 12), f * (3 + s3) / 24),
        make_entry(rat_point(1, 4, 12), f * (3 + s3) / 24),
        make_entry(rat_point(4, 5, 12), f * (3 - s3) / 24),
        make_entry(rat_point(2, 4, 12), 0.5, 2),
    };
    return d;
}

inline ExponentData eigendata_e7(bool orbifold) {
    ExponentData d;
    d.model = orbifold ? "E7M" : "E7";
    double s5 = std::sqrt(5.0);
    double am = std::sqrt(10 - 2 * s5), bp = std::sqrt(10 + 2 * s5);
    double f = orbifold ? 2.0 : 1.0;
    double w1 = f * (5 - s5 - am) / 80, w2 = f * (5 - s5 + am) / 80;
    double w3 = f * (5 + s5 + bp) / 80, w4 = f * (5 + s5 - bp) / 80;
    double wfix = orbifold ? 0.0 : 0.25;
    d.entries = {
        make_entry(rat_point(1, 2, 20), w1), make_entry(rat_point(8, 9, 20), w1),
        make_entry(rat_point(2, 9, 20), w2), make_entry(rat_point(1, 8, 20), w2),
        make_entry(rat_point(3, 6, 20), w3), make_entry(rat_point(4, 7, 20), w3),
        make_entry(rat_point(6, 7, 20), w4), make_entry(rat_point(3, 4, 20), w4),
        make_entry(rat_point(2, 6, 20), wfix, 2), make_entry(rat_point(4, 8, 20), wfix, 2),
    };
    return d;
}

// E8 table: the five a-roots pair off along orbit seeds; the five b-rows sit
// on the line theta1+theta2 = 1/2 where the Jacobian vanishes. The printed
// weight "11 b_i" gives total mass 121; the reciprocal 1/(11 b_i) sums to
// 5/11 by Vieta, exactly complementing the a-part mass 6/11, and is used here.
inline ExponentData eigendata_e8() {
    ExponentData d;
    d.model = "E8";
    const auto& ar = e8_quintic_a();  // ascending: a5..a1
    const auto& br = e8_quintic_b();
    double a1 = ar[4], a2 = ar[3], a3 = ar[2], a4 = ar[1], a5 = ar[0];
    double b1 = br[4], b2 = br[3], b3 = br[2], b4 = br[1], b5 = br[0];
    d.entries = {
        make_entry(rat_point(1, 2, 22), a5),  make_entry(rat_point(9, 10, 22), a5),
        make_entry(rat_point(3, 4, 22), a4),  make_entry(rat_point(7, 8, 22), a4),
        make_entry(rat_point(1, 6, 22), a3),  make_entry(rat_point(5, 10, 22), a3),
        make_entry(rat_point(2, 7, 22), a2),  make_entry(rat_point(4, 9, 22), a2),
        make_entry(rat_point(3, 6, 22), a1),  make_entry(rat_point(5, 8, 22), a1),
        make_entry(rat_point(1, 10, 22), 1 / (11 * b1)),
        make_entry(rat_point(2, 9, 22), 1 / (11 * b5)),
        make_entry(rat_point(3, 8, 22), 1 / (11 * b2)),
        make_entry(rat_point(4, 7, 22), 1 / (11 * b4)),
        make_entry(rat_point(5, 6, 22), 1 / (11 * b3)),
    };
    return d;
}

inline ExponentData eigendata_e12() {
    ExponentData d;
    d.model = "E12";
    double s5 = std::sqrt(5.0);
    double cp = std::sqrt(30 + 6 * s5), cm = std::sqrt(30 - 6 * s5);
    double u1 = (9 - s5 - cp) / 120, u2 = (9 + s5 - cm) / 120;
    double u3 = (9 + s5 + cm) / 120, u4 = (9 - s5 + cp) / 120;
    d.entries = {
        make_entry(rat_point(1, 2, 30), u1),   make_entry(rat_point(13, 14, 30), u1),
        make_entry(rat_point(1, 8, 30), u2),   make_entry(rat_point(7, 14, 30), u2),
        make_entry(rat_point(2, 11, 30), u3),  make_entry(rat_point(4, 13, 30), u3),
        make_entry(rat_point(4, 7, 30), u4),   make_entry(rat_point(8, 11, 30), u4),
        make_entry(rat_point(5, 10, 30), 2.0 / 3.0, 4),
    };
    return d;
}

}  // namespace detail

inline ExponentData eigendata(Model model, int level) {
    switch (model) {
        case Model::A_Sp2: return detail::eigendata_a_sp2(level);
        case Model::A_SO5: return detail::eigendata_a_so5(level);
        case Model::D: return detail::eigendata_d(level);
        case Model::E3: return detail::eigendata_e3(false);
        case Model::E3M: return detail::eigendata_e3(true);
        case Model::E7: return detail::eigendata_e7(false);
        case Model::E7M: return detail::eigendata_e7(true);
        case Model::E8: return detail::eigendata_e8();
        default: return detail::eigendata_e12();
    }
}

enum class GenPair { xy, yz };

inline double exponent_sum_moment(const ExponentData& d, GenPair pair, int m, int n) {
    double s = 0;
    for (const auto& e : d.entries) {
        double b1 = (pair == GenPair::xy) ? e.bx : e.by;
        double b2 = (pair == GenPair::xy) ? e.by : e.bz;
        s += std::pow(b1, m) * std::pow(b2, n) * e.weight;
    }
    return s;
}

}  // namespace rank2
