#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "rank2/modular.hpp"

namespace rank2 {

struct Atom {
    TorusPoint p;
    double weight = 0;
    WeightTag tag = WeightTag::grid;
};

// Finite atomic measure on T^2 with exact rational atom positions. Atoms with
// zero weight are kept on purpose: the support of a printed measure and its
// identity as a measure are tracked independently.
struct AtomicMeasure2 {
    std::vector<Atom> atoms;

    void add(const TorusPoint& p, double w, WeightTag tag) {
        for (auto& a : atoms)
            if (a.p == p) {
                a.weight += w;
                return;
            }
        atoms.push_back({p, w, tag});
    }
    double mass() const {
        double s = 0;
        for (const auto& a : atoms) s += a.weight;
        return s;
    }
    size_t support_size() const { return atoms.size(); }
};

struct DensityMeasure2 {
    std::function<double(double, double)> density;
    int grid = 400;
};

struct Measure2 {
    std::string model;
    bool is_density = false;
    AtomicMeasure2 atomic;
    DensityMeasure2 dens;
};

inline AtomicMeasure2 dirac_grid(int m) {
    if (m < 1) throw std::invalid_argument("grid order must be >= 1");
    AtomicMeasure2 mu;
    double w = 1.0 / (static_cast<double>(m) * m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            mu.add(TorusPoint(Rat(p, m), Rat(q, m)), w, WeightTag::grid);
    return mu;
}

// d^{(theta1,theta2)}: uniform Dirac measure on the union of the D8 orbits of
// the seed and of the partner seed (1/2 - theta2, 1/2 - theta1) mod 1.
inline AtomicMeasure2 d8_orbit_measure(const Rat& t1, const Rat& t2) {
    TorusPoint seed(t1, t2);
    TorusPoint partner(Rat(1, 2) - t2, Rat(1, 2) - t1);
    std::set<TorusPoint> supp = d8_orbit(seed);
    for (const auto& p : d8_orbit(partner)) supp.insert(p);
    AtomicMeasure2 mu;
    double w = 1.0 / supp.size();
    for (const auto& p : supp) mu.add(p, w, WeightTag::orbit);
    return mu;
}

inline AtomicMeasure2 d8_orbit_measure(const TorusPoint& p) {
    return d8_orbit_measure(p.t1, p.t2);
}

namespace detail {

// Append coeff * f(atom) * mu to out for each atom of mu.
inline void add_scaled(AtomicMeasure2& out, const AtomicMeasure2& mu, double coeff,
                       const std::function<double(const TorusPoint&)>& f, WeightTag tag) {
    for (const auto& a : mu.atoms) out.add(a.p, coeff * f(a.p) * a.weight, tag);
}

inline double abs_jxy(const TorusPoint& p) { return std::abs(jacobian_xy(p)); }
inline double jxy_sq(const TorusPoint& p) {
    double j = jacobian_xy(p);
    return j * j;
}

}  // namespace detail

// The level-k and exceptional spectral measures on T^2, as printed up to the
// documented corrections (see the per-model comments).
inline Measure2 measure_for(Model model, int level = 0) {
    using detail::add_scaled;
    Measure2 M;
    int k = model_level(model, level);
    M.model = model_name(model, k);
    AtomicMeasure2& mu = M.atomic;

    switch (model) {
        case Model::A_Sp2: {
            int kap = k + 3;
            add_scaled(mu, dirac_grid(2 * kap), 1.0 / (128 * kPi4), detail::jxy_sq,
                       WeightTag::grid);
            break;
        }
        case Model::A_SO5: {
            // The grid term alone reproduces the graph moments exactly. The
            // printed correction line for the wall exponents would push the
            // mass above 1 (no graph measure can do that), so it enters at
            // weight zero; its support is a subset of the 2kappa grid, so
            // this merges into existing atoms and only documents intent.
            int kap = k + 3;
            add_scaled(mu, dirac_grid(2 * kap), 1.0 / (128 * kPi4), detail::jxy_sq,
                       WeightTag::grid);
            for (int j = 1; j <= k - 1; ++j) {
                AtomicMeasure2 d = d8_orbit_measure(Rat(j, 2 * kap), Rat(kap - j, 2 * kap));
                add_scaled(mu, d, 0.0, detail::jxy_sq, WeightTag::orbit);
            }
            break;
        }
        case Model::D: {
            // Atoms on the odd-parity half of the 2kappa grid. The printed
            // difference-of-grids expression creates spurious negative atoms
            // and a nonzero wall correction; the odd-parity form below equals
            // the orbifold eigendata exactly at every level.
            int kap = k + 3;
            double c = 1.0 / (256.0 * kap * kap * kPi4);
            for (int p = 0; p < 2 * kap; ++p)
                for (int q = 0; q < 2 * kap; ++q) {
                    if ((p + q) % 2 == 0) continue;
                    TorusPoint t(Rat(p, 2 * kap), Rat(q, 2 * kap));
                    mu.add(t, c * detail::jxy_sq(t), WeightTag::grid);
                }
            break;
        }
        case Model::E3:
        case Model::E3M: {
            // Grid coefficient 3/32pi^2: the printed 1/384pi^2 drops the
            // factor 36 present in its own derivation (detected erratum).
            double dcoef = (model == Model::E3) ? 1.0 / (48 * kPi2) : 1.0 / (24 * kPi2);
            add_scaled(mu, d8_orbit_measure(Rat(1, 12), Rat(2, 12)), dcoef, detail::abs_jxy,
                       WeightTag::orbit);
            add_scaled(mu, d8_orbit_measure(Rat(1, 12), Rat(4, 12)), dcoef, detail::abs_jxy,
                       WeightTag::orbit);
            add_scaled(mu, dirac_grid(6), 3.0 / (32 * kPi2), detail::abs_jxy, WeightTag::grid);
            break;
        }
        case Model::E7:
        case Model::E7M: {
            // E7M: the printed coefficient 1/80pi^2 halves every table weight;
            // 1/40pi^2 restores mass 1 (detected erratum, cf. the E3M doubling).
            double dcoef = (model == Model::E7) ? 1.0 / (80 * kPi2) : 1.0 / (40 * kPi2);
            for (auto seed : {std::pair{1, 2}, {1, 8}, {3, 6}, {3, 4}})
                add_scaled(mu, d8_orbit_measure(Rat(seed.first, 20), Rat(seed.second, 20)),
                           dcoef, detail::abs_jxy, WeightTag::orbit);
            if (model == Model::E7)
                add_scaled(mu, d8_orbit_measure(Rat(2, 20), Rat(6, 20)), 2 * dcoef,
                           detail::abs_jxy, WeightTag::orbit);
            break;
        }
        case Model::E8: {
            // J_yz in the E8 section is half the section-2 Jacobian, so the
            // printed 1/1936pi^4 becomes 1/7744pi^4 here. The printed
            // coefficient 2 on the (2/22,7/22) orbit would double-count that
            // exponent pair (J_yz^2 is already equal on both seeds), and the
            // printed b weights 11 b_i are replaced by 1/(11 b_i) (mass 5/11
            // by Vieta, complementing the a-part mass 6/11).
            auto jyz_sq = [](const TorusPoint& p) {
                double j = jacobian_yz(p);
                return j * j;
            };
            for (auto seed : {std::pair{1, 2}, {3, 4}, {1, 6}, {2, 7}, {3, 6}})
                add_scaled(mu, d8_orbit_measure(Rat(seed.first, 22), Rat(seed.second, 22)),
                           1.0 / (7744 * kPi4), jyz_sq, WeightTag::orbit);
            const auto& br = e8_quintic_b();  // ascending: b5..b1
            const std::pair<int, int> bseeds[5] = {{1, 10}, {3, 8}, {5, 6}, {4, 7}, {2, 9}};
            const double bvals[5] = {br[4], br[3], br[2], br[1], br[0]};
            for (int i = 0; i < 5; ++i) {
                AtomicMeasure2 d = d8_orbit_measure(Rat(bseeds[i].first, 22),
                                                    Rat(bseeds[i].second, 22));
                for (const auto& a : d.atoms)
                    mu.add(a.p, a.weight / (11 * bvals[i]), WeightTag::orbit);
            }
            break;
        }
        case Model::E12: {
            for (auto seed : {std::pair{1, 2}, {1, 8}, {2, 11}, {4, 7}})
                add_scaled(mu, d8_orbit_measure(Rat(seed.first, 30), Rat(seed.second, 30)),
                           1.0 / (60 * kPi2), detail::abs_jxy, WeightTag::orbit);
            add_scaled(mu, dirac_grid(6), 1.0 / (8 * kPi2), detail::abs_jxy, WeightTag::grid);
            break;
        }
    }
    return M;
}

// k -> infinity limit of the A_k measures: absolutely continuous with density
// J_xy^2 / 128 pi^4 (the reduced Haar measure pulled back to T^2).
inline Measure2 measure_a_infinity(int grid = 400) {
    Measure2 M;
    M.model = "A_infinity";
    M.is_density = true;
    M.dens.density = [](double t1, double t2) {
        double j = jacobian_xy(t1, t2);
        return j * j / (128 * kPi4);
    };
    M.dens.grid = grid;
    return M;
}

inline double measure_cross_moment(const Measure2& mu, GenPair pair, int m, int n) {
    FundRep u1 = (pair == GenPair::xy) ? FundRep::x : FundRep::y;
    FundRep u2 = (pair == GenPair::xy) ? FundRep::y : FundRep::z;
    if (!mu.is_density) {
        double s = 0;
        for (const auto& a : mu.atomic.atoms) {
            double t1 = a.p.d1(), t2 = a.p.d2();
            s += a.weight * std::pow(char_fund(u1, t1, t2), m)
               * std::pow(char_fund(u2, t1, t2), n);
        }
        return s;
    }
    int N = mu.dens.grid;
    double s = 0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            double t1 = static_cast<double>(i) / N, t2 = static_cast<double>(j) / N;
            s += mu.dens.density(t1, t2) * std::pow(char_fund(u1, t1, t2), m)
               * std::pow(char_fund(u2, t1, t2), n);
        }
    return s / (static_cast<double>(N) * N);
}

}  // namespace rank2
