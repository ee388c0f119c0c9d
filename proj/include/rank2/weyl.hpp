#pragma once

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "rank2/torus.hpp"

namespace rank2 {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kPi2 = kPi * kPi;
inline constexpr double kPi4 = kPi2 * kPi2;

// 2x2 integer matrix acting on angle coordinates modulo 1.
struct D8Element {
    int a11, a12, a21, a22;
    bool operator<(const D8Element& o) const {
        if (a11 != o.a11) return a11 < o.a11;
        if (a12 != o.a12) return a12 < o.a12;
        if (a21 != o.a21) return a21 < o.a21;
        return a22 < o.a22;
    }
    D8Element operator*(const D8Element& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
};

inline const std::vector<D8Element>& d8_elements() {
    static const std::vector<D8Element> elems = [] {
        const D8Element t2{0, 1, 1, 0};   // swap
        const D8Element t4{0, 1, -1, 0};  // quarter turn
        std::set<D8Element> s{{1, 0, 0, 1}};
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<D8Element> next = s;
            for (const auto& g : s)
                for (const auto& h : {t2, t4})
                    if (next.insert(g * h).second) grew = true;
            s = next;
        }
        if (s.size() != 8) throw std::logic_error("D8 closure size != 8");
        return std::vector<D8Element>(s.begin(), s.end());
    }();
    return elems;
}

inline TorusPoint d8_act(const D8Element& g, const TorusPoint& p) {
    return TorusPoint(g.a11 * p.t1 + g.a12 * p.t2, g.a21 * p.t1 + g.a22 * p.t2);
}

inline std::set<TorusPoint> d8_orbit(const TorusPoint& p) {
    std::set<TorusPoint> o;
    for (const auto& g : d8_elements()) o.insert(d8_act(g, p));
    return o;
}

// Jacobian of (theta1,theta2) -> (x,y), theta form.
inline double jacobian_xy(double t1, double t2) {
    const double w = 2 * kPi;
    return 8 * kPi2 * (std::cos(w * (t1 + 2 * t2)) + std::cos(w * (2 * t1 - t2))
                       - std::cos(w * (2 * t1 + t2)) - std::cos(w * (t1 - 2 * t2)));
}
inline double jacobian_xy(const TorusPoint& p) { return jacobian_xy(p.d1(), p.d2()); }

// Same Jacobian as a sine product. The level-dependent constant printed with
// this factorization does not cancel to the theta form; the coefficient below
// is fixed against the theta form (detected erratum).
inline double jacobian_xy_sine(double t1, double t2) {
    const double w = 2 * kPi;
    return -64 * kPi2 * std::sin(w * t1) * std::sin(w * t2)
         * std::sin(kPi * (t1 + t2)) * std::sin(kPi * (t1 - t2));
}

// Jacobian of (theta1,theta2) -> (y,z), theta form; satisfies
// |J_yz| = 2 sqrt(z+y+1) |J_xy|.
inline double jacobian_yz(double t1, double t2) {
    const double w = 2 * kPi;
    return 16 * kPi2 * (std::cos(w * (t1 - 3 * t2)) + std::cos(w * (3 * t1 + t2))
                        - std::cos(w * (t1 + 3 * t2)) - std::cos(w * (3 * t1 - t2)));
}
inline double jacobian_yz(const TorusPoint& p) { return jacobian_yz(p.d1(), p.d2()); }

inline double jacobian_yz_sine(double t1, double t2) {
    const double w = 2 * kPi;
    return 128 * kPi2 * std::sin(w * t1) * std::sin(w * t2)
         * std::sin(w * (t1 + t2)) * std::sin(w * (t1 - t2));
}

struct DomainPointXY {
    double x, y;
};
struct DomainPointYZ {
    double y, z;
};

// Signed factors of J_xy^2/16pi^4; all nonnegative on the domain D_xy.
inline std::array<double, 3> domain_factors_xy(double x, double y) {
    return {y + 2 * x + 3, y - 2 * x + 3, x * x + 4 - 4 * y};
}
// Signed factors of J_yz^2/64pi^4; all nonnegative on the domain D_yz.
inline std::array<double, 3> domain_factors_yz(double y, double z) {
    return {z - 3 * y + 5, z + y + 1, y * y + 2 * y + 5 - 4 * z};
}

inline bool in_domain_xy(double x, double y, double tol = 1e-9) {
    for (double f : domain_factors_xy(x, y))
        if (f < -tol) return false;
    return true;
}
inline bool in_domain_yz(double y, double z, double tol = 1e-9) {
    for (double f : domain_factors_yz(y, z))
        if (f < -tol) return false;
    return true;
}

// |J_xy| as a function of (x,y). The last factor is (x^2+4-4y): the printed
// factorization has it with the opposite sign, which is negative on interior
// points (detected erratum, pinned by the theta-form oracle).
inline double jacobian_xy_from_xy(const DomainPointXY& q) {
    auto f = domain_factors_xy(q.x, q.y);
    double prod = 1;
    for (double v : f) {
        if (v < -1e-9) throw std::domain_error("point outside D_xy");
        prod *= std::max(v, 0.0);
    }
    return 4 * kPi2 * std::sqrt(prod);
}

inline double jacobian_yz_from_yz(const DomainPointYZ& q) {
    auto f = domain_factors_yz(q.y, q.z);
    double prod = 1;
    for (double v : f) {
        if (v < -1e-9) throw std::domain_error("point outside D_yz");
        prod *= std::max(v, 0.0);
    }
    return 8 * kPi2 * std::sqrt(prod);
}

// |J_xy| expressed in (y,z) coordinates (uses x^2 = z + y + 1).
inline double jacobian_xy_from_yz(const DomainPointYZ& q) {
    double f1 = q.z - 3 * q.y + 5;
    double f2 = q.y * q.y + 2 * q.y + 5 - 4 * q.z;
    if (f1 < -1e-9 || f2 < -1e-9) throw std::domain_error("point outside D_yz");
    return 4 * kPi2 * std::sqrt(std::max(f1, 0.0) * std::max(f2, 0.0));
}

inline DomainPointXY psi_map_xy(const TorusPoint& p) {
    return {char_fund(FundRep::x, p), char_fund(FundRep::y, p)};
}
inline DomainPointYZ psi_map_yz(const TorusPoint& p) {
    return {char_fund(FundRep::y, p), char_fund(FundRep::z, p)};
}

// Canonical orbit representative: lexicographically least point of the orbit.
inline TorusPoint orbit_canonical(const TorusPoint& p) { return *d8_orbit(p).begin(); }
inline bool in_fundamental_domain(const TorusPoint& p) { return orbit_canonical(p) == p; }

}  // namespace rank2
