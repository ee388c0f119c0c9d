#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rank2/weyl.hpp"

namespace rank2 {

// Complete elliptic integrals in the parameter-m convention
// K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt, via the AGM.
inline double ellip_K(double m) {
    if (m < 0 || m >= 1) {
        if (m == 1) throw std::domain_error("K(1) diverges");
        throw std::domain_error("elliptic parameter outside [0,1)");
    }
    double a = 1.0, b = std::sqrt(1.0 - m);
    // quadratic convergence: well past double precision in a few steps
    for (int i = 0; i < 40 && a - b > 4e-16 * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return kPi / (2 * a);
}

inline double ellip_E(double m) {
    if (m < 0 || m > 1) throw std::domain_error("elliptic parameter outside [0,1]");
    if (m == 1) return 1.0;
    double a = 1.0, b = std::sqrt(1.0 - m), c = std::sqrt(m);
    double sum = c * c / 2, pow2 = 1.0;
    for (int i = 0; i < 40 && std::abs(c) > 1e-17; ++i) {
        double an = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2;
        sum += pow2 * c * c / 2;
    }
    return kPi / (2 * a) * (1 - sum);
}

// Truncated hypergeometric series for K, used as an independent oracle.
inline double ellip_K_series(double m, int terms = 200) {
    double s = 0, coef = 1;  // ((2n)! / (2^2n (n!)^2))^2 m^n
    for (int n = 0; n < terms; ++n) {
        s += coef * coef * std::pow(m, n);
        double r = (2.0 * n + 1) / (2.0 * n + 2);
        coef *= r;
    }
    return kPi / 2 * s;
}

namespace detail {

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
        return left + right + (left + right - whole) / 15;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1)
         + adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-9, int depth = 28) {
    if (b <= a) return 0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

}  // namespace detail

// Integral of f over [a,b] with inverse-square-root behavior allowed at both
// endpoints: substitute t = a + s^2 (mirrored at b) on each half.
inline double integrate_sqrt_ends(const std::function<double(double)>& f, double a, double b,
                                  double tol = 1e-9) {
    if (b <= a) return 0;
    double m = 0.5 * (a + b);
    auto guard = [&f](double t) {
        // integrable endpoint singularities: drop non-finite samples, which
        // the s^2 substitution weights by 2s -> 0 anyway
        double v;
        try {
            v = f(t);
        } catch (const std::exception&) {
            return 0.0;
        }
        return std::isfinite(v) ? v : 0.0;
    };
    auto left = [&](double s) { return 2 * s * guard(a + s * s); };
    auto right = [&](double s) { return 2 * s * guard(b - s * s); };
    double L = std::sqrt(m - a);
    return detail::adaptive_simpson(left, 0, L, tol / 2)
         + detail::adaptive_simpson(right, 0, std::sqrt(b - m), tol / 2);
}

namespace detail {

// 16-point Gauss-Legendre nodes/weights on [-1,1].
inline const std::array<double, 16>& gl16_nodes() {
    static const std::array<double, 16> x = {
        -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
        -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
        0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
        0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
    return x;
}
inline const std::array<double, 16>& gl16_weights() {
    static const std::array<double, 16> w = {
        0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
        0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550686,
        0.1894506104550686, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
        0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};
    return w;
}

inline double gl16_panel(const std::function<double(double)>& f, double a, double b) {
    const auto& xs = gl16_nodes();
    const auto& ws = gl16_weights();
    double c = 0.5 * (a + b), h = 0.5 * (b - a), s = 0;
    for (int i = 0; i < 16; ++i) s += ws[i] * f(c + h * xs[i]);
    return s * h;
}

// Fixed quadrature with t = a + s^2 endpoint substitution and panels graded
// geometrically toward the endpoints: robust for inverse-square-root and
// logarithmic endpoint singularities, and (being non-adaptive) insensitive to
// small noise in the integrand, which matters when the density is itself an
// inner quadrature.
inline double integrate_graded(const std::function<double(double)>& f, double a, double b) {
    if (b <= a) return 0;
    auto guard = [&f](double t) {
        double v;
        try {
            v = f(t);
        } catch (const std::exception&) {
            return 0.0;
        }
        return std::isfinite(v) ? v : 0.0;
    };
    double mid = 0.5 * (a + b), s = 0;
    for (int half = 0; half < 2; ++half) {
        double e = (half == 0) ? a : b;
        double sign = (half == 0) ? 1.0 : -1.0;
        auto g = [&](double u) { return 2 * u * guard(e + sign * u * u); };
        double L = std::sqrt(0.5 * (b - a)), edge = L;
        for (int j = 0; j < 10; ++j) {  // panels L/2^10 .. L, graded to u = 0
            double inner = edge / 2;
            s += gl16_panel(g, inner, edge);
            edge = inner;
        }
        s += gl16_panel(g, 0, edge);
        (void)mid;
    }
    return s;
}

}  // namespace detail

// One-dimensional spectral weight on an interval, with interior breakpoints
// at density kinks or singularities.
struct Weight1D {
    double lo = 0, hi = 0;
    std::vector<double> breakpoints;
    std::function<double(double)> density;

    double integrate(const std::function<double(double)>& f) const {
        std::vector<double> cuts{lo};
        for (double b : breakpoints) cuts.push_back(b);
        cuts.push_back(hi);
        double s = 0;
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            s += detail::integrate_graded([&](double t) { return f(t) * density(t); }, cuts[i],
                                          cuts[i + 1]);
        return s;
    }
    double mass() const {
        return integrate([](double) { return 1.0; });
    }
    double moment(int m) const {
        return integrate([m](double t) { return std::pow(t, m); });
    }
};

namespace detail {

inline double v_of(double x) {
    double d = (x - 4);
    return (x + 4) * (x + 4) / (d * d);
}

// Lebesgue pushforward weight on I_x = [-4,4].
inline double weight_t2_x(double x) {
    if (x <= -4 || x >= 4) return 0;
    if (x <= 0) return 4 / (kPi2 * (4 - x)) * ellip_K(v_of(x));
    return 4 / (kPi2 * (x + 4)) * ellip_K(1 / v_of(x));
}

// y-slice of the domain D_xy at fixed z-level, for the z weights.
inline std::vector<std::pair<double, double>> yz_slice(double z) {
    double top = (z + 5) / 3;
    if (z <= 1) return {{-z - 1, top}};
    double r = 2 * std::sqrt(z - 1);
    if (z <= 2) return {{-z - 1, -1 - r}, {-1 + r, top}};
    return {{-1 + r, top}};
}

inline double abs_jyz_yz(double y, double z) {
    auto f = domain_factors_yz(y, z);
    double p = std::max(f[0], 0.0) * std::max(f[1], 0.0) * std::max(f[2], 0.0);
    return 8 * kPi2 * std::sqrt(p);
}

inline double abs_jxy_yz(double y, double z) {
    auto f = domain_factors_yz(y, z);
    double p = std::max(f[0], 0.0) * std::max(f[2], 0.0);
    return 4 * kPi2 * std::sqrt(p);
}

// Inner slice integral, split at y = -1 where the factor y^2+2y+5-4z attains
// its minimum: for z near 1 that is a near-singularity in the slice interior,
// and the graded panels only resolve endpoints.
inline double slice_integral(const std::function<double(double)>& f, double a, double b) {
    if (a < -1 && -1 < b) return integrate_graded(f, a, -1) + integrate_graded(f, -1, b);
    return integrate_graded(f, a, b);
}

inline double weight_t2_z(double z) {
    if (z <= -2 || z >= 10) return 0;
    double s = 0;
    for (auto [a, b] : yz_slice(z))
        s += 16 * slice_integral([z](double y) { return 1.0 / abs_jyz_yz(y, z); }, a, b);
    return s;
}

// Pushforward of the reduced Haar density |J_xy|/16pi^4 under z = x^2 - y - 1:
// dx = dz / (2 sqrt(z+y+1)) and the two x signs contribute equally, so the
// overall prefactor is 1/16pi^4 (the printed 1/8pi^4 yields mass 2).
inline double weight_haar_z(double z) {
    if (z <= -2 || z >= 10) return 0;
    double s = 0;
    for (auto [a, b] : yz_slice(z))
        s += slice_integral(
            [z](double y) { return abs_jxy_yz(y, z) / std::sqrt(std::max(z + y + 1, 0.0)); },
            a, b);
    return s / (16 * kPi4);
}

// Reduced Haar weight on I_x. The quartic-bracket closed form; the constant
// term of the odd cubic factor is 16, not the printed 12, which is required
// for the density to vanish at x = -4 and x = +4 (detected erratum, pinned
// against direct quadrature of the slice integral).
inline double weight_haar_x_closed(double x) {
    if (x <= -4 || x >= 4) return 0;
    if (x == 0) return 64 / (15 * kPi2);  // x K(v) -> 0 as v -> 1, E(1) = 1
    double quart = x * x * x * x + 224 * x * x + 256;
    double r;
    if (x < 0) {
        double v = v_of(x);
        r = kPi2 / 15 * (4 - x) * (quart * ellip_E(v) + 8 * x * (x * x - 24 * x + 16) * ellip_K(v));
    } else {
        double v = 1 / v_of(x);
        r = kPi2 / 15 * (x + 4) * (quart * ellip_E(v) - 8 * x * (x * x + 24 * x + 16) * ellip_K(v));
    }
    return r / (16 * kPi4);
}

inline double weight_haar_x_quad(double x) {
    if (x <= -4 || x >= 4) return 0;
    double lo = 2 * std::abs(x) - 3, hi = (x * x + 4) / 4;
    auto f = [x](double y) {
        auto g = domain_factors_xy(x, y);
        return 4 * kPi2 * std::sqrt(std::max(g[0], 0.0) * std::max(g[1], 0.0)
                                    * std::max(g[2], 0.0));
    };
    return integrate_sqrt_ends(f, lo, hi, 1e-10) / (16 * kPi4);
}

inline double weight_haar_y(double y) {
    if (y <= -3 || y >= 5) return 0;
    double quad = y * y + 22 * y - 7;
    double r;
    if (y <= 1) {
        double v = v_of(y - 1);
        r = 2 * kPi2 / 3 * (5 - y) * (16 * (1 - y) * ellip_K(v) + quad * ellip_E(v));
    } else {
        double v = 1 / v_of(y - 1);
        r = 2 * kPi2 / 3 * (y + 3) * (32 * (1 - y) * ellip_K(v) + quad * ellip_E(v));
    }
    return r / (16 * kPi4);
}

}  // namespace detail

enum class WeightFamily { T2, Haar };

inline Weight1D weight_T2(FundRep u) {
    Weight1D w;
    switch (u) {
        case FundRep::x:
            w = {-4, 4, {0}, [](double x) { return detail::weight_t2_x(x); }};
            break;
        case FundRep::y:
            w = {-3, 5, {1}, [](double y) { return detail::weight_t2_x(y - 1); }};
            break;
        default:
            w = {-2, 10, {1, 2}, [](double z) { return detail::weight_t2_z(z); }};
            break;
    }
    return w;
}

inline Weight1D weight_Haar(FundRep u) {
    Weight1D w;
    switch (u) {
        case FundRep::x:
            w = {-4, 4, {0}, [](double x) { return detail::weight_haar_x_closed(x); }};
            break;
        case FundRep::y:
            w = {-3, 5, {1}, [](double y) { return detail::weight_haar_y(y); }};
            break;
        default:
            w = {-2, 10, {1, 2}, [](double z) { return detail::weight_haar_z(z); }};
            break;
    }
    return w;
}

}  // namespace rank2
