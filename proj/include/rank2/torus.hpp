#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace rank2 {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<long long>;

inline Rat mod1(Rat r) {
    long long n = r.numerator(), d = r.denominator();
    long long m = n % d;
    if (m < 0) m += d;
    return Rat(m, d);
}

// Exact rational angle pair (theta1, theta2) in [0,1)^2, i.e. the torus point
// (e^{2 pi i theta1}, e^{2 pi i theta2}).
struct TorusPoint {
    Rat t1, t2;
    TorusPoint() : t1(0), t2(0) {}
    TorusPoint(Rat a, Rat b) : t1(mod1(a)), t2(mod1(b)) {}
    bool operator==(const TorusPoint& o) const { return t1 == o.t1 && t2 == o.t2; }
    bool operator<(const TorusPoint& o) const {
        if (t1 != o.t1) return t1 < o.t1;
        return t2 < o.t2;
    }
    double d1() const { return boost::rational_cast<double>(t1); }
    double d2() const { return boost::rational_cast<double>(t2); }
};

// Dynkin labels (l1,l2); partition labels are (mu1,mu2) = (l1+l2, l2).
struct Weight {
    int l1 = 0, l2 = 0;
    Weight() = default;
    Weight(int a, int b) : l1(a), l2(b) {
        if (a < 0 || b < 0) throw std::invalid_argument("negative Dynkin label");
    }
    std::array<int, 2> partition() const { return {l1 + l2, l2}; }
    static Weight from_partition(int m1, int m2) {
        if (m2 < 0 || m1 < m2) throw std::invalid_argument("invalid partition");
        return Weight(m1 - m2, m2);
    }
    bool operator==(const Weight& o) const { return l1 == o.l1 && l2 == o.l2; }
    bool operator<(const Weight& o) const {
        if (l1 != o.l1) return l1 < o.l1;
        return l2 < o.l2;
    }
};

// Finitely supported map Z^2 -> big integer; characters as trigonometric
// (Laurent) polynomials in (omega1, omega2).
class LaurentPoly2 {
  public:
    using Key = std::array<int, 2>;
    std::map<Key, BigInt> c;

    void add(const Key& k, const BigInt& v) {
        if (v == 0) return;
        auto it = c.find(k);
        if (it == c.end()) {
            c.emplace(k, v);
        } else {
            it->second += v;
            if (it->second == 0) c.erase(it);
        }
    }

    LaurentPoly2& operator+=(const LaurentPoly2& o) {
        for (const auto& [k, v] : o.c) add(k, v);
        return *this;
    }
    LaurentPoly2& sub(const LaurentPoly2& o, const BigInt& scale = 1) {
        for (const auto& [k, v] : o.c) add(k, -scale * v);
        return *this;
    }
    LaurentPoly2 operator*(const LaurentPoly2& o) const {
        LaurentPoly2 r;
        for (const auto& [k1, v1] : c)
            for (const auto& [k2, v2] : o.c)
                r.add({k1[0] + k2[0], k1[1] + k2[1]}, v1 * v2);
        return r;
    }
    LaurentPoly2 pow(int m) const {
        LaurentPoly2 r = one();
        for (int i = 0; i < m; ++i) r = r * (*this);
        return r;
    }
    static LaurentPoly2 one() {
        LaurentPoly2 r;
        r.add({0, 0}, 1);
        return r;
    }
    BigInt constant_term() const {
        auto it = c.find({0, 0});
        return it == c.end() ? BigInt(0) : it->second;
    }
    BigInt sum_coeffs() const {
        BigInt s = 0;
        for (const auto& [k, v] : c) s += v;
        return s;
    }
    std::complex<double> eval(double t1, double t2) const {
        static constexpr double two_pi = 6.283185307179586476925;
        std::complex<double> s = 0.0;
        for (const auto& [k, v] : c) {
            double ph = two_pi * (k[0] * t1 + k[1] * t2);
            s += static_cast<double>(v) * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        return s;
    }
    std::complex<double> eval(const TorusPoint& p) const { return eval(p.d1(), p.d2()); }
};

enum class FundRep { x, y, z };  // dims 4, 5, 10

inline const LaurentPoly2& char_fund_poly(FundRep u) {
    static const LaurentPoly2 px = [] {
        LaurentPoly2 p;
        p.add({1, 0}, 1); p.add({-1, 0}, 1); p.add({0, 1}, 1); p.add({0, -1}, 1);
        return p;
    }();
    static const LaurentPoly2 py = [] {
        LaurentPoly2 p;
        p.add({0, 0}, 1);
        p.add({1, 1}, 1); p.add({-1, -1}, 1); p.add({1, -1}, 1); p.add({-1, 1}, 1);
        return p;
    }();
    static const LaurentPoly2 pz = [] {
        LaurentPoly2 p;
        p.add({0, 0}, 2);
        p.add({2, 0}, 1); p.add({-2, 0}, 1); p.add({0, 2}, 1); p.add({0, -2}, 1);
        p.add({1, 1}, 1); p.add({-1, -1}, 1); p.add({1, -1}, 1); p.add({-1, 1}, 1);
        return p;
    }();
    switch (u) {
        case FundRep::x: return px;
        case FundRep::y: return py;
        default: return pz;
    }
}

inline double char_fund(FundRep u, double t1, double t2) {
    static constexpr double two_pi = 6.283185307179586476925;
    switch (u) {
        case FundRep::x:
            return 2 * std::cos(two_pi * t1) + 2 * std::cos(two_pi * t2);
        case FundRep::y:
            return 1 + 2 * std::cos(two_pi * (t1 + t2)) + 2 * std::cos(two_pi * (t1 - t2));
        default: {
            double x = char_fund(FundRep::x, t1, t2);
            double y = char_fund(FundRep::y, t1, t2);
            return x * x - y - 1;
        }
    }
}

inline double char_fund(FundRep u, const TorusPoint& p) { return char_fund(u, p.d1(), p.d2()); }

// Weyl dimension of the C2 irrep with partition labels (m1,m2).
inline long long weyl_dim(int m1, int m2) {
    return static_cast<long long>(m1 - m2 + 1) * (m2 + 1) * (m1 + 2) * (m1 + m2 + 3) / 6;
}

namespace detail {

// chi_{(m1,m2)} in partition labels via the fundamental product rules:
//   chi_{(1,1)} chi_{(a,b)} = chi_{(a+1,b+1)} + chi_{(a-1,b-1)} + chi_{(a+1,b-1)}
//                           + chi_{(a-1,b+1)} + [a != b] chi_{(a,b)}
//   chi_{(1,0)} chi_{(a,0)} = chi_{(a+1,0)} + chi_{(a-1,0)} + chi_{(a,1)}
// with chi = 0 whenever m2 < 0 or m1 < m2.
inline const LaurentPoly2& char_partition(int m1, int m2) {
    static const LaurentPoly2 zero;
    static std::map<std::array<int, 2>, LaurentPoly2> memo;
    static std::mutex mu;
    if (m2 < 0 || m1 < m2) return zero;

    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({m1, m2});
    if (it != memo.end()) return it->second;

    std::function<const LaurentPoly2&(int, int)> get = [&](int a, int b) -> const LaurentPoly2& {
        if (b < 0 || a < b) return zero;
        auto mit = memo.find({a, b});
        if (mit != memo.end()) return mit->second;
        LaurentPoly2 r;
        if (a == 0 && b == 0) {
            r = LaurentPoly2::one();
        } else if (a == 1 && b == 0) {
            r = char_fund_poly(FundRep::x);
        } else if (a == 1 && b == 1) {
            r = char_fund_poly(FundRep::y);
        } else if (b >= 1) {
            r = char_fund_poly(FundRep::y) * get(a - 1, b - 1);
            r.sub(get(a - 2, b - 2));
            r.sub(get(a, b - 2));
            r.sub(get(a - 2, b));
            if (a - 1 != b - 1) r.sub(get(a - 1, b - 1));
        } else {
            r = char_fund_poly(FundRep::x) * get(a - 1, 0);
            r.sub(get(a - 2, 0));
            r.sub(get(a - 1, 1));
        }
        return memo.emplace(std::array<int, 2>{a, b}, std::move(r)).first->second;
    };
    return get(m1, m2);
}

}  // namespace detail

inline const LaurentPoly2& char_general(const Weight& w) {
    auto mu = w.partition();
    return detail::char_partition(mu[0], mu[1]);
}

// Independent oracle: symplectic Weyl character formula as a 2x2 determinant
// ratio, valid away from the vanishing locus of the denominator.
inline double char_weyl_oracle(const Weight& w, double t1, double t2) {
    static constexpr double two_pi = 6.283185307179586476925;
    auto mu = w.partition();
    double a1 = mu[0] + 2, a2 = mu[1] + 1;
    double num = std::sin(two_pi * a1 * t1) * std::sin(two_pi * a2 * t2)
               - std::sin(two_pi * a2 * t1) * std::sin(two_pi * a1 * t2);
    double den = std::sin(two_pi * 2 * t1) * std::sin(two_pi * t2)
               - std::sin(two_pi * t1) * std::sin(two_pi * 2 * t2);
    return num / den;
}

}  // namespace rank2
