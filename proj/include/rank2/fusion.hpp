#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "rank2/torus.hpp"

namespace rank2 {

using StepSet = std::map<std::array<int, 2>, int>;

inline StepSet unfolded_step_set(FundRep u) {
    StepSet s;
    for (const auto& [k, v] : char_fund_poly(u).c) s[k] = static_cast<int>(v);
    return s;
}

namespace detail {

inline BigInt factorial(int n) {
    static std::vector<BigInt> cache{1};
    while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * (int)cache.size());
    return cache[n];
}

inline BigInt multinomial(std::initializer_list<int> parts) {
    int total = 0;
    for (int p : parts) total += p;
    BigInt r = factorial(total);
    for (int p : parts) r /= factorial(p);
    return r;
}

}  // namespace detail

// phi((v^u)^m) by the closed multinomial formulas.
inline BigInt moment_multinomial(FundRep u, int m) {
    using detail::multinomial;
    BigInt total = 0;
    switch (u) {
        case FundRep::x: {
            if (m % 2) return 0;
            for (int k = 0; k <= m / 2; ++k)
                total += multinomial({k, k, m / 2 - k, m / 2 - k});
            return total;
        }
        case FundRep::y: {
            for (int k1 = 0; 2 * k1 <= m; ++k1)
                for (int k3 = 0; 2 * k1 + 2 * k3 <= m; ++k3)
                    total += multinomial({k1, k1, k3, k3, m - 2 * k1 - 2 * k3});
            return total;
        }
        default: {
            // Ten-part multinomial over the z step multiset with the two
            // diagonal counts p1, p2 eliminated by the closure constraints.
            for (int k1 = 0; k1 <= m; ++k1)
                for (int k2 = 0; k1 + k2 <= m; ++k2)
                    for (int k3 = 0; k1 + k2 + k3 <= m; ++k3)
                        for (int k4 = 0; k1 + k2 + k3 + k4 <= m; ++k4)
                            for (int k5 = 0; k1 + k2 + k3 + k4 + k5 <= m; ++k5)
                                for (int k6 = 0; k1 + k2 + k3 + k4 + k5 + k6 <= m; ++k6) {
                                    int p1 = k1 - k2 + k3 - k4 + k5;
                                    int p2 = k1 - k2 - k3 + k4 + k6;
                                    if (p1 < 0 || p2 < 0) continue;
                                    int used = k1 + k2 + k3 + k4 + k5 + k6 + p1 + p2;
                                    for (int k9 = 0; used + k9 <= m; ++k9) {
                                        int last = m - used - k9;
                                        total += multinomial(
                                            {k1, k2, k3, k4, k5, k6, p1, p2, k9, last});
                                    }
                                }
            return total;
        }
    }
}

namespace detail {

// Dense DP table over a bounding box of Z^2 with big-integer counts.
class WalkTable {
  public:
    explicit WalkTable(int radius) : r_(radius), n_(2 * radius + 1), v_(n_ * n_) {}
    BigInt& at(int a, int b) { return v_[(a + r_) * n_ + (b + r_)]; }
    const BigInt& at(int a, int b) const { return v_[(a + r_) * n_ + (b + r_)]; }
    int radius() const { return r_; }

    WalkTable step(const StepSet& s) const {
        WalkTable out(r_);
        for (int a = -r_; a <= r_; ++a)
            for (int b = -r_; b <= r_; ++b) {
                const BigInt& c = at(a, b);
                if (c == 0) continue;
                for (const auto& [d, mult] : s) {
                    int na = a + d[0], nb = b + d[1];
                    if (na < -r_ || na > r_ || nb < -r_ || nb > r_) continue;
                    out.at(na, nb) += c * mult;
                }
            }
        return out;
    }

  private:
    int r_, n_;
    std::vector<BigInt> v_;
};

}  // namespace detail

// Closed-walk count on Z^2: number of length-m step sequences from the origin
// back to the origin. Independent of the Laurent constant-term oracle.
inline BigInt cross_moment_walk_dp(FundRep u1, FundRep u2, int m, int n) {
    int radius = 2 * (m + n) + 2;
    detail::WalkTable t(radius);
    t.at(0, 0) = 1;
    StepSet s1 = unfolded_step_set(u1), s2 = unfolded_step_set(u2);
    for (int i = 0; i < n; ++i) t = t.step(s2);
    for (int i = 0; i < m; ++i) t = t.step(s1);
    return t.at(0, 0);
}

inline BigInt moment_walk_dp(FundRep u, int m) { return cross_moment_walk_dp(u, u, m, 0); }

enum class Group { Sp2, SO5 };

// Fusion-generator adjacency on the level-k alcove, vertices in partition
// labels (mu1, mu2).
struct LabeledGraph {
    Group group;
    int level;
    FundRep generator;
    std::vector<Weight> vertices;  // Dynkin labels
    std::vector<std::map<int, int>> adj;
    int origin = -1;

    int index_of(const Weight& w) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == w) return static_cast<int>(i);
        return -1;
    }
};

namespace detail {

inline bool valid_partition(int m1, int m2) { return m2 >= 0 && m1 >= m2; }

// Fusion branches of chi_{(1,0)}, chi_{(1,1)}, chi_{(2,0)} against chi_{(m1,m2)}
// in partition labels (validated against exact character decompositions).
inline std::vector<std::array<int, 2>> fusion_terms(FundRep u, int m1, int m2) {
    std::vector<std::array<int, 2>> t;
    switch (u) {
        case FundRep::x:
            t = {{m1 + 1, m2}, {m1 - 1, m2}, {m1, m2 + 1}, {m1, m2 - 1}};
            break;
        case FundRep::y:
            t = {{m1 + 1, m2 + 1}, {m1 - 1, m2 - 1}, {m1 + 1, m2 - 1}, {m1 - 1, m2 + 1}};
            if (m1 != m2) t.push_back({m1, m2});
            break;
        default:
            if (m1 == 0 && m2 == 0) {
                t = {{2, 0}};
            } else if (m1 == m2) {
                t = {{m1 + 2, m2}, {m1, m2 - 2}, {m1 + 1, m2 - 1}, {m1, m2}};
            } else if (m2 == 0) {
                t = {{m1 + 2, 0}, {m1 - 2, 0}, {m1, 2}, {m1 + 1, 1}, {m1 - 1, 1}, {m1, 0}};
            } else {
                t = {{m1 + 2, m2}, {m1 - 2, m2}, {m1, m2 + 2}, {m1, m2 - 2},
                     {m1 + 1, m2 + 1}, {m1 + 1, m2 - 1}, {m1 - 1, m2 + 1}, {m1 - 1, m2 - 1},
                     {m1, m2}, {m1, m2}};
            }
            break;
    }
    std::vector<std::array<int, 2>> out;
    for (auto& v : t)
        if (valid_partition(v[0], v[1])) out.push_back(v);
    return out;
}

}  // namespace detail

// A_k fusion graph. Sp2 alcove: mu1 <= k. SO5 (level-k C2 data relabeled
// through so(5) ~ sp(4)): even sublattice mu1+mu2 = 0 mod 2, mu1 <= k.
// The z generator additionally loses one self-loop on the affine wall
// mu1 = k (verified per level against the Verlinde oracle).
inline LabeledGraph a_graph(Group group, int k, FundRep u) {
    if (k < 1) throw std::invalid_argument("level must be >= 1");
    bool ok = (group == Group::Sp2) ? (u == FundRep::x || u == FundRep::y)
                                    : (u == FundRep::y || u == FundRep::z);
    if (!ok) throw std::invalid_argument("invalid generator for group");

    LabeledGraph g;
    g.group = group;
    g.level = k;
    g.generator = u;
    std::map<std::array<int, 2>, int> idx;
    for (int m1 = 0; m1 <= k; ++m1)
        for (int m2 = 0; m2 <= m1; ++m2) {
            if (group == Group::SO5 && (m1 + m2) % 2 != 0) continue;
            idx[{m1, m2}] = static_cast<int>(g.vertices.size());
            g.vertices.push_back(Weight::from_partition(m1, m2));
        }
    g.adj.resize(g.vertices.size());
    for (const auto& [mu, i] : idx) {
        auto terms = detail::fusion_terms(u, mu[0], mu[1]);
        bool wall_loop_removed = false;
        for (const auto& t : terms) {
            if (group == Group::SO5 && u == FundRep::z && mu[0] == k && t == mu
                && !wall_loop_removed) {
                wall_loop_removed = true;  // level truncation eats one self-loop
                continue;
            }
            auto it = idx.find(t);
            if (it != idx.end()) g.adj[i][it->second] += 1;
        }
    }
    g.origin = idx.at({0, 0});
    return g;
}

// <G1^m G2^n e_origin, e_origin> with exact big-integer arithmetic.
inline BigInt graph_cross_moment(const LabeledGraph& g1, const LabeledGraph& g2, int m, int n) {
    if (g1.vertices.size() != g2.vertices.size())
        throw std::invalid_argument("graph vertex sets differ");
    for (size_t i = 0; i < g1.vertices.size(); ++i)
        if (!(g1.vertices[i] == g2.vertices[i]))
            throw std::invalid_argument("graph vertex sets differ");

    std::vector<BigInt> v(g1.vertices.size());
    v[g1.origin] = 1;
    auto apply = [](const LabeledGraph& g, const std::vector<BigInt>& in) {
        std::vector<BigInt> out(in.size());
        for (size_t j = 0; j < in.size(); ++j) {
            if (in[j] == 0) continue;
            for (const auto& [i, mult] : g.adj[j]) out[i] += in[j] * mult;
        }
        return out;
    };
    for (int i = 0; i < n; ++i) v = apply(g2, v);
    for (int i = 0; i < m; ++i) v = apply(g1, v);
    return v[g1.origin];
}

inline BigInt graph_moment(const LabeledGraph& g, int m) { return graph_cross_moment(g, g, m, 0); }

}  // namespace rank2
