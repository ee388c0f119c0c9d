#pragma once

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "rank2/verify.hpp"

namespace rank2 {

using json = nlohmann::ordered_json;

// Rationals are serialized as [numerator, denominator] pairs to keep
// round-trips exact.
inline json to_json(const Rat& r) { return json::array({r.numerator(), r.denominator()}); }

inline json to_json(const TorusPoint& p) {
    return json::array({p.t1.numerator(), p.t1.denominator(), p.t2.numerator(),
                        p.t2.denominator()});
}

inline json to_json(const LabeledGraph& g) {
    json j;
    j["group"] = (g.group == Group::Sp2) ? "Sp2" : "SO5";
    j["level"] = g.level;
    j["generator"] = (g.generator == FundRep::x) ? "x" : (g.generator == FundRep::y ? "y" : "z");
    json verts = json::array();
    for (const auto& w : g.vertices) verts.push_back(json::array({w.l1, w.l2}));
    j["vertices"] = verts;
    json edges = json::array();
    for (size_t i = 0; i < g.adj.size(); ++i)
        for (const auto& [t, mult] : g.adj[i])
            edges.push_back(json::array({static_cast<int>(i), t, mult}));
    j["edges"] = edges;
    return j;
}

inline json to_json(const SMatrix& M) {
    json j;
    j["k"] = M.k;
    j["kappa"] = M.kappa;
    json alc = json::array();
    for (const auto& w : M.alcove) alc.push_back(json::array({w.l1, w.l2}));
    j["alcove"] = alc;
    j["S"] = M.S;
    return j;
}

inline json to_json(const ExponentData& d) {
    json rows = json::array();
    for (const auto& e : d.entries) {
        json r;
        r["theta"] = to_json(e.theta);
        r["mult"] = e.mult;
        r["weight"] = e.weight;
        r["beta"] = json::array({e.bx, e.by, e.bz});
        rows.push_back(r);
    }
    json j;
    j["model"] = d.model;
    j["exponents"] = rows;
    return j;
}

inline json to_json(const Measure2& mu) {
    json j;
    j["model"] = mu.model;
    if (mu.is_density) {
        j["type"] = "density";
        j["grid"] = mu.dens.grid;
        return j;
    }
    j["type"] = "atomic";
    json atoms = json::array();
    for (const auto& a : mu.atomic.atoms) {
        json r;
        r["theta"] = to_json(a.p);
        r["weight"] = a.weight;
        atoms.push_back(r);
    }
    j["atoms"] = atoms;
    return j;
}

inline json to_json(const Check& c) {
    json j;
    j["check-id"] = c.id;
    j["model"] = c.model;
    j["parameters"] = c.params;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["abs-error"] = c.abs_error;
    j["tolerance"] = c.tolerance;
    j["status"] = c.status;
    return j;
}

inline json to_json(const CheckList& cs) {
    json j = json::array();
    for (const auto& c : cs) j.push_back(to_json(c));
    return j;
}

inline std::string report_csv(const CheckList& cs) {
    std::string out = "check-id,model,parameters,lhs,rhs,abs-error,tolerance,status\n";
    char buf[256];
    for (const auto& c : cs) {
        std::snprintf(buf, sizeof(buf), "%s,%s,\"%s\",%.17g,%.17g,%.3g,%.3g,%s\n", c.id.c_str(),
                      c.model.c_str(), c.params.c_str(), c.lhs, c.rhs, c.abs_error, c.tolerance,
                      c.status.c_str());
        out += buf;
    }
    return out;
}

inline std::string weight_csv(const Weight1D& w, int samples) {
    std::string out = "u,weight\n";
    char buf[80];
    for (int i = 0; i < samples; ++i) {
        double t = w.lo + (w.hi - w.lo) * i / (samples - 1.0);
        double d;
        try {
            d = w.density(t);
        } catch (const std::exception&) {
            d = 0;
        }
        if (!std::isfinite(d)) d = 0;
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", t, d);
        out += buf;
    }
    return out;
}

inline void write_text(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << body;
}

}  // namespace rank2
