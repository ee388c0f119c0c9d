// Command-line front end: build fusion graphs, modular data, spectral
// measures and 1-D weights, run the verification suites, and emit JSON/CSV.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rank2/io.hpp"

using namespace rank2;

namespace {

FundRep parse_gen(const std::string& s) {
    if (s == "x") return FundRep::x;
    if (s == "y") return FundRep::y;
    if (s == "z") return FundRep::z;
    throw CLI::ValidationError("--generator", "must be one of x, y, z");
}

Model parse_model(const std::string& s) {
    if (s == "A_Sp2") return Model::A_Sp2;
    if (s == "A_SO5") return Model::A_SO5;
    if (s == "D") return Model::D;
    if (s == "E3") return Model::E3;
    if (s == "E3M") return Model::E3M;
    if (s == "E7") return Model::E7;
    if (s == "E7M") return Model::E7M;
    if (s == "E8") return Model::E8;
    if (s == "E12") return Model::E12;
    throw CLI::ValidationError("model", "unknown model " + s);
}

// flag > environment RANK2_SPECTRA_TOL > per-check default
std::optional<double> tolerance_override(const CLI::Option* tol_opt, double tol_flag) {
    if (tol_opt->count() > 0) return tol_flag;
    if (const char* env = std::getenv("RANK2_SPECTRA_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed RANK2_SPECTRA_TOL\n";
        }
    }
    return std::nullopt;
}

void apply_tolerance(CheckList& cs, const std::optional<double>& tol) {
    if (!tol) return;
    for (auto& c : cs) {
        bool documented = (c.status == "discrepancy-documented");
        c.tolerance = *tol;
        c.status = (c.abs_error <= c.tolerance) ? (documented ? "discrepancy-documented" : "pass")
                                                : "fail";
    }
}

void emit(const std::string& body, const std::string& out_path) {
    if (out_path.empty())
        std::cout << body;
    else
        write_text(out_path, body);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank2-spectra: fusion graphs, modular data and joint spectral measures"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path, format = "json";
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

    // graph
    auto* cg = app.add_subcommand("graph", "export a level-k fusion graph");
    cg->fallthrough();
    std::string g_group = "Sp2", g_gen = "x";
    int g_level = 3;
    cg->add_option("--group", g_group, "Sp2 or SO5")->check(CLI::IsMember({"Sp2", "SO5"}));
    cg->add_option("--level", g_level, "level k >= 1")->required();
    cg->add_option("--generator", g_gen, "x, y or z");

    // moments
    auto* cm = app.add_subcommand("moments", "moment oracle table");
    cm->fallthrough();
    std::string m_gen = "x", m_pair;
    int m_max = 6;
    cm->add_option("--generator", m_gen, "single generator x, y or z");
    cm->add_option("--pair", m_pair, "cross-moment pair xy or yz")
        ->check(CLI::IsMember({"xy", "yz"}));
    cm->add_option("--max-order", m_max, "maximum total order");

    // smatrix
    auto* cs = app.add_subcommand("smatrix", "export the level-k modular S matrix");
    cs->fallthrough();
    int s_level = 3;
    cs->add_option("--level", s_level, "level k >= 1")->required();

    // measure
    auto* cme = app.add_subcommand("measure", "export a joint spectral measure");
    cme->fallthrough();
    std::string me_model;
    int me_level = 0, me_grid = 400;
    cme->add_option("model", me_model,
                    "A_Sp2, A_SO5, D, E3, E3M, E7, E7M, E8, E12 or A_infinity")
        ->required();
    cme->add_option("--level", me_level, "level for the A/D series");
    cme->add_option("--grid", me_grid, "grid order for A_infinity");

    // weights
    auto* cw = app.add_subcommand("weights", "sample a 1-D pushforward weight as CSV");
    cw->fallthrough();
    std::string w_family = "T2", w_gen = "x";
    int w_samples = 801;
    cw->add_option("family", w_family, "T2 or Haar")->check(CLI::IsMember({"T2", "Haar"}));
    cw->add_option("--generator", w_gen, "x, y or z");
    cw->add_option("--grid", w_samples, "number of samples (>= 2)")->check(CLI::Range(2, 1 << 20));

    // verify
    auto* cv = app.add_subcommand("verify", "run a verification suite");
    cv->fallthrough();
    std::string v_suite = "all";
    double v_tol = 0;
    cv->add_option("suite", v_suite, "all, smatrix, a-series, d-series, exceptional, weights")
        ->check(CLI::IsMember({"all", "smatrix", "a-series", "d-series", "exceptional",
                               "weights"}));
    auto* tol_opt = cv->add_option("--tol", v_tol, "tolerance override for every check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cg) {
            Group grp = (g_group == "Sp2") ? Group::Sp2 : Group::SO5;
            emit(to_json(a_graph(grp, g_level, parse_gen(g_gen))).dump(2) + "\n", out_path);
        } else if (*cm) {
            if (!m_pair.empty()) {
                GenPair pr = (m_pair == "xy") ? GenPair::xy : GenPair::yz;
                FundRep u1 = (pr == GenPair::xy) ? FundRep::x : FundRep::y;
                FundRep u2 = (pr == GenPair::xy) ? FundRep::y : FundRep::z;
                json rows = json::array();
                std::string csv = "m,n,walk_dp,constant_term,agree\n";
                for (int m = 0; m <= m_max; ++m)
                    for (int n = 0; m + n <= m_max; ++n) {
                        BigInt dp = cross_moment_walk_dp(u1, u2, m, n);
                        BigInt ct = (char_fund_poly(u1).pow(m) * char_fund_poly(u2).pow(n))
                                        .constant_term();
                        json r;
                        r["m"] = m;
                        r["n"] = n;
                        r["walk_dp"] = dp.str();
                        r["constant_term"] = ct.str();
                        r["agree"] = (dp == ct);
                        rows.push_back(r);
                        csv += std::to_string(m) + "," + std::to_string(n) + "," + dp.str()
                             + "," + ct.str() + "," + (dp == ct ? "true" : "false") + "\n";
                    }
                emit(format == "csv" ? csv : rows.dump(2) + "\n", out_path);
            } else {
                FundRep u = parse_gen(m_gen);
                json rows = json::array();
                std::string csv = "m,multinomial,walk_dp,constant_term,agree\n";
                for (int m = 0; m <= m_max; ++m) {
                    BigInt a = moment_multinomial(u, m);
                    BigInt b = moment_walk_dp(u, m);
                    BigInt c = char_fund_poly(u).pow(m).constant_term();
                    bool agree = (a == b && a == c);
                    json r;
                    r["m"] = m;
                    r["multinomial"] = a.str();
                    r["walk_dp"] = b.str();
                    r["constant_term"] = c.str();
                    r["agree"] = agree;
                    rows.push_back(r);
                    csv += std::to_string(m) + "," + a.str() + "," + b.str() + "," + c.str()
                         + "," + (agree ? "true" : "false") + "\n";
                }
                emit(format == "csv" ? csv : rows.dump(2) + "\n", out_path);
            }
        } else if (*cs) {
            emit(to_json(smatrix(s_level)).dump(2) + "\n", out_path);
        } else if (*cme) {
            if (me_model == "A_infinity") {
                emit(to_json(measure_a_infinity(me_grid)).dump(2) + "\n", out_path);
            } else {
                Model mo = parse_model(me_model);
                emit(to_json(measure_for(mo, me_level)).dump(2) + "\n", out_path);
            }
        } else if (*cw) {
            FundRep u = parse_gen(w_gen);
            Weight1D w = (w_family == "T2") ? weight_T2(u) : weight_Haar(u);
            emit(weight_csv(w, w_samples), out_path);
        } else if (*cv) {
            Suite s = Suite::All;
            if (v_suite == "smatrix") s = Suite::SMatrix;
            else if (v_suite == "a-series") s = Suite::ASeries;
            else if (v_suite == "d-series") s = Suite::DSeries;
            else if (v_suite == "exceptional") s = Suite::Exceptional;
            else if (v_suite == "weights") s = Suite::Weights;
            CheckList cl = run_suite(s);
            apply_tolerance(cl, tolerance_override(tol_opt, v_tol));
            emit(format == "csv" ? report_csv(cl) : to_json(cl).dump(2) + "\n", out_path);
            int pass = 0, fail = 0, disc = 0;
            for (const auto& c : cl) {
                if (c.status == "pass") ++pass;
                else if (c.status == "fail") ++fail;
                else ++disc;
            }
            std::fprintf(stderr, "%d checks: %d pass, %d fail, %d discrepancy-documented\n",
                         static_cast<int>(cl.size()), pass, fail, disc);
            return any_failed(cl) ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
