// Acceptance harness: runs the eleven acceptance checks and prints one
// pass/fail line per criterion. Documented discrepancies (the printed E3M and
// E12 orbifold masses) are reported but do not fail the run.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "rank2/verify.hpp"

using namespace rank2;

namespace {

struct Criterion {
    const char* label;
    CheckList (*run)();
};

bool report(const char* label, const CheckList& cs, double seconds) {
    int fail = 0, disc = 0;
    double worst = 0;
    std::string first_fail;
    for (const auto& c : cs) {
        worst = std::max(worst, c.abs_error);
        if (c.status == "fail") {
            ++fail;
            if (first_fail.empty()) first_fail = c.id;
        } else if (c.status == "discrepancy-documented") {
            ++disc;
        }
    }
    std::printf("%-4s %-58s checks=%3zu worst-err=%.3g time=%.1fs", fail ? "FAIL" : "pass",
                label, cs.size(), worst, seconds);
    if (disc) std::printf("  [%d discrepancy-documented]", disc);
    if (fail) std::printf("  first failure: %s", first_fail.c_str());
    std::printf("\n");
    return fail == 0;
}

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"1. moment oracle triangle (m <= 12, exact)", [] { return criterion_moment_triangle(); }},
        {"2. S-matrix unitarity and symmetry (k <= 20, 1e-10)", [] { return criterion_smatrix(); }},
        {"3. Verlinde integrality = graph adjacency (k <= 8)",
         [] { return criterion_verlinde_graph(); }},
        {"4. psi* three evaluation modes (k <= 12, 1e-10)", [] { return criterion_psi_star(); }},
        {"5. Jacobian form consistency (10^3 points, 1e-8)", [] { return criterion_jacobians(); }},
        {"6. level-k measures = graph integers (k <= 8, 1e-6)",
         [] { return criterion_level_k_measures(); }},
        {"7. D_k measures = orbifold eigendata (k <= 8, 1e-8)",
         [] { return criterion_d_series(); }},
        {"8. exceptional measures and masses (1e-8 / 1e-10)",
         [] { return criterion_exceptional(); }},
        {"9. orbit-measure support geometry (exact)", [] { return criterion_orbit_geometry(); }},
        {"10. 1-D weight masses and moment chains (1e-6 / 1e-5)",
         [] { return criterion_weights(); }},
        {"11. A_infinity density = stable walk integers (1e-6)",
         [] { return criterion_a_infinity(); }},
    };

    bool all_ok = true;
    for (const auto& cr : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        CheckList cs = cr.run();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all_ok = report(cr.label, cs, dt) && all_ok;
    }
    std::printf("%s\n", all_ok ? "ACCEPTANCE: all criteria pass"
                               : "ACCEPTANCE: at least one criterion failed");
    return all_ok ? 0 : 1;
}
