// Acceptance runner: executes every criterion at the default configuration
// (dim 2, window -4..4, u-cap 4, 50 trials per identity, exact zero
// tolerance over Q) and prints one line per criterion.

#include "cychains/suite.hpp"
#include "cychains/symbol.hpp"

#include <iostream>
#include <string>

using namespace cychains;

namespace {

int failures = 0;

void report(int number, bool pass, const std::string& what) {
    std::cout << "CRITERION " << number << ": " << (pass ? "PASS" : "FAIL") << " - " << what
              << std::endl;
    if (!pass) ++failures;
}

bool suite_passes(const std::string& name, const SuiteConfig& cfg, std::string* notes = nullptr) {
    SuiteReport rep = run_suite(name, cfg);
    bool ok = rep.pass();
    for (const auto& r : rep.identities) {
        if (!r.pass)
            std::cout << "    failing identity: " << r.id
                      << (r.counterexample.empty() ? "" : "  [" + r.counterexample + "]") << "\n";
        if (notes && !r.note.empty()) *notes += r.id + ": " + r.note + "; ";
    }
    return ok;
}

} // namespace

int main() {
    SuiteConfig cfg; // defaults: dim 2, u-cap 4, arity cap 3, window -4..4, 50 trials, seed 42

    // 1. Cartan calculus: bracket axioms, insertion relations, divergence
    //    Leibniz and generator property, squared divergence, both integral
    //    identities, across the three configured volume densities.
    report(1, suite_passes("cartan", cfg),
           "cartan calculus identities, exact over Q, volume densities {1, t1, 3 t1^2 t2^-1}");

    // 2. Hochschild complexes: differentials square to zero, the action of
    //    cochains on normalized chains is a dgla action compatible with the
    //    cyclic differential, and the chain antisymmetrization intertwines.
    report(2, suite_passes("hochschild", cfg), "hochschild chain/cochain identities");

    // 3. Extended complex: b, the connection and the cyclic action satisfy
    //    the compatibility identities; the slot-zero embedding is an
    //    injective chain map; the mixed differential squares to zero on the
    //    normalized subcomplex.
    report(3, suite_passes("extended", cfg), "extended complex identities");

    // 4. Symbol complex ranks: cohomology concentrated at (p, q) = (d, 0)
    //    for d in {1,2,3} along every line -d <= q - p <= 2, with the d = 2
    //    spot values (1,4,3) and ranks (1,3) on the q = p line.
    bool koszul = suite_passes("koszul", cfg);
    {
        auto rows = koszul_rank_rows(cfg);
        for (const auto& row : rows) {
            int expected = (row.p == row.d && row.p + row.c == 0) ? 1 : 0;
            if (row.dim_cohomology != expected) koszul = false;
        }
        if (symbol_basis(2, 0, 0).size() != 1 || symbol_basis(2, 1, 1).size() != 4 ||
            symbol_basis(2, 2, 2).size() != 3)
            koszul = false;
    }
    report(4, koszul, "symbol complex rank table, exact elimination over Q");

    // 5. The scaling family of actions: dgla-action identities for
    //    t in {0, 1, -1, 1/2, 2}, both homotopy conditions as polynomial
    //    identities in t, dual-action adjointness, and a unique sign channel
    //    for the exponential morphism at arities 0-2 modulo u^3.
    std::string notes;
    bool uact = suite_passes("uactions", cfg, &notes);
    bool pinned = notes.find("pinned sign channel") != std::string::npos;
    report(5, uact && pinned,
           "scaling action family identities" +
               (pinned ? " (" + notes.substr(notes.find("pinned")) + ")" : " (no sign channel pinned)"));

    // 6. Coderivation machinery: square residuals vanish to arity 4 for both
    //    dglas, module residuals vanish to arity 3 for all listed module
    //    structures, adjoint round-trip and explicit-dual agreement, and the
    //    reinterpretation transport and projection checks.
    report(6, suite_passes("linfty", cfg), "coderivation residuals, adjoints, reinterpretation");

    // 7. Negative controls: a flipped bracket sign, a flipped wrap sign in
    //    the cyclic bar differential and a dropped divergence term must each
    //    be detected by at least one failing identity.
    SuiteConfig ctl = cfg;
    ctl.with_controls = true;
    SuiteReport rep = run_suite("all", ctl);
    int controls_seen = 0;
    bool controls_ok = true;
    for (const auto& r : rep.identities) {
        if (!r.control) {
            if (!r.pass) controls_ok = false; // the genuine identities must still pass
            continue;
        }
        ++controls_seen;
        if (!r.pass) {
            controls_ok = false;
            std::cout << "    undetected defect: " << r.id << "\n";
        }
    }
    report(7, controls_ok && controls_seen == 3, "planted defects are detected");

    std::cout << (failures == 0 ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT")
              << std::endl;
    return failures;
}
