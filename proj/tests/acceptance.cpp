// acceptance.cpp -- the release gate.  Runs every advertised guarantee at
// full scale and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <string>

#include "ghs/suite.hpp"

namespace {

int failures = 0;

void report(int n, const std::string& what, const ghs::PropertyResult& r,
            int min_cases) {
    bool ok = r.pass() && r.cases >= min_cases;
    if (!ok) failures++;
    std::printf("%s criterion %d: %s (cases=%d failures=%d)\n",
                ok ? "PASS" : "FAIL", n, what.c_str(), r.cases, r.failures);
    if (!ok)
        for (const auto& c : r.counterexamples) std::printf("%s\n", c.c_str());
}

}  // namespace

int main() {
    ghs::SuiteConfig cfg;
    cfg.seed_lo = 1;
    cfg.seed_hi = 80;
    cfg.min_thinning_moves = 500;
    cfg.min_trees = 200;
    cfg.min_move_applications = 1000;
    cfg.min_juggles = 300;
    cfg.min_pipeline_scenarios = 20;

    report(1, "width strictly decreases under every thinning move",
           ghs::propWidthStrictDecrease(cfg), 500);
    report(2, "per-component strictness of compression plans",
           ghs::propPerComponentStrictness(cfg), 200);
    report(3, "height functions exist exactly on acyclic digraphs",
           ghs::propHeightAcyclicAgreement(cfg), 100);
    report(4, "netChi is conserved by every move",
           ghs::propNetChiConservation(cfg), 1000);
    report(5, "amalgamation result is independent of heights and order",
           ghs::propOrderIndependence(cfg), 30);
    report(6, "genus additivity under amalgamation and self-amalgamation",
           ghs::propAdditivity(), 2);
    report(7, "strong-haken pipeline ends with every count at one",
           ghs::propStrongHakenPipeline(cfg), 20);
    report(8, "type I untelescoping only sheds complexity into thin pieces",
           ghs::propStructureBookkeeping(cfg), 200);
    report(9, "juggles preserve every tracked quantity",
           ghs::propJugglePreservation(cfg), 300);
    report(10, "product round trips and byte-stable serialization",
           ghs::propRoundTrips(cfg), 50);

    std::printf("%s\n", failures == 0 ? "ACCEPTANCE: ALL PASS"
                                      : "ACCEPTANCE: FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
