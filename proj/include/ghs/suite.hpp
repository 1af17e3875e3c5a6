// suite.hpp -- property runner behind `ghs verify` and the acceptance
// binary.  Each property drives one family of invariants over generated
// instances and reports counterexamples as surface files plus scripts.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghs/amalgamation.hpp"
#include "ghs/generator.hpp"
#include "ghs/split_tree.hpp"
#include "ghs/thinning.hpp"

namespace ghs {

struct SuiteConfig {
    uint64_t seed_lo = 1;
    uint64_t seed_hi = 60;
    // Quotas; properties keep generating until they reach them or run out
    // of seeds.
    int min_thinning_moves = 500;
    int min_trees = 200;
    int min_move_applications = 1000;
    int min_juggles = 300;
    int min_pipeline_scenarios = 20;
    int order_independence_thick_cap = 5;
};

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> counterexamples;  // "surface:\n...\nscript:\n..."
    bool pass() const { return failures == 0; }
};

struct SuiteReport {
    std::vector<PropertyResult> results;
    bool allPass() const {
        for (const auto& r : results)
            if (!r.pass()) return false;
        return true;
    }
};

SuiteReport verifySuite(const SuiteConfig& cfg);
std::string suiteText(const SuiteReport& r);

// Individual properties (used by the acceptance suite directly).
PropertyResult propWidthOrderTotal();
PropertyResult propWidthStrictDecrease(const SuiteConfig& cfg);
PropertyResult propPerComponentStrictness(const SuiteConfig& cfg);
PropertyResult propHeightAcyclicAgreement(const SuiteConfig& cfg);
PropertyResult propHeightBruteEquivalence(const SuiteConfig& cfg);
PropertyResult propNetChiConservation(const SuiteConfig& cfg);
PropertyResult propOrderIndependence(const SuiteConfig& cfg);
PropertyResult propAdditivity();
PropertyResult propStrongHakenPipeline(const SuiteConfig& cfg);
PropertyResult propStructureBookkeeping(const SuiteConfig& cfg);
PropertyResult propJugglePreservation(const SuiteConfig& cfg);
PropertyResult propRoundTrips(const SuiteConfig& cfg);
PropertyResult propReplayDeterminism(const SuiteConfig& cfg);
PropertyResult propMonopodCounts(const SuiteConfig& cfg);

// Random-move machinery shared with tests.
std::optional<ThinningMove> randomTypeIMove(const GeneralizedSurface& g, Rng& rng);
std::optional<ThinningMove> randomTypeIIMove(const GeneralizedSurface& g, Rng& rng);
std::optional<ThinningMove> randomConsolidation(const GeneralizedSurface& g, Rng& rng);
std::optional<SplitTree> randomTree(Rng& rng, int root_genus, bool both_compressing);

// All height functions with values in [1, cap], up to max_count of them.
std::vector<HeightFn> enumerateHeightFunctions(const GeneralizedSurface& g, int cap,
                                               size_t max_count);
bool existsHeightFunction(const GeneralizedSurface& g);

// Hand-built fixtures used across suites and tests.
GeneralizedSurface minimalHeegaard(int genus);
GeneralizedSurface chainSurface();        // three blocks in a row, genera (2,1,3)
GeneralizedSurface selfAmalgShape(int genus, int loops, bool tracked_sphere);
std::vector<GeneralizedSurface> pipelineScenarios(const SuiteConfig& cfg);

}  // namespace ghs
