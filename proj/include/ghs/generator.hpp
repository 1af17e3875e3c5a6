// generator.hpp -- seeded random instances for the test harness.
//
// Surfaces are grown as a layered DAG of thick-edge blocks joined by thin
// edges, then decorated with genera satisfying every vertex inequality,
// so the acyclic variants are valid and acyclic by construction.

#pragma once

#include <cstdint>

#include "ghs/core.hpp"

namespace ghs {

struct GenLimits {
    int max_thick = 4;       // number of thick-edge blocks, >= 1
    int max_extra_thin = 3;  // thin edges beyond the spanning set
    int max_genus = 3;       // cap on thin/mark genus contributions
    int max_marks = 2;
    bool tracked = true;        // hosted/crossing spheres and discs
    bool loop_spheres = false;  // backward thin spheres (cyclic instances)
};

// Deterministic per (seed, limits).  Always valid; acyclic unless
// loop_spheres added any backward edge.
GeneralizedSurface randomSurface(uint64_t seed, const GenLimits& limits);

// Small deterministic PRNG wrapper used across the harness.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
    uint64_t next();
    // uniform in [0, bound)
    uint64_t below(uint64_t bound);
    int range(int lo, int hi);  // inclusive
    bool chance(int num, int den);
};

}  // namespace ghs
