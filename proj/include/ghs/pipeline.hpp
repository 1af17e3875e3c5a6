// pipeline.hpp -- the end-to-end amalgamation pipeline that leaves every
// tracked sphere and disc crossing the final Heegaard surface once.

#pragma once

#include "ghs/io.hpp"

namespace ghs {

// Preconditions: the cycle-sphere condition holds, hosted spheres enclose
// at least one thin sphere, crossing spheres and discs start at count 1.
// Runs amalgamationObtained with default (monopod) tubes, then merges any
// multi-curve crossings.  Throws PreconditionFailed naming the violated
// condition.
ScenarioReport runPipelineStrongHaken(const GeneralizedSurface& g,
                                      GeneralizedSurface* out = nullptr);

}  // namespace ghs
