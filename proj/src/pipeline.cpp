#include "ghs/pipeline.hpp"

#include "ghs/amalgamation.hpp"
#include "ghs/digraph.hpp"

namespace ghs {

ScenarioReport runPipelineStrongHaken(const GeneralizedSurface& g,
                                      GeneralizedSurface* out) {
    requireValid(g);
    if (!cycleSphereCondition(g))
        throw GhsError(Err::PreconditionFailed,
                       "a coherent cycle avoids all thin spheres");
    for (const auto& [id, s] : g.spheres) {
        if (s.state == SphereState::Hosted && s.encloses.empty())
            throw GhsError(Err::PreconditionFailed,
                           id + ": hosted sphere with empty enclosure is inessential");
        if (s.state == SphereState::Crossing && s.count != 1)
            throw GhsError(Err::PreconditionFailed,
                           id + ": crossing sphere must start at count 1");
    }
    for (const auto& [id, d] : g.discs)
        if (d.count != 1)
            throw GhsError(Err::PreconditionFailed,
                           id + ": disc must start at count 1");

    auto [amalg, log] = amalgamationObtained(g);
    for (const auto& [id, s] : amalg.spheres)
        if (s.state == SphereState::Crossing && s.count > 1)
            log.push_back("merge s=" + id);
    for (const auto& [id, d] : amalg.discs)
        if (d.count > 1) log.push_back("merge s=" + id);

    return runScript(g, log, out);
}

}  // namespace ghs
