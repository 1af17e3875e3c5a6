// juggle.hpp -- relocating the thin-sphere boundary of a hosted sphere's
// compressionbody across a pierced/landing pair of surfaces.

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ghs/core.hpp"

namespace ghs {

// Either a tracked sphere id (host and enclosure looked up) or an
// anonymous (vertex, enclosure) pair.  `pierced` is incident to the host
// C; `landing` is incident to the far endpoint A of `pierced`.  Exactly
// one of the three legal shapes applies: thin/thick, thick/thin, or
// pierced == landing thick.
struct JuggleSpec {
    std::optional<TrackId> sphere;
    VertexId vertex;            // host C (ignored when sphere is set)
    std::set<EdgeId> encloses;  // moved thin spheres (ignored when sphere is set)
    EdgeId pierced;             // P
    EdgeId landing;             // R
    bool operator==(const JuggleSpec&) const = default;
};

// Moves the C-end of every enclosed edge to the landing's far endpoint B.
// Genera are untouched; the hosted sphere follows to B.  When the moved
// set is empty or P == R the digraph is unchanged.
GeneralizedSurface juggle(const GeneralizedSurface& g, const JuggleSpec& spec);

struct JuggleCheck {
    std::vector<std::pair<std::string, bool>> checks;
    bool allPass() const {
        for (const auto& [n, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

// Verifies the preserved quantities: validity, per-role genus multisets,
// netChi, conditional acyclicity (separating moved set), the
// cycle-sphere condition, and the absence of new product vertices.
JuggleCheck checkJugglePreservation(const GeneralizedSurface& before,
                                    const GeneralizedSurface& after,
                                    const JuggleSpec& spec);

std::string juggleScript(const JuggleSpec& spec);

}  // namespace ghs
