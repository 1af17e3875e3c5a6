// amalgamation.hpp -- amalgamation rewrites, height-consistent ordering,
// spherical self-amalgamation, tube bookkeeping, and the canonical
// amalgamation-obtained Heegaard surface.

#pragma once

#include <map>
#include <vector>

#include "ghs/core.hpp"
#include "ghs/digraph.hpp"

namespace ghs {

// Which side of the center edge the partners sit on: PartnersBelow means
// they are reached through the center's tail vertex, PartnersAbove through
// its head.
enum class AmalgSide { PartnersBelow, PartnersAbove };

struct AmalgSpec {
    EdgeId center;
    AmalgSide side = AmalgSide::PartnersBelow;
    std::vector<EdgeId> partners;  // thick edges across shared thin edges
    std::map<EdgeId, int> tubes;   // crossed thin edge -> tube count (default 1)
    bool operator==(const AmalgSpec&) const = default;
};

// The thin edges consumed by the spec: all thin edges between the
// center's near vertex and each partner's far vertex.
std::set<EdgeId> crossedEdges(const GeneralizedSurface& g, const AmalgSpec& spec);

// Replaces the center, the partners, and every crossed thin edge by one
// thick edge whose genus is fixed by netChi conservation:
//   g(J) = g(H) + sum(g_i - 1) - sum(g_F - 1).
// The far vertices on each side merge, keeping the surviving negative
// boundary.  Hosted spheres enclosing crossed edges become crossing
// spheres with one curve per tube; all other tracked counts transfer
// unchanged.
GeneralizedSurface amalgamate(const GeneralizedSurface& g, const AmalgSpec& spec);

// Thick edges adjacent to c across its thin edges, restricted to the ones
// on which f is maximal (c below its thick edge) or minimal (above).
std::set<EdgeId> consistentPartners(const GeneralizedSurface& g, const HeightFn& f,
                                    const VertexId& c);

// The height function induced on the amalgamated surface: the new edge
// maps to the partners' shared height mu, the near vertex's surviving
// thin edges to mu -/+ 1, everything else is unchanged.
HeightFn inducedHeight(const GeneralizedSurface& g, const HeightFn& f,
                       const AmalgSpec& spec);

// Height-consistent amalgamation until a single thick edge remains.
std::pair<GeneralizedSurface, MoveLog> fullyAmalgamate(const GeneralizedSurface& g);

// Deletes the given thin spheres joining the two endpoints of the unique
// thick edge and raises its genus by |p|.  Hosted spheres enclosing
// deleted edges become crossing spheres, one curve per enclosed sphere.
GeneralizedSurface selfAmalgamate(const GeneralizedSurface& g,
                                  const SphereCollection& p);

// Replaces a multi-curve crossing count by 1 (the tube merge isotopy).
GeneralizedSurface mergeTubes(const GeneralizedSurface& g, const TrackId& s);

// minimalCompleteCollection, then height-consistent amalgamation of the
// rest, then spherical self-amalgamation across the collection.
std::pair<GeneralizedSurface, MoveLog> amalgamationObtained(const GeneralizedSurface& g);

// Order-independent summary of a fully amalgamated surface: final genus,
// boundary genera per side, and tracked states normalized by the tube
// merge isotopy (crossing counts collapse to 1; hosted spheres report
// the side of their host).
struct CanonicalData {
    int final_genus = 0;
    std::vector<int> below_boundary;  // sorted genera at the tail-side vertex
    std::vector<int> above_boundary;
    // id -> normalized state: n >= 1 crossing curves, -1 hosted below,
    // -2 hosted above
    std::map<TrackId, int> tracked;
    bool operator==(const CanonicalData&) const = default;
};

CanonicalData canonicalData(const GeneralizedSurface& heegaard);

std::string amalgamateScript(const AmalgSpec& spec);

}  // namespace ghs
