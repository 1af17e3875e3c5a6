// digraph.hpp -- coherent-cycle analysis, height functions, and sphere
// collection selection on the dual digraph.

#pragma once

#include <map>
#include <vector>

#include "ghs/core.hpp"

namespace ghs {

// Integer labelling of edges witnessing acyclicity: odd exactly on thick
// edges and monotone across every compressionbody.
struct HeightFn {
    std::map<EdgeId, int> assignment;
    bool operator==(const HeightFn&) const = default;
};

// Thin genus-0 edges whose removal leaves the underlying graph connected
// and the digraph acyclic.
struct SphereCollection {
    std::set<EdgeId> edges;
    bool operator==(const SphereCollection&) const = default;
};

// Exhaustive enumeration of all simple coherent cycles, as edge-id
// sequences.  Each cycle is rotated to start at its least edge id; the
// list is sorted.  Intended for desk-scale inputs.
std::vector<std::vector<EdgeId>> coherentCycles(const GeneralizedSurface& g);

// Early-exit check; agrees with coherentCycles().empty().
bool isAcyclic(const GeneralizedSurface& g);

// f(S) = largest number of edges in a coherent path from a source vertex
// to the head of S, counting S itself.  Throws CyclicInput on cycles.
HeightFn computeHeight(const GeneralizedSurface& g);

// Checks the parity and monotonicity axioms directly; independent of
// computeHeight.
bool verifyHeight(const GeneralizedSurface& g, const HeightFn& f);

// True iff every coherent cycle contains a thin genus-0 edge.
bool cycleSphereCondition(const GeneralizedSurface& g);

// Smallest (then lexicographically least) set of thin spheres whose
// removal keeps the graph connected and makes the digraph acyclic.
// Throws NoCollection exactly when cycleSphereCondition fails.
SphereCollection minimalCompleteCollection(const GeneralizedSurface& g);

// Underlying-graph bridge test; a non-bridge edge is "nonseparating".
bool isBridge(const GeneralizedSurface& g, const EdgeId& e);

}  // namespace ghs
