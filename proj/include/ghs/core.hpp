// core.hpp -- decorated dual-digraph model for oriented generalized Heegaard
// surface diagrams.
//
// Vertices stand for compressionbodies, edges for the surface components
// separating them.  Every vertex has exactly one incident thick edge (its
// positive boundary); all incident thin edges and boundary marks form its
// negative boundary.  Edge direction is the transverse orientation: out of
// the tail compressionbody, into the head.

#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghs {

using VertexId = std::string;
using EdgeId = std::string;
using MarkId = std::string;
using TrackId = std::string;

enum class Err {
    InvalidSurface,
    UnknownVertex,
    UnknownEdge,
    UnknownMark,
    UnknownTracked,
    CyclicInput,
    NoCollection,
    GenusMismatch,
    RealizabilityViolation,
    EmptyPlan,
    BadAssignment,
    MalformedTree,
    NotProduct,
    DegenerateConsolidation,
    NotTypeII,
    NotConsolidable,
    OrientationMismatch,
    NotAdjacent,
    TubeBudget,
    InconsistentSpec,
    NotSelfAmalgamatable,
    NothingToMerge,
    BadIncidence,
    NonSphereEnclosure,
    PatternViolation,
    TrackedObstruction,
    PreconditionFailed,
    ParseError,
};

const char* errName(Err e);

class GhsError : public std::runtime_error {
public:
    Err code;
    GhsError(Err c, const std::string& msg);
};

enum class EdgeRole { Thick, Thin };

struct SurfaceEdge {
    EdgeId id;
    EdgeRole role = EdgeRole::Thick;
    int genus = 0;  // >= 0
    VertexId tail;  // orientation points out of tail, into head
    VertexId head;
    bool operator==(const SurfaceEdge&) const = default;
};

struct BoundaryMark {
    MarkId id;
    int genus = 1;  // >= 1, no spherical boundary components
    VertexId vertex;
    bool operator==(const BoundaryMark&) const = default;
};

// A tracked essential sphere either sits inside one compressionbody,
// enclosing some of its thin-sphere boundary, or crosses one thick edge
// in `count` curves.
enum class SphereState { Hosted, Crossing };

struct TrackedSphere {
    TrackId id;
    SphereState state = SphereState::Hosted;
    VertexId host;              // Hosted
    std::set<EdgeId> encloses;  // Hosted: thin genus-0 edges at host
    EdgeId edge;                // Crossing: a thick edge
    int count = 0;              // Crossing: >= 1
    bool operator==(const TrackedSphere&) const = default;
};

struct TrackedDisc {
    TrackId id;
    EdgeId edge;  // thick edge it crosses
    int count = 1;
    MarkId boundary;  // boundary component carrying the disc's boundary curve
    bool operator==(const TrackedDisc&) const = default;
};

struct GeneralizedSurface {
    std::set<VertexId> vertices;
    std::map<EdgeId, SurfaceEdge> edges;
    std::map<MarkId, BoundaryMark> marks;
    std::map<TrackId, TrackedSphere> spheres;
    std::map<TrackId, TrackedDisc> discs;
    bool operator==(const GeneralizedSurface&) const = default;
};

// Derived per-vertex view.  Only meaningful on surfaces where the vertex
// has a unique thick edge; vertexInfo throws otherwise.
struct VertexInfo {
    VertexId id;
    EdgeId plus_edge;
    bool below = false;  // plus edge outgoing (compressionbody below it)
    std::vector<EdgeId> thin;  // incident thin edges, sorted
    std::vector<MarkId> mark_ids;
    int plus_genus = 0;
    int minus_genus = 0;  // sum over thin edges + marks
    int minus_size = 0;
    int handles = 0;  // 1-handle count over the connectivity baseline
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string joined() const;
};

// Reports every violated invariant: dangling references, loops, genus
// bounds, unique thick edge, orientation pattern, realizability,
// connectivity, tracked-object well-formedness.  Side-effect free.
ValidationReport validate(const GeneralizedSurface& g);

// Throws InvalidSurface listing the violations.
void requireValid(const GeneralizedSurface& g);

// True iff the diagram is a plain Heegaard surface: one (thick) edge,
// two vertices.
bool isHeegaard(const GeneralizedSurface& g);

// True iff the vertex is a product compressionbody: a single thin edge as
// its whole negative boundary, of the same genus as the thick edge.
bool isProductVertex(const GeneralizedSurface& g, const VertexId& v);

VertexInfo vertexInfo(const GeneralizedSurface& g, const VertexId& v);

// Incident thin edges of v, sorted by id.
std::vector<EdgeId> thinEdgesAt(const GeneralizedSurface& g, const VertexId& v);

// Move logs are replayable scripts, one verb per line.
using MoveLog = std::vector<std::string>;

}  // namespace ghs
