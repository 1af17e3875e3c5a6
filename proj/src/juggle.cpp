#include "ghs/juggle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ghs/complexity.hpp"
#include "ghs/digraph.hpp"

namespace ghs {

namespace {

struct JuggleGeometry {
    VertexId c;  // host
    VertexId b;  // destination of the moved edge ends
    std::set<EdgeId> moved;
};

JuggleGeometry resolve(const GeneralizedSurface& g, const JuggleSpec& spec) {
    JuggleGeometry geo;
    if (spec.sphere) {
        auto it = g.spheres.find(*spec.sphere);
        if (it == g.spheres.end()) throw GhsError(Err::UnknownTracked, *spec.sphere);
        if (it->second.state != SphereState::Hosted)
            throw GhsError(Err::BadIncidence, *spec.sphere + " is not hosted");
        geo.c = it->second.host;
        geo.moved = it->second.encloses;
    } else {
        if (!g.vertices.count(spec.vertex)) throw GhsError(Err::UnknownVertex, spec.vertex);
        geo.c = spec.vertex;
        geo.moved = spec.encloses;
    }

    for (const auto& e : geo.moved) {
        auto it = g.edges.find(e);
        bool ok = it != g.edges.end() && it->second.role == EdgeRole::Thin &&
                  it->second.genus == 0 &&
                  (it->second.tail == geo.c || it->second.head == geo.c);
        if (!ok) throw GhsError(Err::NonSphereEnclosure, e);
    }

    auto pit = g.edges.find(spec.pierced);
    if (pit == g.edges.end()) throw GhsError(Err::UnknownEdge, spec.pierced);
    const SurfaceEdge& p = pit->second;
    if (p.tail != geo.c && p.head != geo.c)
        throw GhsError(Err::BadIncidence, spec.pierced + " is not incident to " + geo.c);
    if (geo.moved.count(spec.pierced))
        throw GhsError(Err::BadIncidence, "pierced edge inside the moved enclosure");
    VertexId a = p.tail == geo.c ? p.head : p.tail;

    auto rit = g.edges.find(spec.landing);
    if (rit == g.edges.end()) throw GhsError(Err::UnknownEdge, spec.landing);
    const SurfaceEdge& r = rit->second;
    if (r.tail != a && r.head != a)
        throw GhsError(Err::BadIncidence, spec.landing + " is not incident to " + a);

    bool p_thick = p.role == EdgeRole::Thick;
    bool r_thick = r.role == EdgeRole::Thick;
    if (spec.pierced == spec.landing) {
        if (!p_thick)
            throw GhsError(Err::BadIncidence, "pierced == landing requires a thick edge");
        geo.b = geo.c;
        return geo;
    }
    // One thin, one thick.
    if (p_thick == r_thick)
        throw GhsError(Err::BadIncidence, "pierced/landing must mix thick and thin");
    geo.b = r.tail == a ? r.head : r.tail;

    for (const auto& e : geo.moved) {
        const auto& me = g.edges.at(e);
        VertexId far = me.tail == geo.c ? me.head : me.tail;
        if (far == geo.b)
            throw GhsError(Err::BadIncidence,
                           "moving " + e + " would close it into a loop");
    }
    return geo;
}

std::multiset<int> genusMultiset(const GeneralizedSurface& g, EdgeRole role) {
    std::multiset<int> out;
    for (const auto& [id, e] : g.edges)
        if (e.role == role) out.insert(e.genus);
    return out;
}

std::set<VertexId> productVertices(const GeneralizedSurface& g) {
    std::set<VertexId> out;
    for (const auto& v : g.vertices) {
        auto info = vertexInfo(g, v);
        if (info.minus_size == 1 && info.thin.size() == 1 &&
            g.edges.at(info.thin.front()).genus == info.plus_genus)
            out.insert(v);
    }
    return out;
}

}  // namespace

GeneralizedSurface juggle(const GeneralizedSurface& g, const JuggleSpec& spec) {
    requireValid(g);
    JuggleGeometry geo = resolve(g, spec);

    // Another hosted sphere holding on to a moved edge would be stranded.
    for (const auto& [id, s] : g.spheres) {
        if (s.state != SphereState::Hosted) continue;
        if (spec.sphere && id == *spec.sphere) continue;
        for (const auto& e : s.encloses)
            if (geo.moved.count(e))
                throw GhsError(Err::TrackedObstruction,
                               id + " also encloses " + e);
    }

    GeneralizedSurface out = g;
    if (geo.b != geo.c) {
        for (const auto& e : geo.moved) {
            auto& me = out.edges.at(e);
            if (me.tail == geo.c)
                me.tail = geo.b;
            else
                me.head = geo.b;
        }
        if (spec.sphere) out.spheres.at(*spec.sphere).host = geo.b;
    }

    auto report = validate(out);
    if (!report.ok()) throw GhsError(Err::PatternViolation, report.joined());
    return out;
}

JuggleCheck checkJugglePreservation(const GeneralizedSurface& before,
                                    const GeneralizedSurface& after,
                                    const JuggleSpec& spec) {
    JuggleCheck r;
    auto add = [&r](const std::string& n, bool ok) { r.checks.emplace_back(n, ok); };

    add("valid", validate(after).ok());
    add("thick-genera", genusMultiset(before, EdgeRole::Thick) ==
                            genusMultiset(after, EdgeRole::Thick));
    add("thin-genera", genusMultiset(before, EdgeRole::Thin) ==
                           genusMultiset(after, EdgeRole::Thin));
    add("netchi", netChi(before) == netChi(after));

    JuggleGeometry geo = resolve(before, spec);
    bool all_separating = true;
    for (const auto& e : geo.moved)
        if (!isBridge(before, e)) all_separating = false;
    if (isAcyclic(before) && all_separating)
        add("acyclic-preserved", isAcyclic(after));
    if (cycleSphereCondition(before))
        add("cycle-sphere-condition", cycleSphereCondition(after));

    auto pb = productVertices(before);
    auto pa = productVertices(after);
    bool no_new = true;
    for (const auto& v : pa)
        if (!pb.count(v)) no_new = false;
    add("no-new-product", no_new);
    return r;
}

std::string juggleScript(const JuggleSpec& spec) {
    std::ostringstream os;
    if (spec.sphere) {
        os << "juggle sphere=" << *spec.sphere;
    } else {
        os << "juggle vertex=" << spec.vertex << " encloses=";
        bool first = true;
        for (const auto& e : spec.encloses) {
            os << (first ? "" : ",") << e;
            first = false;
        }
    }
    os << " p=" << spec.pierced << " r=" << spec.landing;
    return os.str();
}

}  // namespace ghs
