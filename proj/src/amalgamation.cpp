#include "ghs/amalgamation.hpp"

#include <algorithm>
#include <sstream>

namespace ghs {

namespace {

struct SpecGeometry {
    VertexId near;                 // center endpoint on the partner side; deleted
    VertexId keep;                 // other center endpoint; survives with its id
    std::vector<VertexId> fars;    // partner endpoints adjacent to near; deleted
    std::vector<VertexId> outers;  // partner endpoints merging with near's remains
    std::set<EdgeId> crossed;
};

SpecGeometry resolveSpec(const GeneralizedSurface& g, const AmalgSpec& spec) {
    auto cit = g.edges.find(spec.center);
    if (cit == g.edges.end()) throw GhsError(Err::UnknownEdge, spec.center);
    if (cit->second.role != EdgeRole::Thick)
        throw GhsError(Err::OrientationMismatch, spec.center + " is not thick");
    if (spec.partners.empty()) throw GhsError(Err::NotAdjacent, "no partners");

    bool below = spec.side == AmalgSide::PartnersBelow;
    SpecGeometry geo;
    geo.near = below ? cit->second.tail : cit->second.head;
    geo.keep = below ? cit->second.head : cit->second.tail;

    std::set<EdgeId> seen;
    for (const auto& pid : spec.partners) {
        if (!seen.insert(pid).second)
            throw GhsError(Err::OrientationMismatch, "duplicate partner " + pid);
        if (pid == spec.center)
            throw GhsError(Err::OrientationMismatch, "center cannot be its own partner");
        auto pit = g.edges.find(pid);
        if (pit == g.edges.end()) throw GhsError(Err::UnknownEdge, pid);
        if (pit->second.role != EdgeRole::Thick)
            throw GhsError(Err::OrientationMismatch, pid + " is not thick");
        VertexId far = below ? pit->second.head : pit->second.tail;
        VertexId outer = below ? pit->second.tail : pit->second.head;
        size_t found = 0;
        for (const auto& [id, e] : g.edges) {
            if (e.role != EdgeRole::Thin) continue;
            bool hit = below ? (e.tail == far && e.head == geo.near)
                             : (e.tail == geo.near && e.head == far);
            if (hit) {
                geo.crossed.insert(id);
                found++;
            }
        }
        if (found == 0) {
            // Adjacent through the other endpoint of the center instead?
            VertexId alt_near = geo.keep;
            VertexId alt_far = below ? pit->second.tail : pit->second.head;
            for (const auto& [id, e] : g.edges) {
                if (e.role != EdgeRole::Thin) continue;
                bool hit = below ? (e.tail == alt_near && e.head == alt_far)
                                 : (e.tail == alt_far && e.head == alt_near);
                if (hit)
                    throw GhsError(Err::OrientationMismatch,
                                   pid + " lies on the other side of " + spec.center);
            }
            throw GhsError(Err::NotAdjacent,
                           pid + " shares no thin edge with " + geo.near);
        }
        geo.fars.push_back(far);
        geo.outers.push_back(outer);
    }

    for (const auto& [eid, n] : spec.tubes) {
        if (!geo.crossed.count(eid))
            throw GhsError(Err::NotAdjacent, "tube through non-crossed edge " + eid);
        if (n < 1) throw GhsError(Err::TubeBudget, eid + " needs at least one tube");
    }
    int extra = 0;
    for (const auto& [eid, n] : spec.tubes) extra += n - 1;
    if (extra > 2 * vertexInfo(g, geo.near).handles)
        throw GhsError(Err::TubeBudget, "extra tubes exceed the 1-handle budget");
    return geo;
}

EdgeId amalgamatedEdgeId(const GeneralizedSurface& g, const SpecGeometry& geo,
                         const AmalgSpec& spec) {
    std::set<EdgeId> deleted = geo.crossed;
    deleted.insert(spec.center);
    deleted.insert(spec.partners.begin(), spec.partners.end());
    std::string base = "J";
    if (!g.edges.count(base) || deleted.count(base)) return base;
    for (int i = 2;; ++i) {
        std::string cand = base + std::to_string(i);
        if (!g.edges.count(cand) || deleted.count(cand)) return cand;
    }
}

int tubeCount(const AmalgSpec& spec, const EdgeId& e) {
    auto it = spec.tubes.find(e);
    return it == spec.tubes.end() ? 1 : it->second;
}

}  // namespace

std::set<EdgeId> crossedEdges(const GeneralizedSurface& g, const AmalgSpec& spec) {
    requireValid(g);
    return resolveSpec(g, spec).crossed;
}

GeneralizedSurface amalgamate(const GeneralizedSurface& g, const AmalgSpec& spec) {
    requireValid(g);
    SpecGeometry geo = resolveSpec(g, spec);

    int genus = g.edges.at(spec.center).genus;
    for (const auto& pid : spec.partners) genus += g.edges.at(pid).genus - 1;
    for (const auto& eid : geo.crossed) genus -= g.edges.at(eid).genus - 1;

    EdgeId jid = amalgamatedEdgeId(g, geo, spec);
    VertexId merged = *std::min_element(geo.outers.begin(), geo.outers.end());
    std::set<VertexId> gone(geo.fars.begin(), geo.fars.end());
    gone.insert(geo.near);
    std::set<VertexId> outer_set(geo.outers.begin(), geo.outers.end());

    GeneralizedSurface out = g;
    out.edges.erase(spec.center);
    for (const auto& pid : spec.partners) out.edges.erase(pid);
    for (const auto& eid : geo.crossed) out.edges.erase(eid);
    for (const auto& v : gone) out.vertices.erase(v);
    for (const auto& v : outer_set)
        if (v != merged) out.vertices.erase(v);

    // Partner far vertices hand their remains to the surviving center
    // endpoint; the near vertex and partner outer endpoints merge.
    auto retarget = [&](const VertexId& v) -> VertexId {
        if (v == geo.near || outer_set.count(v)) return merged;
        if (gone.count(v)) return geo.keep;  // a partner far vertex
        return v;
    };
    for (auto& [id, e] : out.edges) {
        e.tail = retarget(e.tail);
        e.head = retarget(e.head);
    }
    for (auto& [id, m] : out.marks) m.vertex = retarget(m.vertex);

    bool below = spec.side == AmalgSide::PartnersBelow;
    out.edges[jid] = {jid, EdgeRole::Thick, genus, below ? merged : geo.keep,
                      below ? geo.keep : merged};

    for (auto& [id, s] : out.spheres) {
        if (s.state == SphereState::Crossing) {
            if (s.edge == spec.center ||
                std::find(spec.partners.begin(), spec.partners.end(), s.edge) !=
                    spec.partners.end())
                s.edge = jid;
            continue;
        }
        int hit = 0;
        for (const auto& e : s.encloses)
            if (geo.crossed.count(e)) hit += tubeCount(spec, e);
        if (hit > 0) {
            s.state = SphereState::Crossing;
            s.edge = jid;
            s.count = hit;
            s.host.clear();
            s.encloses.clear();
        } else {
            s.host = retarget(s.host);
        }
    }
    for (auto& [id, d] : out.discs)
        if (d.edge == spec.center ||
            std::find(spec.partners.begin(), spec.partners.end(), d.edge) !=
                spec.partners.end())
            d.edge = jid;

    // Conservation makes these merges realizable; a failure here is a bug.
    for (const VertexId& v : {merged, geo.keep}) {
        auto info = vertexInfo(out, v);
        if (info.plus_genus < info.minus_genus)
            throw GhsError(Err::RealizabilityViolation, v);
    }
    requireValid(out);
    return out;
}

std::set<EdgeId> consistentPartners(const GeneralizedSurface& g, const HeightFn& f,
                                    const VertexId& c) {
    requireValid(g);
    if (!isAcyclic(g)) throw GhsError(Err::CyclicInput, "surface is cyclic");
    if (!verifyHeight(g, f))
        throw GhsError(Err::InconsistentSpec, "not a height function");
    auto info = vertexInfo(g, c);
    std::set<EdgeId> candidates;
    for (const auto& t : info.thin) {
        const auto& e = g.edges.at(t);
        VertexId far = e.tail == c ? e.head : e.tail;
        candidates.insert(vertexInfo(g, far).plus_edge);
    }
    if (candidates.empty()) return {};
    int best = 0;
    bool first = true;
    for (const auto& cand : candidates) {
        int v = f.assignment.at(cand);
        if (first || (info.below ? v > best : v < best)) {
            best = v;
            first = false;
        }
    }
    std::set<EdgeId> out;
    for (const auto& cand : candidates)
        if (f.assignment.at(cand) == best) out.insert(cand);
    return out;
}

HeightFn inducedHeight(const GeneralizedSurface& g, const HeightFn& f,
                       const AmalgSpec& spec) {
    requireValid(g);
    SpecGeometry geo = resolveSpec(g, spec);
    std::set<EdgeId> want(spec.partners.begin(), spec.partners.end());
    if (consistentPartners(g, f, geo.near) != want)
        throw GhsError(Err::InconsistentSpec,
                       "partners are not the height-consistent set at " + geo.near);

    int mu = f.assignment.at(spec.partners.front());
    HeightFn out = f;
    out.assignment.erase(spec.center);
    for (const auto& pid : spec.partners) out.assignment.erase(pid);
    for (const auto& eid : geo.crossed) out.assignment.erase(eid);
    bool below = spec.side == AmalgSide::PartnersBelow;
    for (const auto& t : thinEdgesAt(g, geo.near))
        if (!geo.crossed.count(t)) out.assignment[t] = below ? mu - 1 : mu + 1;
    out.assignment[amalgamatedEdgeId(g, geo, spec)] = mu;
    return out;
}

std::string amalgamateScript(const AmalgSpec& spec) {
    std::ostringstream os;
    os << "amalgamate center=" << spec.center << " side="
       << (spec.side == AmalgSide::PartnersBelow ? "below" : "above") << " partners=";
    for (size_t i = 0; i < spec.partners.size(); ++i)
        os << (i ? "," : "") << spec.partners[i];
    bool any_tube = false;
    for (const auto& [e, n] : spec.tubes) any_tube |= n != 1;
    if (any_tube) {
        os << " tubes=";
        bool first = true;
        for (const auto& [e, n] : spec.tubes) {
            if (n == 1) continue;
            os << (first ? "" : ",") << e << ":" << n;
            first = false;
        }
    }
    return os.str();
}

std::pair<GeneralizedSurface, MoveLog> fullyAmalgamate(const GeneralizedSurface& g) {
    requireValid(g);
    HeightFn f = computeHeight(g);  // CyclicInput on cycles
    GeneralizedSurface out = g;
    MoveLog log;
    while (out.edges.size() > 1) {
        AmalgSpec spec;
        bool picked = false;
        for (const auto& v : out.vertices) {
            auto partners = consistentPartners(out, f, v);
            if (partners.empty()) continue;
            auto info = vertexInfo(out, v);
            spec.center = info.plus_edge;
            spec.side = info.below ? AmalgSide::PartnersBelow : AmalgSide::PartnersAbove;
            spec.partners.assign(partners.begin(), partners.end());
            picked = true;
            break;
        }
        if (!picked)
            throw GhsError(Err::InvalidSurface, "no amalgamation available");
        HeightFn next_f = inducedHeight(out, f, spec);
        out = amalgamate(out, spec);
        f = std::move(next_f);
        log.push_back(amalgamateScript(spec));
    }
    return {out, log};
}

GeneralizedSurface selfAmalgamate(const GeneralizedSurface& g,
                                  const SphereCollection& p) {
    requireValid(g);
    if (p.edges.empty()) return g;

    std::vector<EdgeId> thick;
    for (const auto& [id, e] : g.edges)
        if (e.role == EdgeRole::Thick) thick.push_back(id);
    if (thick.size() != 1)
        throw GhsError(Err::NotSelfAmalgamatable, "need a single thick edge");
    const SurfaceEdge& h = g.edges.at(thick.front());

    for (const auto& eid : p.edges) {
        auto it = g.edges.find(eid);
        if (it == g.edges.end()) throw GhsError(Err::UnknownEdge, eid);
        const auto& e = it->second;
        if (e.role != EdgeRole::Thin || e.genus != 0 || e.tail != h.head ||
            e.head != h.tail)
            throw GhsError(Err::NotSelfAmalgamatable,
                           eid + " does not loop back across " + h.id);
    }

    GeneralizedSurface out = g;
    for (auto& [id, s] : out.spheres) {
        if (s.state != SphereState::Hosted) continue;
        int hit = 0;
        for (const auto& e : s.encloses)
            if (p.edges.count(e)) hit++;
        if (hit > 0) {
            s.state = SphereState::Crossing;
            s.edge = h.id;
            s.count = hit;
            s.host.clear();
            s.encloses.clear();
        }
    }
    for (const auto& eid : p.edges) out.edges.erase(eid);
    out.edges.at(h.id).genus += static_cast<int>(p.edges.size());
    requireValid(out);
    return out;
}

GeneralizedSurface mergeTubes(const GeneralizedSurface& g, const TrackId& s) {
    requireValid(g);
    GeneralizedSurface out = g;
    if (auto it = out.spheres.find(s); it != out.spheres.end()) {
        if (it->second.state != SphereState::Crossing || it->second.count < 2)
            throw GhsError(Err::NothingToMerge, s);
        it->second.count = 1;
        return out;
    }
    if (auto it = out.discs.find(s); it != out.discs.end()) {
        if (it->second.count < 2) throw GhsError(Err::NothingToMerge, s);
        it->second.count = 1;
        return out;
    }
    throw GhsError(Err::UnknownTracked, s);
}

std::pair<GeneralizedSurface, MoveLog> amalgamationObtained(const GeneralizedSurface& g) {
    requireValid(g);
    SphereCollection p = minimalCompleteCollection(g);

    GeneralizedSurface rest = g;
    std::map<TrackId, std::set<EdgeId>> pending;
    for (auto& [id, s] : rest.spheres) {
        if (s.state != SphereState::Hosted) continue;
        for (const auto& e : p.edges)
            if (s.encloses.erase(e)) pending[id].insert(e);
    }
    std::map<EdgeId, SurfaceEdge> stashed;
    for (const auto& eid : p.edges) {
        stashed[eid] = rest.edges.at(eid);
        rest.edges.erase(eid);
    }

    auto [amalg, log] = fullyAmalgamate(rest);
    if (p.edges.empty()) return {amalg, log};

    const SurfaceEdge& h = amalg.edges.begin()->second;
    GeneralizedSurface withp = amalg;
    for (auto& [eid, e] : stashed) {
        e.tail = h.head;  // every old thin tail merged into the head side
        e.head = h.tail;
        withp.edges[eid] = e;
    }
    for (auto& [id, pend] : pending) {
        auto& s = withp.spheres.at(id);
        if (s.state == SphereState::Hosted)
            s.encloses.insert(pend.begin(), pend.end());
    }
    requireValid(withp);

    GeneralizedSurface out = selfAmalgamate(withp, p);
    for (auto& [id, pend] : pending) {
        auto& s = out.spheres.at(id);
        if (s.state == SphereState::Crossing && !pend.empty()) {
            // Tubes through the stashed spheres also pierce a sphere that
            // crossed earlier in the sequence.
            auto& orig = withp.spheres.at(id);
            if (orig.state == SphereState::Crossing) s.count += static_cast<int>(pend.size());
        }
    }
    // The fine-grained lines describe the surface with the collection
    // removed; replaying them against the full surface would cross the
    // set-aside spheres.  The faithful script is the composite verb.
    log.assign(1, "amalgobtained");
    return {out, log};
}

CanonicalData canonicalData(const GeneralizedSurface& g) {
    requireValid(g);
    if (g.edges.size() != 1)
        throw GhsError(Err::PreconditionFailed, "not fully amalgamated");
    const SurfaceEdge& h = g.edges.begin()->second;
    CanonicalData d;
    d.final_genus = h.genus;
    for (const auto& [id, m] : g.marks)
        (m.vertex == h.tail ? d.below_boundary : d.above_boundary).push_back(m.genus);
    std::sort(d.below_boundary.begin(), d.below_boundary.end());
    std::sort(d.above_boundary.begin(), d.above_boundary.end());
    for (const auto& [id, s] : g.spheres) {
        if (s.state == SphereState::Crossing)
            d.tracked[id] = 1;  // after the tube merge isotopy
        else
            d.tracked[id] = s.host == h.tail ? -1 : -2;
    }
    for (const auto& [id, dd] : g.discs) d.tracked[id] = 1;
    return d;
}

}  // namespace ghs
