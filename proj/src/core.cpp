#include "ghs/core.hpp"

#include <algorithm>
#include <sstream>

namespace ghs {

const char* errName(Err e) {
    switch (e) {
        case Err::InvalidSurface: return "InvalidSurface";
        case Err::UnknownVertex: return "UnknownVertex";
        case Err::UnknownEdge: return "UnknownEdge";
        case Err::UnknownMark: return "UnknownMark";
        case Err::UnknownTracked: return "UnknownTracked";
        case Err::CyclicInput: return "CyclicInput";
        case Err::NoCollection: return "NoCollection";
        case Err::GenusMismatch: return "GenusMismatch";
        case Err::RealizabilityViolation: return "RealizabilityViolation";
        case Err::EmptyPlan: return "EmptyPlan";
        case Err::BadAssignment: return "BadAssignment";
        case Err::MalformedTree: return "MalformedTree";
        case Err::NotProduct: return "NotProduct";
        case Err::DegenerateConsolidation: return "DegenerateConsolidation";
        case Err::NotTypeII: return "NotTypeII";
        case Err::NotConsolidable: return "NotConsolidable";
        case Err::OrientationMismatch: return "OrientationMismatch";
        case Err::NotAdjacent: return "NotAdjacent";
        case Err::TubeBudget: return "TubeBudget";
        case Err::InconsistentSpec: return "InconsistentSpec";
        case Err::NotSelfAmalgamatable: return "NotSelfAmalgamatable";
        case Err::NothingToMerge: return "NothingToMerge";
        case Err::BadIncidence: return "BadIncidence";
        case Err::NonSphereEnclosure: return "NonSphereEnclosure";
        case Err::PatternViolation: return "PatternViolation";
        case Err::TrackedObstruction: return "TrackedObstruction";
        case Err::PreconditionFailed: return "PreconditionFailed";
        case Err::ParseError: return "ParseError";
    }
    return "Unknown";
}

GhsError::GhsError(Err c, const std::string& msg)
    : std::runtime_error(std::string(errName(c)) + ": " + msg), code(c) {}

std::string ValidationReport::joined() const {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v;
    }
    return out;
}

namespace {

struct Incidence {
    std::vector<EdgeId> thick_in, thick_out, thin_in, thin_out;
    std::vector<MarkId> marks;
};

std::map<VertexId, Incidence> buildIncidence(const GeneralizedSurface& g) {
    std::map<VertexId, Incidence> inc;
    for (const auto& v : g.vertices) inc[v];
    for (const auto& [id, e] : g.edges) {
        if (!g.vertices.count(e.tail) || !g.vertices.count(e.head)) continue;
        if (e.role == EdgeRole::Thick) {
            inc[e.tail].thick_out.push_back(id);
            inc[e.head].thick_in.push_back(id);
        } else {
            inc[e.tail].thin_out.push_back(id);
            inc[e.head].thin_in.push_back(id);
        }
    }
    for (const auto& [id, m] : g.marks)
        if (g.vertices.count(m.vertex)) inc[m.vertex].marks.push_back(id);
    return inc;
}

}  // namespace

ValidationReport validate(const GeneralizedSurface& g) {
    ValidationReport r;
    auto bad = [&r](const std::string& s) { r.violations.push_back(s); };

    for (const auto& [id, e] : g.edges) {
        if (!g.vertices.count(e.tail)) bad("unknown-vertex:" + id + ":" + e.tail);
        if (!g.vertices.count(e.head)) bad("unknown-vertex:" + id + ":" + e.head);
        if (e.tail == e.head) bad("loop:" + id);
        if (e.genus < 0) bad("edge-genus:" + id);
    }
    for (const auto& [id, m] : g.marks) {
        if (!g.vertices.count(m.vertex)) bad("unknown-vertex:" + id + ":" + m.vertex);
        if (m.genus < 1) bad("mark-genus:" + id);
    }

    if (g.edges.empty()) bad("no-edges");
    bool any_thick = false;
    for (const auto& [id, e] : g.edges)
        if (e.role == EdgeRole::Thick) any_thick = true;
    if (!g.edges.empty() && !any_thick) bad("no-thick");

    auto inc = buildIncidence(g);
    for (const auto& [v, i] : inc) {
        size_t nthick = i.thick_in.size() + i.thick_out.size();
        if (nthick != 1) {
            bad("thick-count:" + v);
            continue;
        }
        bool above = !i.thick_in.empty();  // plus edge incoming
        // Above: thin edges all outgoing.  Below: all incoming.
        if (above && !i.thin_in.empty()) bad("pattern:" + v);
        if (!above && !i.thin_out.empty()) bad("pattern:" + v);

        const EdgeId& plus = above ? i.thick_in.front() : i.thick_out.front();
        int plus_genus = g.edges.at(plus).genus;
        int minus_genus = 0;
        for (const auto& t : i.thin_in) minus_genus += g.edges.at(t).genus;
        for (const auto& t : i.thin_out) minus_genus += g.edges.at(t).genus;
        for (const auto& m : i.marks) minus_genus += g.marks.at(m).genus;
        if (plus_genus < minus_genus) bad("realizability:" + v);
    }

    // Connectivity of the underlying undirected graph.
    if (!g.vertices.empty()) {
        std::map<VertexId, std::vector<VertexId>> adj;
        for (const auto& [id, e] : g.edges) {
            if (!g.vertices.count(e.tail) || !g.vertices.count(e.head)) continue;
            adj[e.tail].push_back(e.head);
            adj[e.head].push_back(e.tail);
        }
        std::set<VertexId> seen;
        std::vector<VertexId> stack{*g.vertices.begin()};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            if (!seen.insert(v).second) continue;
            for (const auto& w : adj[v]) stack.push_back(w);
        }
        if (seen.size() != g.vertices.size()) bad("connectivity");
    }

    for (const auto& [id, s] : g.spheres) {
        if (s.state == SphereState::Hosted) {
            if (!g.vertices.count(s.host)) {
                bad("sphere-host:" + id);
                continue;
            }
            for (const auto& e : s.encloses) {
                auto it = g.edges.find(e);
                bool ok = it != g.edges.end() && it->second.role == EdgeRole::Thin &&
                          it->second.genus == 0 &&
                          (it->second.tail == s.host || it->second.head == s.host);
                if (!ok) bad("sphere-encloses:" + id + ":" + e);
            }
        } else {
            auto it = g.edges.find(s.edge);
            if (it == g.edges.end() || it->second.role != EdgeRole::Thick)
                bad("sphere-crossing:" + id);
            if (s.count < 1) bad("sphere-count:" + id);
        }
    }
    for (const auto& [id, d] : g.discs) {
        auto it = g.edges.find(d.edge);
        if (it == g.edges.end() || it->second.role != EdgeRole::Thick)
            bad("disc-edge:" + id);
        if (d.count < 1) bad("disc-count:" + id);
        if (!g.marks.count(d.boundary)) bad("disc-boundary:" + id);
    }

    return r;
}

void requireValid(const GeneralizedSurface& g) {
    auto r = validate(g);
    if (!r.ok()) throw GhsError(Err::InvalidSurface, r.joined());
}

bool isHeegaard(const GeneralizedSurface& g) {
    requireValid(g);
    return g.edges.size() == 1 && g.vertices.size() == 2;
}

VertexInfo vertexInfo(const GeneralizedSurface& g, const VertexId& v) {
    if (!g.vertices.count(v)) throw GhsError(Err::UnknownVertex, v);
    VertexInfo info;
    info.id = v;
    std::vector<EdgeId> thick;
    for (const auto& [id, e] : g.edges) {
        if (e.tail != v && e.head != v) continue;
        if (e.role == EdgeRole::Thick) {
            thick.push_back(id);
            info.below = (e.tail == v);
        } else {
            info.thin.push_back(id);
        }
    }
    if (thick.size() != 1)
        throw GhsError(Err::InvalidSurface, "thick-count:" + v);
    info.plus_edge = thick.front();
    info.plus_genus = g.edges.at(info.plus_edge).genus;
    for (const auto& t : info.thin) info.minus_genus += g.edges.at(t).genus;
    for (const auto& [id, m] : g.marks)
        if (m.vertex == v) {
            info.mark_ids.push_back(id);
            info.minus_genus += m.genus;
        }
    info.minus_size = static_cast<int>(info.thin.size() + info.mark_ids.size());
    info.handles = info.minus_size == 0
                       ? info.plus_genus
                       : info.plus_genus - info.minus_genus + info.minus_size - 1;
    return info;
}

bool isProductVertex(const GeneralizedSurface& g, const VertexId& v) {
    requireValid(g);
    auto info = vertexInfo(g, v);
    return info.minus_size == 1 && info.thin.size() == 1 &&
           g.edges.at(info.thin.front()).genus == info.plus_genus;
}

std::vector<EdgeId> thinEdgesAt(const GeneralizedSurface& g, const VertexId& v) {
    std::vector<EdgeId> out;
    for (const auto& [id, e] : g.edges)
        if (e.role == EdgeRole::Thin && (e.tail == v || e.head == v))
            out.push_back(id);
    return out;
}

}  // namespace ghs
