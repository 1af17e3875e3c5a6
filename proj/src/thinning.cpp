#include "ghs/thinning.hpp"

#include <algorithm>
#include <sstream>

namespace ghs {

namespace {

std::string uniqueKey(const std::string& base,
                      const std::function<bool(const std::string&)>& taken) {
    if (!taken(base)) return base;
    for (int i = 2;; ++i) {
        std::string cand = base + "~" + std::to_string(i);
        if (!taken(cand)) return cand;
    }
}

struct UntelResult {
    GeneralizedSurface surface;
    // component id -> new thick edge / outer vertex, per side
    std::map<std::string, EdgeId> below_thick, above_thick;
    std::map<std::string, VertexId> bottom_vertex, top_vertex;
};

UntelResult untelescopeImpl(const GeneralizedSurface& g, const EdgeId& h,
                            const SplitTree& t) {
    requireValid(g);
    auto eit = g.edges.find(h);
    if (eit == g.edges.end()) throw GhsError(Err::UnknownEdge, h);
    const SurfaceEdge& edge = eit->second;
    if (edge.role != EdgeRole::Thick)
        throw GhsError(Err::GenusMismatch, h + " is not thick");
    if (t.root_genus != edge.genus)
        throw GhsError(Err::GenusMismatch, "plan root genus " +
                                               std::to_string(t.root_genus) +
                                               " != genus of " + h);
    if (!hasEvent(t, SplitSide::Below) || !hasEvent(t, SplitSide::Above))
        throw GhsError(Err::EmptyPlan, "both sides of the plan need an event");

    auto lvs = leaves(t);  // validates the tree
    auto below = project(t, SplitSide::Below);
    auto above = project(t, SplitSide::Above);

    std::set<std::string> leaf_ids;
    std::map<std::string, int> leaf_genus;
    for (const auto& [id, gn] : lvs) {
        leaf_ids.insert(id);
        leaf_genus[id] = gn;
    }
    std::map<std::string, const ProjComponent*> below_of, above_of;
    for (const auto& c : below)
        for (const auto& l : c.leaf_group) below_of[l] = &c;
    for (const auto& c : above)
        for (const auto& l : c.leaf_group) above_of[l] = &c;

    const VertexId u = edge.tail;  // below-side endpoint
    const VertexId w = edge.head;

    // Every old negative-boundary element of u and w must be assigned to
    // a leaf, and nothing else may be.
    std::map<std::string, int> elem_genus;
    std::set<std::string> u_elems, w_elems;
    for (const auto& e : thinEdgesAt(g, u)) {
        u_elems.insert(e);
        elem_genus[e] = g.edges.at(e).genus;
    }
    for (const auto& e : thinEdgesAt(g, w)) {
        w_elems.insert(e);
        elem_genus[e] = g.edges.at(e).genus;
    }
    for (const auto& [id, m] : g.marks) {
        if (m.vertex == u) u_elems.insert(id);
        if (m.vertex == w) w_elems.insert(id);
        if (m.vertex == u || m.vertex == w) elem_genus[id] = m.genus;
    }
    for (const auto& [k, v] : t.assignment) {
        if (!u_elems.count(k) && !w_elems.count(k))
            throw GhsError(Err::BadAssignment, "unknown element " + k);
        if (!leaf_ids.count(v))
            throw GhsError(Err::BadAssignment, "unknown leaf " + v);
    }
    auto componentOf = [&](const std::string& elem, bool below_side) {
        auto it = t.assignment.find(elem);
        if (it == t.assignment.end())
            throw GhsError(Err::BadAssignment, "unassigned element " + elem);
        return below_side ? below_of.at(it->second) : above_of.at(it->second);
    };
    std::map<std::string, int> load;  // component id (per side prefix) -> genus sum
    for (const auto& e : u_elems) load["b:" + componentOf(e, true)->id] += elem_genus[e];
    for (const auto& e : w_elems) load["a:" + componentOf(e, false)->id] += elem_genus[e];
    for (const auto& c : below)
        if (load.count("b:" + c.id) && load["b:" + c.id] > c.genus)
            throw GhsError(Err::RealizabilityViolation, "component " + c.id);
    for (const auto& c : above)
        if (load.count("a:" + c.id) && load["a:" + c.id] > c.genus)
            throw GhsError(Err::RealizabilityViolation, "component " + c.id);

    UntelResult res;
    GeneralizedSurface& out = res.surface;
    out = g;
    out.edges.erase(h);
    out.vertices.erase(u);
    out.vertices.erase(w);

    auto edgeTaken = [&out](const std::string& id) { return out.edges.count(id) > 0; };
    auto vertTaken = [&out](const std::string& id) { return out.vertices.count(id) > 0; };

    std::map<std::string, VertexId> lower_mid, upper_mid;
    for (const auto& c : below) {
        VertexId bv = uniqueKey(h + ".bv." + c.id, vertTaken);
        out.vertices.insert(bv);
        VertexId lm = uniqueKey(h + ".lm." + c.id, vertTaken);
        out.vertices.insert(lm);
        EdgeId te = uniqueKey(h + ".b." + c.id, edgeTaken);
        out.edges[te] = {te, EdgeRole::Thick, c.genus, bv, lm};
        res.bottom_vertex[c.id] = bv;
        res.below_thick[c.id] = te;
        lower_mid[c.id] = lm;
    }
    for (const auto& c : above) {
        VertexId tv = uniqueKey(h + ".tv." + c.id, vertTaken);
        out.vertices.insert(tv);
        VertexId um = uniqueKey(h + ".um." + c.id, vertTaken);
        out.vertices.insert(um);
        EdgeId te = uniqueKey(h + ".a." + c.id, edgeTaken);
        out.edges[te] = {te, EdgeRole::Thick, c.genus, um, tv};
        res.top_vertex[c.id] = tv;
        res.above_thick[c.id] = te;
        upper_mid[c.id] = um;
    }
    for (const auto& [lid, gn] : lvs) {
        EdgeId fe = uniqueKey(h + ".f." + lid, edgeTaken);
        out.edges[fe] = {fe, EdgeRole::Thin, gn, lower_mid.at(below_of.at(lid)->id),
                         upper_mid.at(above_of.at(lid)->id)};
    }

    // Reattach the old negative boundary.
    for (const auto& e : u_elems) {
        auto target = res.bottom_vertex.at(componentOf(e, true)->id);
        if (out.edges.count(e)) {
            // thin edges at u point into it
            out.edges[e].head = target;
        } else {
            out.marks[e].vertex = target;
        }
    }
    for (const auto& e : w_elems) {
        auto target = res.top_vertex.at(componentOf(e, false)->id);
        if (out.edges.count(e)) {
            out.edges[e].tail = target;
        } else {
            out.marks[e].vertex = target;
        }
    }

    // Carry tracked objects when the rewrite leaves them unambiguous.
    for (auto& [id, s] : out.spheres) {
        if (s.state == SphereState::Crossing) {
            if (s.edge == h)
                throw GhsError(Err::TrackedObstruction, id + " crosses " + h);
            continue;
        }
        if (s.host != u && s.host != w) continue;
        bool at_u = s.host == u;
        std::set<std::string> comps;
        for (const auto& e : s.encloses) comps.insert(componentOf(e, at_u)->id);
        if (comps.size() > 1)
            throw GhsError(Err::TrackedObstruction,
                           id + " spans several components");
        if (comps.empty())
            throw GhsError(Err::TrackedObstruction,
                           id + " has no anchor among the split components");
        s.host = at_u ? res.bottom_vertex.at(*comps.begin())
                      : res.top_vertex.at(*comps.begin());
    }
    for (const auto& [id, d] : out.discs)
        if (d.edge == h) throw GhsError(Err::TrackedObstruction, id + " crosses " + h);

    requireValid(out);
    return res;
}

}  // namespace

GeneralizedSurface untelescope(const GeneralizedSurface& g, const EdgeId& h,
                               const SplitTree& t) {
    return untelescopeImpl(g, h, t).surface;
}

GeneralizedSurface consolidate(const GeneralizedSurface& g, const EdgeId& h,
                               const EdgeId& f) {
    requireValid(g);
    auto hit = g.edges.find(h);
    auto fit = g.edges.find(f);
    if (hit == g.edges.end()) throw GhsError(Err::UnknownEdge, h);
    if (fit == g.edges.end()) throw GhsError(Err::UnknownEdge, f);
    if (hit->second.role != EdgeRole::Thick || fit->second.role != EdgeRole::Thin)
        throw GhsError(Err::NotProduct, "need a thick/thin pair");

    // The product vertex carries h as its thick edge and f as its only
    // negative boundary, with equal genera.
    VertexId v;
    bool found = false;
    for (const VertexId& cand : {hit->second.tail, hit->second.head}) {
        if (cand != fit->second.tail && cand != fit->second.head) continue;
        auto info = vertexInfo(g, cand);
        if (info.plus_edge == h && info.thin == std::vector<EdgeId>{f} &&
            info.mark_ids.empty() && info.plus_genus == fit->second.genus) {
            v = cand;
            found = true;
            break;
        }
    }
    if (!found) throw GhsError(Err::NotProduct, h + "/" + f);

    VertexId x = hit->second.tail == v ? hit->second.head : hit->second.tail;
    VertexId y = fit->second.tail == v ? fit->second.head : fit->second.tail;
    if (x == y) throw GhsError(Err::DegenerateConsolidation, h + "/" + f);

    for (const auto& [id, s] : g.spheres) {
        if (s.state == SphereState::Crossing && s.edge == h)
            throw GhsError(Err::TrackedObstruction, id + " crosses " + h);
        if (s.state == SphereState::Hosted && s.host == v)
            throw GhsError(Err::TrackedObstruction, id + " hosted at " + v);
        if (s.state == SphereState::Hosted && s.encloses.count(f))
            throw GhsError(Err::TrackedObstruction, id + " encloses " + f);
    }
    for (const auto& [id, d] : g.discs)
        if (d.edge == h) throw GhsError(Err::TrackedObstruction, id + " crosses " + h);

    GeneralizedSurface out = g;
    out.edges.erase(h);
    out.edges.erase(f);
    out.vertices.erase(v);
    out.vertices.erase(x);
    for (auto& [id, e] : out.edges) {
        if (e.tail == x) e.tail = y;
        if (e.head == x) e.head = y;
    }
    for (auto& [id, m] : out.marks)
        if (m.vertex == x) m.vertex = y;
    for (auto& [id, s] : out.spheres)
        if (s.state == SphereState::Hosted && s.host == x) s.host = y;

    requireValid(out);
    return out;
}

GeneralizedSurface typeIIMove(const GeneralizedSurface& g, const EdgeId& h,
                              const SplitTree& t, const EdgeId& target) {
    bool below_semi = allSemi(t, SplitSide::Below);
    bool above_semi = allSemi(t, SplitSide::Above);
    bool below_comp = hasCompressingEvent(t, SplitSide::Below);
    bool above_comp = hasCompressingEvent(t, SplitSide::Above);
    if (below_comp && above_comp)
        throw GhsError(Err::NotTypeII, "both sides compress (type I plan)");
    if (!(below_semi && above_comp) && !(above_semi && below_comp))
        throw GhsError(Err::NotTypeII, "need one all-Semi side and one compressing side");

    auto res = untelescopeImpl(g, h, t);
    SplitSide semi_side = below_semi ? SplitSide::Below : SplitSide::Above;
    auto comps = project(t, semi_side);
    const ProjComponent* main = nullptr;
    for (const auto& c : comps)
        if (c.genus == t.root_genus) main = &c;
    if (!main || t.root_genus == 0)
        throw GhsError(Err::NotConsolidable, "no positive-genus component to consolidate");

    EdgeId side_thick = below_semi ? res.below_thick.at(main->id)
                                   : res.above_thick.at(main->id);
    VertexId outer = below_semi ? res.bottom_vertex.at(main->id)
                                : res.top_vertex.at(main->id);
    auto info = vertexInfo(res.surface, outer);
    if (info.thin != std::vector<EdgeId>{target} || !info.mark_ids.empty() ||
        res.surface.edges.at(target).genus != info.plus_genus)
        throw GhsError(Err::NotConsolidable,
                       "component " + main->id + " is not a product with " + target);
    return consolidate(res.surface, side_thick, target);
}

GeneralizedSurface applyThinningMove(const GeneralizedSurface& g, const ThinningMove& m) {
    if (const auto* c = std::get_if<ConsolidateMove>(&m))
        return consolidate(g, c->h, c->f);
    if (const auto* u = std::get_if<UntelescopeMove>(&m))
        return untelescope(g, u->h, u->tree);
    const auto& t = std::get<TypeIIPlan>(m);
    return typeIIMove(g, t.h, t.tree, t.target);
}

namespace {

std::string assignText(const SplitTree& t) {
    std::string s;
    for (const auto& [k, v] : t.assignment) {
        if (!s.empty()) s += ",";
        s += k + ":" + v;
    }
    return s;
}

}  // namespace

std::string thinningMoveScript(const ThinningMove& m) {
    std::ostringstream os;
    if (const auto* c = std::get_if<ConsolidateMove>(&m)) {
        os << "consolidate h=" << c->h << " f=" << c->f;
    } else if (const auto* u = std::get_if<UntelescopeMove>(&m)) {
        os << "untelescope h=" << u->h << " tree=" << treeText(u->tree);
        if (!u->tree.assignment.empty()) os << " assign=" << assignText(u->tree);
    } else {
        const auto& t = std::get<TypeIIPlan>(m);
        os << "type2 h=" << t.h << " tree=" << treeText(t.tree) << " target=" << t.target;
        if (!t.tree.assignment.empty()) os << " assign=" << assignText(t.tree);
    }
    return os.str();
}

ThinResult thinToLocal(const GeneralizedSurface& g, const MoveChooser& choose) {
    requireValid(g);
    ThinResult res{g, {}, std::nullopt};
    WidthSeq prev = width(res.surface);
    while (true) {
        auto m = choose(res.surface);
        if (!m) break;
        GeneralizedSurface next;
        try {
            next = applyThinningMove(res.surface, *m);
        } catch (const GhsError& e) {
            res.error = e.what();
            return res;
        }
        WidthSeq wn = width(next);
        if (compareWidth(wn, prev) != Ord::LT) {
            res.error = "width did not strictly decrease: " + thinningMoveScript(*m);
            return res;
        }
        res.log.push_back(thinningMoveScript(*m));
        res.surface = std::move(next);
        prev = std::move(wn);
    }
    return res;
}

namespace {

std::optional<ThinningMove> findConsolidation(const GeneralizedSurface& g) {
    for (const auto& v : g.vertices) {
        auto info = vertexInfo(g, v);
        if (info.minus_size != 1 || info.thin.size() != 1) continue;
        const EdgeId& f = info.thin.front();
        if (g.edges.at(f).genus != info.plus_genus) continue;
        const auto& he = g.edges.at(info.plus_edge);
        const auto& fe = g.edges.at(f);
        VertexId x = he.tail == v ? he.head : he.tail;
        VertexId y = fe.tail == v ? fe.head : fe.tail;
        if (x == y) continue;
        return ConsolidateMove{info.plus_edge, f};
    }
    return std::nullopt;
}

}  // namespace

MoveChooser greedyConsolidation() {
    return [](const GeneralizedSurface& g) { return findConsolidation(g); };
}

MoveChooser nonsepCascade() {
    return [](const GeneralizedSurface& g) -> std::optional<ThinningMove> {
        if (auto c = findConsolidation(g)) return c;
        for (const auto& [id, e] : g.edges) {
            if (e.role != EdgeRole::Thick || e.genus < 2) continue;
            auto tail_info = vertexInfo(g, e.tail);
            auto head_info = vertexInfo(g, e.head);
            if (tail_info.minus_genus > e.genus - 1) continue;
            if (head_info.minus_genus > e.genus - 1) continue;
            SplitTree t = makeLeafTree(e.genus, "l0");
            int child = addEvent(t, 0, SplitSide::Below, SplitKind::NonSep, 0, "l0", "");
            addEvent(t, child, SplitSide::Above, SplitKind::NonSep, 0, "l0", "");
            for (const auto& f : tail_info.thin) t.assignment[f] = "l0";
            for (const auto& f : head_info.thin) t.assignment[f] = "l0";
            for (const auto& m : tail_info.mark_ids) t.assignment[m] = "l0";
            for (const auto& m : head_info.mark_ids) t.assignment[m] = "l0";
            return UntelescopeMove{id, t};
        }
        return std::nullopt;
    };
}

}  // namespace ghs
