#include "ghs/digraph.hpp"

#include <algorithm>
#include <functional>

namespace ghs {

namespace {

struct OutEdge {
    EdgeId id;
    VertexId head;
};

std::map<VertexId, std::vector<OutEdge>> outAdjacency(const GeneralizedSurface& g) {
    std::map<VertexId, std::vector<OutEdge>> adj;
    for (const auto& v : g.vertices) adj[v];
    for (const auto& [id, e] : g.edges) adj[e.tail].push_back({id, e.head});
    return adj;
}

bool acyclicIgnoring(const GeneralizedSurface& g, const std::set<EdgeId>& skip) {
    // Kahn's algorithm on the directed graph minus the skipped edges.
    std::map<VertexId, int> indeg;
    std::map<VertexId, std::vector<VertexId>> succ;
    for (const auto& v : g.vertices) indeg[v] = 0;
    for (const auto& [id, e] : g.edges) {
        if (skip.count(id)) continue;
        succ[e.tail].push_back(e.head);
        indeg[e.head]++;
    }
    std::vector<VertexId> ready;
    for (const auto& [v, d] : indeg)
        if (d == 0) ready.push_back(v);
    size_t removed = 0;
    while (!ready.empty()) {
        VertexId v = ready.back();
        ready.pop_back();
        removed++;
        for (const auto& w : succ[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return removed == g.vertices.size();
}

bool connectedIgnoring(const GeneralizedSurface& g, const std::set<EdgeId>& skip) {
    if (g.vertices.empty()) return true;
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& [id, e] : g.edges) {
        if (skip.count(id)) continue;
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
    return seen.size() == g.vertices.size();
}

}  // namespace

std::vector<std::vector<EdgeId>> coherentCycles(const GeneralizedSurface& g) {
    auto adj = outAdjacency(g);
    std::vector<std::vector<EdgeId>> cycles;

    // For each start vertex (in order), find simple cycles whose least
    // vertex is the start; parallel edges give distinct cycles.
    std::vector<VertexId> order(g.vertices.begin(), g.vertices.end());
    for (const auto& start : order) {
        std::vector<EdgeId> path;
        std::set<VertexId> on_path;
        std::function<void(const VertexId&)> dfs = [&](const VertexId& v) {
            for (const auto& [eid, head] : adj[v]) {
                if (head == start) {
                    path.push_back(eid);
                    cycles.push_back(path);
                    path.pop_back();
                } else if (head > start && !on_path.count(head)) {
                    path.push_back(eid);
                    on_path.insert(head);
                    dfs(head);
                    on_path.erase(head);
                    path.pop_back();
                }
            }
        };
        dfs(start);
    }

    for (auto& c : cycles) {
        auto least = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), least, c.end());
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

bool isAcyclic(const GeneralizedSurface& g) {
    return acyclicIgnoring(g, {});
}

HeightFn computeHeight(const GeneralizedSurface& g) {
    requireValid(g);
    if (!isAcyclic(g)) throw GhsError(Err::CyclicInput, "coherent cycle present");

    // Longest path (in edges) from any source to each vertex.
    std::map<VertexId, int> indeg, dist;
    std::map<VertexId, std::vector<VertexId>> succ;
    for (const auto& v : g.vertices) {
        indeg[v] = 0;
        dist[v] = 0;
    }
    for (const auto& [id, e] : g.edges) {
        succ[e.tail].push_back(e.head);
        indeg[e.head]++;
    }
    std::vector<VertexId> ready;
    for (const auto& [v, d] : indeg)
        if (d == 0) ready.push_back(v);
    if (ready.empty()) throw GhsError(Err::CyclicInput, "no source vertex");
    while (!ready.empty()) {
        VertexId v = ready.back();
        ready.pop_back();
        for (const auto& w : succ[v]) {
            dist[w] = std::max(dist[w], dist[v] + 1);
            if (--indeg[w] == 0) ready.push_back(w);
        }
    }

    HeightFn f;
    for (const auto& [id, e] : g.edges)
        f.assignment[id] = dist[e.tail] + 1;
    return f;
}

bool verifyHeight(const GeneralizedSurface& g, const HeightFn& f) {
    requireValid(g);
    for (const auto& [id, e] : g.edges) {
        auto it = f.assignment.find(id);
        if (it == f.assignment.end()) return false;
        if (it->second < 0) return false;
        bool odd = it->second % 2 != 0;
        if (odd != (e.role == EdgeRole::Thick)) return false;
    }
    for (const auto& v : g.vertices) {
        auto info = vertexInfo(g, v);
        int plus = f.assignment.at(info.plus_edge);
        for (const auto& t : info.thin) {
            int ft = f.assignment.at(t);
            if (info.below ? ft >= plus : ft <= plus) return false;
        }
    }
    return true;
}

bool cycleSphereCondition(const GeneralizedSurface& g) {
    // Every cycle carries a thin sphere iff deleting all thin spheres
    // makes the digraph acyclic.
    std::set<EdgeId> spheres;
    for (const auto& [id, e] : g.edges)
        if (e.role == EdgeRole::Thin && e.genus == 0) spheres.insert(id);
    return acyclicIgnoring(g, spheres);
}

SphereCollection minimalCompleteCollection(const GeneralizedSurface& g) {
    requireValid(g);
    if (!cycleSphereCondition(g))
        throw GhsError(Err::NoCollection, "a coherent cycle avoids all thin spheres");

    std::vector<EdgeId> candidates;
    for (const auto& [id, e] : g.edges)
        if (e.role == EdgeRole::Thin && e.genus == 0) candidates.push_back(id);

    // Size-ordered, then lexicographic, subset search.  Desk scale.
    size_t n = candidates.size();
    for (size_t k = 0; k <= n; ++k) {
        std::vector<size_t> pick(k);
        std::function<bool(size_t, size_t)> choose = [&](size_t idx, size_t from) -> bool {
            if (idx == k) {
                std::set<EdgeId> subset;
                for (size_t i : pick) subset.insert(candidates[i]);
                return acyclicIgnoring(g, subset) && connectedIgnoring(g, subset);
            }
            for (size_t i = from; i + (k - idx) <= n; ++i) {
                pick[idx] = i;
                if (choose(idx + 1, i + 1)) return true;
            }
            return false;
        };
        if (choose(0, 0)) {
            SphereCollection c;
            for (size_t i : pick) c.edges.insert(candidates[i]);
            return c;
        }
    }
    throw GhsError(Err::NoCollection, "no qualifying subset");
}

bool isBridge(const GeneralizedSurface& g, const EdgeId& e) {
    if (!g.edges.count(e)) throw GhsError(Err::UnknownEdge, e);
    return !connectedIgnoring(g, {e});
}

}  // namespace ghs
