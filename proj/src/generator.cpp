#include "ghs/generator.hpp"

#include <algorithm>
#include <vector>

namespace ghs {

uint64_t Rng::next() {
    // splitmix64
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

int Rng::range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
}

bool Rng::chance(int num, int den) {
    return below(static_cast<uint64_t>(den)) < static_cast<uint64_t>(num);
}

GeneralizedSurface randomSurface(uint64_t seed, const GenLimits& limits) {
    Rng rng(seed);
    GeneralizedSurface g;

    int blocks = rng.range(1, std::max(1, limits.max_thick));
    auto tail_of = [](int k) { return "v" + std::to_string(k) + "a"; };
    auto head_of = [](int k) { return "v" + std::to_string(k) + "b"; };
    auto thick_of = [](int k) { return "H" + std::to_string(k); };

    for (int k = 0; k < blocks; ++k) {
        g.vertices.insert(tail_of(k));
        g.vertices.insert(head_of(k));
        g.edges[thick_of(k)] = {thick_of(k), EdgeRole::Thick, 0, tail_of(k), head_of(k)};
    }

    // Thin edges run from the head of a lower block to the tail of a
    // higher one; blocks are layered by index so this stays acyclic.
    int thin_n = 0;
    auto addThin = [&](int from, int to, int genus) {
        EdgeId id = "F" + std::to_string(thin_n++);
        g.edges[id] = {id, EdgeRole::Thin, genus, head_of(from), tail_of(to)};
    };
    for (int k = 1; k < blocks; ++k) {
        int j = static_cast<int>(rng.below(static_cast<uint64_t>(k)));
        addThin(j, k, rng.chance(1, 2) ? 0 : rng.range(0, limits.max_genus));
    }
    int extras = rng.range(0, limits.max_extra_thin);
    for (int i = 0; i < extras && blocks > 1; ++i) {
        int to = rng.range(1, blocks - 1);
        int from = static_cast<int>(rng.below(static_cast<uint64_t>(to)));
        addThin(from, to, rng.chance(1, 2) ? 0 : rng.range(0, limits.max_genus));
    }
    if (limits.loop_spheres) {
        int loops = rng.range(1, 2);
        for (int i = 0; i < loops; ++i) {
            int from = rng.range(0, blocks - 1);
            int to = rng.range(0, from);  // backward or self-block: cycles
            EdgeId id = "P" + std::to_string(i);
            g.edges[id] = {id, EdgeRole::Thin, 0, head_of(from), tail_of(to)};
        }
    }

    int marks = limits.max_marks > 0 ? rng.range(0, limits.max_marks) : 0;
    std::vector<VertexId> verts(g.vertices.begin(), g.vertices.end());
    for (int i = 0; i < marks; ++i) {
        MarkId id = "bm" + std::to_string(i);
        VertexId v = verts[rng.below(verts.size())];
        g.marks[id] = {id, rng.range(1, std::max(1, limits.max_genus)), v};
    }

    // Thick genera: at least the negative-boundary sum on both endpoints.
    for (int k = 0; k < blocks; ++k) {
        int need = 0;
        for (const VertexId& v : {tail_of(k), head_of(k)}) {
            int sum = 0;
            for (const auto& [id, e] : g.edges)
                if (e.role == EdgeRole::Thin && (e.tail == v || e.head == v))
                    sum += e.genus;
            for (const auto& [id, m] : g.marks)
                if (m.vertex == v) sum += m.genus;
            need = std::max(need, sum);
        }
        g.edges[thick_of(k)].genus = need + rng.range(0, 2);
    }

    if (limits.tracked) {
        int sph = 0;
        for (const auto& v : verts) {
            if (!rng.chance(1, 3)) continue;
            std::vector<EdgeId> spheres_at;
            for (const auto& e : thinEdgesAt(g, v))
                if (g.edges.at(e).genus == 0) spheres_at.push_back(e);
            if (spheres_at.empty()) continue;
            TrackedSphere s;
            s.id = "Q" + std::to_string(sph++);
            s.state = SphereState::Hosted;
            s.host = v;
            for (const auto& e : spheres_at)
                if (rng.chance(2, 3)) s.encloses.insert(e);
            if (s.encloses.empty()) s.encloses.insert(spheres_at.front());
            g.spheres[s.id] = s;
        }
        if (rng.chance(1, 2)) {
            TrackedSphere s;
            s.id = "Q" + std::to_string(sph++);
            s.state = SphereState::Crossing;
            s.edge = thick_of(static_cast<int>(rng.below(static_cast<uint64_t>(blocks))));
            s.count = 1;
            g.spheres[s.id] = s;
        }
        if (!g.marks.empty() && rng.chance(1, 2)) {
            TrackedDisc d;
            d.id = "D0";
            d.edge = thick_of(static_cast<int>(rng.below(static_cast<uint64_t>(blocks))));
            d.count = 1;
            d.boundary = g.marks.begin()->first;
            g.discs[d.id] = d;
        }
    }

    requireValid(g);
    return g;
}

}  // namespace ghs
