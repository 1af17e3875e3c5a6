#include "doctest.h"

#include "ghs/complexity.hpp"
#include "ghs/suite.hpp"

using namespace ghs;

TEST_CASE("component complexity equals genus") {
    CHECK(componentComplexity(0) == 0);  // spheres sit at zero
    CHECK(componentComplexity(1) == 1);
    CHECK(componentComplexity(3) == 3);
}

TEST_CASE("width sorts thick complexities in non-increasing order") {
    GeneralizedSurface g;
    g.vertices = {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"};
    g.edges["H1"] = {"H1", EdgeRole::Thick, 3, "a1", "a2"};
    g.edges["H2"] = {"H2", EdgeRole::Thick, 1, "b1", "b2"};
    g.edges["H3"] = {"H3", EdgeRole::Thick, 2, "c1", "c2"};
    g.edges["H4"] = {"H4", EdgeRole::Thick, 2, "d1", "d2"};
    g.edges["F1"] = {"F1", EdgeRole::Thin, 0, "a2", "b1"};
    g.edges["F2"] = {"F2", EdgeRole::Thin, 0, "b2", "c1"};
    g.edges["F3"] = {"F3", EdgeRole::Thin, 0, "c2", "d1"};
    CHECK(width(g).entries == std::vector<int>{3, 2, 2, 1});
    CHECK(width(minimalHeegaard(2)).entries == std::vector<int>{2});
}

TEST_CASE("width comparison is the strict lexicographic order") {
    CHECK(compareWidth({{2, 2}}, {{3}}) == Ord::LT);
    CHECK(compareWidth({{3, 1}}, {{3}}) == Ord::GT);
    CHECK(compareWidth({{2, 2}}, {{2, 2}}) == Ord::EQ);
    // shorter prefix is smaller; zero-padding would wrongly call these equal
    CHECK(compareWidth({{3}}, {{3, 0}}) == Ord::LT);
    CHECK(compareWidth({{3, 0}}, {{3}}) == Ord::GT);
}

TEST_CASE("zero-padded comparison is not the right order") {
    // the mutant comparator pads with zeros and misses strict decreases
    auto mutant = [](const WidthSeq& a, const WidthSeq& b) {
        WidthSeq pa = a, pb = b;
        while (pa.entries.size() < pb.entries.size()) pa.entries.push_back(0);
        while (pb.entries.size() < pa.entries.size()) pb.entries.push_back(0);
        for (size_t i = 0; i < pa.entries.size(); ++i) {
            if (pa.entries[i] < pb.entries[i]) return Ord::LT;
            if (pa.entries[i] > pb.entries[i]) return Ord::GT;
        }
        return Ord::EQ;
    };
    // consolidating away a spherical thick entry must shrink the width
    WidthSeq before{{3, 0}}, after{{3}};
    CHECK(mutant(after, before) == Ord::EQ);        // mutant misses it
    CHECK(compareWidth(after, before) == Ord::LT);  // the real order sees it
}

TEST_CASE("width order axioms hold exhaustively") {
    auto r = propWidthOrderTotal();
    CHECK(r.failures == 0);
    CHECK(r.cases > 0);
}

TEST_CASE("netChi on basic diagrams") {
    CHECK(netChi(minimalHeegaard(4)) == 6);  // 2g - 2

    GeneralizedSurface g;
    g.vertices = {"a1", "a2", "b1", "b2"};
    g.edges["H1"] = {"H1", EdgeRole::Thick, 2, "a1", "a2"};
    g.edges["Fs"] = {"Fs", EdgeRole::Thin, 0, "a2", "b1"};
    g.edges["H2"] = {"H2", EdgeRole::Thick, 3, "b1", "b2"};
    CHECK(netChi(g) == 8);  // 2(g1 + g2) - 2

    // one thick surface, a spherical thick companion, two thin spheres:
    // -chi(H) - chi(H') + chi(F1) + chi(F2) = 2 - 2 + 2 + 2
    GeneralizedSurface n;
    n.vertices = {"a", "b", "c", "d"};
    n.edges["H"] = {"H", EdgeRole::Thick, 2, "a", "b"};
    n.edges["F1"] = {"F1", EdgeRole::Thin, 0, "b", "c"};
    n.edges["Hp"] = {"Hp", EdgeRole::Thick, 0, "c", "d"};
    n.edges["F2"] = {"F2", EdgeRole::Thin, 0, "b", "c"};
    CHECK(netChi(n) == 4);  // -chi(H) + 2

    // boundary marks never contribute
    GeneralizedSurface m = minimalHeegaard(2);
    m.marks["bm"] = {"bm", 2, "a"};
    CHECK(netChi(m) == 2);
}

TEST_CASE("netChi is always even") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        GenLimits lim;
        auto g = randomSurface(seed, lim);
        CHECK(netChi(g) % 2 == 0);
    }
}
