#include "doctest.h"

#include "ghs/amalgamation.hpp"
#include "ghs/complexity.hpp"
#include "ghs/digraph.hpp"
#include "ghs/juggle.hpp"
#include "ghs/suite.hpp"

using namespace ghs;

namespace {

// C hosts a sphere enclosing a thin sphere e; P is a thin sphere from A,
// R is A's thick edge, landing vertex B below it
GeneralizedSurface juggleFixture() {
    GeneralizedSurface g;
    g.vertices = {"b1", "x", "Bv", "A", "C", "d"};
    g.edges["Hx"] = {"Hx", EdgeRole::Thick, 1, "b1", "x"};
    g.edges["R"] = {"R", EdgeRole::Thick, 1, "Bv", "A"};
    g.edges["HC"] = {"HC", EdgeRole::Thick, 2, "C", "d"};
    g.edges["P"] = {"P", EdgeRole::Thin, 0, "A", "C"};
    g.edges["e"] = {"e", EdgeRole::Thin, 0, "x", "C"};
    g.spheres["Q"] = {"Q", SphereState::Hosted, "C", {"e"}, "", 0};
    return g;
}

}  // namespace

TEST_CASE("thin-pierced juggle moves the enclosure two steps over") {
    auto g = juggleFixture();
    REQUIRE(validate(g).ok());
    JuggleSpec spec;
    spec.sphere = "Q";
    spec.pierced = "P";
    spec.landing = "R";
    auto j = juggle(g, spec);
    CHECK(validate(j).ok());
    CHECK(j.edges.at("e").head == "Bv");
    CHECK(j.edges.at("e").tail == "x");
    CHECK(j.spheres.at("Q").host == "Bv");
    auto check = checkJugglePreservation(g, j, spec);
    CHECK(check.allPass());
}

TEST_CASE("identity juggles") {
    auto g = juggleFixture();
    // pierced == landing thick edge: the digraph is unchanged
    JuggleSpec spec;
    spec.sphere = "Q";
    spec.pierced = "HC";
    spec.landing = "HC";
    auto j = juggle(g, spec);
    CHECK(j == g);

    // empty enclosure: unchanged even across a genuine pair
    GeneralizedSurface g2 = g;
    g2.spheres["Q"].encloses.clear();
    JuggleSpec spec2;
    spec2.sphere = "Q";
    spec2.pierced = "P";
    spec2.landing = "R";
    auto j2 = juggle(g2, spec2);
    CHECK(j2.edges == g2.edges);
    CHECK(j2.spheres.at("Q").host == "Bv");
}

TEST_CASE("thick-pierced juggle lands on a thin edge") {
    // P = HC (thick at C), R = thin at d
    GeneralizedSurface g = juggleFixture();
    g.vertices.insert("e1");
    g.vertices.insert("e2");
    g.edges["He"] = {"He", EdgeRole::Thick, 1, "e1", "e2"};
    g.edges["Rt"] = {"Rt", EdgeRole::Thin, 0, "d", "e1"};
    REQUIRE(validate(g).ok());

    JuggleSpec spec;
    spec.sphere = "Q";
    spec.pierced = "HC";
    spec.landing = "Rt";
    auto j = juggle(g, spec);
    CHECK(validate(j).ok());
    CHECK(j.edges.at("e").head == "e1");
    CHECK(j.spheres.at("Q").host == "e1");
    auto check = checkJugglePreservation(g, j, spec);
    for (const auto& [name, ok] : check.checks)
        if (name != "no-new-product") CHECK(ok);
}

TEST_CASE("juggle rejects bad shapes") {
    auto g = juggleFixture();
    JuggleSpec spec;
    spec.sphere = "Q";

    // landing not incident to the pierced edge's far vertex
    spec.pierced = "P";
    spec.landing = "Hx";
    CHECK_THROWS_AS((void)juggle(g, spec), GhsError);

    // thin/thin pair
    GeneralizedSurface g2 = g;
    g2.edges["P2"] = {"P2", EdgeRole::Thin, 0, "A", "C"};
    spec.pierced = "P";
    spec.landing = "P2";
    CHECK_THROWS_AS((void)juggle(g2, spec), GhsError);

    // piercing an edge inside the moved enclosure
    JuggleSpec spec3;
    spec3.sphere = "Q";
    spec3.pierced = "e";
    spec3.landing = "Hx";
    try {
        (void)juggle(g, spec3);
        CHECK(false);
    } catch (const GhsError& e) {
        CHECK(e.code == Err::BadIncidence);
    }

    // a second hosted sphere pinning the moved edge
    GeneralizedSurface g4 = juggleFixture();
    g4.spheres["Q2"] = {"Q2", SphereState::Hosted, "C", {"e"}, "", 0};
    JuggleSpec spec4;
    spec4.sphere = "Q";
    spec4.pierced = "P";
    spec4.landing = "R";
    try {
        (void)juggle(g4, spec4);
        CHECK(false);
    } catch (const GhsError& e) {
        CHECK(e.code == Err::TrackedObstruction);
    }
}

TEST_CASE("anonymous juggles move explicit enclosures") {
    auto g = juggleFixture();
    g.spheres.clear();
    JuggleSpec spec;
    spec.vertex = "C";
    spec.encloses = {"e"};
    spec.pierced = "P";
    spec.landing = "R";
    auto j = juggle(g, spec);
    CHECK(j.edges.at("e").head == "Bv");
}

TEST_CASE("juggling a nonseparating sphere can create a sphere-bearing cycle") {
    // two parallel thin spheres between blocks; moving one of them against
    // the flow closes a cycle that still carries a thin sphere
    GeneralizedSurface g;
    g.vertices = {"a1", "a2", "b1", "b2"};
    g.edges["H1"] = {"H1", EdgeRole::Thick, 2, "a1", "a2"};
    g.edges["F1"] = {"F1", EdgeRole::Thin, 0, "a2", "b1"};
    g.edges["F2"] = {"F2", EdgeRole::Thin, 0, "a2", "b1"};
    g.edges["H2"] = {"H2", EdgeRole::Thick, 2, "b1", "b2"};
    g.spheres["Q"] = {"Q", SphereState::Hosted, "b1", {"F1"}, "", 0};
    REQUIRE(validate(g).ok());
    REQUIRE(isAcyclic(g));
    CHECK_FALSE(isBridge(g, "F1"));  // parallel copy keeps it nonseparating

    JuggleSpec spec;
    spec.sphere = "Q";
    spec.pierced = "F2";  // thin at b1, far vertex a2
    spec.landing = "H1";  // a2's thick edge; lands at a1
    auto j = juggle(g, spec);
    CHECK(validate(j).ok());
    CHECK(j.edges.at("F1").head == "a1");
    CHECK_FALSE(isAcyclic(j));          // F1 now closes a coherent cycle
    CHECK(cycleSphereCondition(j));     // but the cycle carries a thin sphere
    auto check = checkJugglePreservation(g, j, spec);
    for (const auto& [name, ok] : check.checks)
        if (name != "no-new-product") CHECK(ok);
}

TEST_CASE("juggle preserves amalgamation-obtained canonical data") {
    auto g = juggleFixture();
    JuggleSpec spec;
    spec.sphere = "Q";
    spec.pierced = "P";
    spec.landing = "R";
    auto j = juggle(g, spec);
    auto a = canonicalData(amalgamationObtained(g).first);
    auto b = canonicalData(amalgamationObtained(j).first);
    CHECK(a == b);
}

TEST_CASE("random juggle preservation suite") {
    SuiteConfig cfg;
    cfg.seed_lo = 1;
    cfg.min_juggles = 60;
    auto r = propJugglePreservation(cfg);
    CHECK(r.failures == 0);
    CHECK(r.cases >= 60);
}
