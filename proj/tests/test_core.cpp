#include "doctest.h"

#include "ghs/core.hpp"
#include "ghs/suite.hpp"

using namespace ghs;

TEST_CASE("minimal Heegaard diagram is valid") {
    auto g = minimalHeegaard(2);
    CHECK(validate(g).ok());
    CHECK(isHeegaard(g));
}

TEST_CASE("realizability violation is reported") {
    // thick genus 1 against a thin genus 2 negative boundary
    GeneralizedSurface g;
    g.vertices = {"x", "u", "w", "y"};
    g.edges["K"] = {"K", EdgeRole::Thick, 2, "x", "u"};
    g.edges["F"] = {"F", EdgeRole::Thin, 2, "u", "w"};
    g.edges["H"] = {"H", EdgeRole::Thick, 1, "w", "y"};
    auto r = validate(g);
    CHECK_FALSE(r.ok());
    bool found = false;
    for (const auto& v : r.violations)
        if (v.find("realizability:w") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("four-vertex chain is valid with all patterns correct") {
    auto g = chainSurface();
    CHECK(validate(g).ok());
    CHECK_FALSE(isHeegaard(g));
    CHECK(vertexInfo(g, "L1").below);
    CHECK_FALSE(vertexInfo(g, "M1").below);
    CHECK(vertexInfo(g, "M2").below);
    CHECK_FALSE(vertexInfo(g, "L2").below);
    CHECK(vertexInfo(g, "M1").plus_edge == "H1");
    CHECK(vertexInfo(g, "M2").plus_edge == "H2");
}

TEST_CASE("loops and pattern violations are rejected") {
    GeneralizedSurface g = minimalHeegaard(2);
    g.edges["L"] = {"L", EdgeRole::Thin, 0, "a", "a"};
    auto r = validate(g);
    bool loop = false;
    for (const auto& v : r.violations)
        if (v.find("loop:L") != std::string::npos) loop = true;
    CHECK(loop);

    // thin edge pointing out of a below-pattern vertex
    GeneralizedSurface g2 = minimalHeegaard(2);
    g2.vertices.insert("c");
    g2.vertices.insert("d");
    g2.edges["H2"] = {"H2", EdgeRole::Thick, 2, "c", "d"};
    g2.edges["F"] = {"F", EdgeRole::Thin, 0, "a", "d"};
    auto r2 = validate(g2);
    bool pattern = false;
    for (const auto& v : r2.violations)
        if (v.find("pattern:a") != std::string::npos) pattern = true;
    CHECK(pattern);
}

TEST_CASE("product vertex detection") {
    GeneralizedSurface g;
    g.vertices = {"k1", "y", "u", "w"};
    g.edges["K"] = {"K", EdgeRole::Thick, 2, "k1", "y"};
    g.edges["f"] = {"f", EdgeRole::Thin, 2, "y", "u"};
    g.edges["H"] = {"H", EdgeRole::Thick, 2, "u", "w"};
    CHECK(isProductVertex(g, "y"));
    CHECK(isProductVertex(g, "u"));

    // handle count 1: thick 2 against thin 1
    GeneralizedSurface g2 = g;
    g2.edges["f"].genus = 1;
    g2.edges["K"].genus = 1;
    CHECK_FALSE(isProductVertex(g2, "u"));

    // second negative-boundary element spoils the product
    GeneralizedSurface g3 = g;
    g3.marks["bm"] = {"bm", 1, "u"};
    g3.edges["H"].genus = 3;
    CHECK(validate(g3).ok());
    CHECK_FALSE(isProductVertex(g3, "u"));
    CHECK(vertexInfo(g3, "u").handles == 1);

    CHECK_THROWS_AS((void)isProductVertex(g, "nope"), GhsError);
}

TEST_CASE("handle counts") {
    auto g = minimalHeegaard(3);
    CHECK(vertexInfo(g, "a").handles == 3);  // handlebody
    auto c = chainSurface();
    CHECK(vertexInfo(c, "M1").handles == 1);  // genus 2 over a genus-1 thin
    CHECK(vertexInfo(c, "M2").handles == 2);
}

TEST_CASE("validate is idempotent and side-effect free") {
    auto g = chainSurface();
    auto r1 = validate(g);
    auto r2 = validate(g);
    CHECK(r1.violations == r2.violations);
    GeneralizedSurface g2 = g;
    (void)validate(g2);
    CHECK(g == g2);
}

TEST_CASE("tracked object well-formedness") {
    auto g = selfAmalgShape(2, 1, true);
    CHECK(validate(g).ok());

    GeneralizedSurface bad = g;
    bad.spheres["Q"].encloses.insert("H");  // thick edge cannot be enclosed
    CHECK_FALSE(validate(bad).ok());

    GeneralizedSurface bad2 = g;
    bad2.spheres["Q"].state = SphereState::Crossing;
    bad2.spheres["Q"].edge = "P0";  // thin edge cannot be crossed
    CHECK_FALSE(validate(bad2).ok());

    GeneralizedSurface bad3 = minimalHeegaard(2);
    bad3.discs["D"] = {"D", "H", 1, "missing"};
    CHECK_FALSE(validate(bad3).ok());
}

TEST_CASE("disconnected diagrams are rejected") {
    GeneralizedSurface g = minimalHeegaard(2);
    g.vertices.insert("c");
    g.vertices.insert("d");
    g.edges["H2"] = {"H2", EdgeRole::Thick, 1, "c", "d"};
    auto r = validate(g);
    bool conn = false;
    for (const auto& v : r.violations)
        if (v == "connectivity") conn = true;
    CHECK(conn);
}
