#include "doctest.h"

#include "ghs/split_tree.hpp"

using namespace ghs;

namespace {

// root 3, one Below NonSep
SplitTree oneBelowNonSep() {
    SplitTree t = makeLeafTree(3, "l0");
    addEvent(t, 0, SplitSide::Below, SplitKind::NonSep, 0, "l1", "");
    return t;
}

// root 3, Below NonSep then Above NonSep on the child
SplitTree bothNonSep() {
    SplitTree t = makeLeafTree(3, "l0");
    int c = addEvent(t, 0, SplitSide::Below, SplitKind::NonSep, 0, "l1", "");
    addEvent(t, c, SplitSide::Above, SplitKind::NonSep, 0, "l2", "");
    return t;
}

// root 2, Above Semi at the root
SplitTree aboveSemi() {
    SplitTree t = makeLeafTree(2, "l0");
    addEvent(t, 0, SplitSide::Above, SplitKind::Semi, 0, "main", "sphere");
    return t;
}

// root 2: Above Semi, then Below Sep(1) on the genus-2 child
SplitTree semiThenSep() {
    SplitTree t = makeLeafTree(2, "l0");
    int c = addEvent(t, 0, SplitSide::Above, SplitKind::Semi, 0, "m", "s");
    addEvent(t, c, SplitSide::Below, SplitKind::Sep, 1, "m1", "m2");
    return t;
}

}  // namespace

TEST_CASE("leaf genera follow the event arithmetic") {
    auto l1 = leaves(oneBelowNonSep());
    REQUIRE(l1.size() == 1);
    CHECK(l1[0] == std::pair<std::string, int>{"l1", 2});

    auto l2 = leaves(bothNonSep());
    REQUIRE(l2.size() == 1);
    CHECK(l2[0] == std::pair<std::string, int>{"l2", 1});

    auto l3 = leaves(aboveSemi());
    REQUIRE(l3.size() == 2);
    CHECK(l3[0] == std::pair<std::string, int>{"main", 2});
    CHECK(l3[1] == std::pair<std::string, int>{"sphere", 0});

    auto l4 = leaves(semiThenSep());
    REQUIRE(l4.size() == 3);
    CHECK(l4[0] == std::pair<std::string, int>{"m1", 1});
    CHECK(l4[1] == std::pair<std::string, int>{"m2", 1});
    CHECK(l4[2] == std::pair<std::string, int>{"s", 0});
}

TEST_CASE("root genus equals leaf total plus one-handle compressions") {
    for (const auto& t : {oneBelowNonSep(), bothNonSep(), aboveSemi(), semiThenSep()}) {
        int total = 0, nonsep = 0;
        for (const auto& [id, g] : leaves(t)) total += g;
        for (const auto& n : t.nodes)
            if (!n.leaf && n.kind == SplitKind::NonSep) nonsep++;
        CHECK(t.root_genus == total + nonsep);
    }
}

TEST_CASE("projection contracts the opposite side") {
    // no Above events: projecting Above returns the whole surface
    auto pa = project(oneBelowNonSep(), SplitSide::Above);
    REQUIRE(pa.size() == 1);
    CHECK(pa[0].genus == 3);
    CHECK(pa[0].leaf_group == std::vector<std::string>{"l1"});

    // contracted NonSep hands its handle back
    auto pb = project(bothNonSep(), SplitSide::Below);
    REQUIRE(pb.size() == 1);
    CHECK(pb[0].genus == 2);

    // contracted Semi merges the sphere back in
    auto pc = project(aboveSemi(), SplitSide::Below);
    REQUIRE(pc.size() == 1);
    CHECK(pc[0].genus == 2);
    CHECK(pc[0].leaf_group == std::vector<std::string>{"main", "sphere"});

    // the mixed tree: H_- = two genus-1 pieces, H_+ = genus 2 plus a sphere
    auto below = project(semiThenSep(), SplitSide::Below);
    REQUIRE(below.size() == 2);
    CHECK(below[0].genus + below[1].genus == 2);
    CHECK(below[0].genus == 1);
    CHECK(below[1].genus == 1);
    auto above = project(semiThenSep(), SplitSide::Above);
    REQUIRE(above.size() == 2);
    int genus2 = 0, spheres = 0;
    for (const auto& c : above) {
        if (c.genus == 2) genus2++;
        if (c.genus == 0) spheres++;
    }
    CHECK(genus2 == 1);
    CHECK(spheres == 1);
}

TEST_CASE("side predicates") {
    CHECK(hasEvent(bothNonSep(), SplitSide::Below));
    CHECK(hasEvent(bothNonSep(), SplitSide::Above));
    CHECK_FALSE(hasEvent(oneBelowNonSep(), SplitSide::Above));
    CHECK(hasCompressingEvent(bothNonSep(), SplitSide::Below));
    CHECK_FALSE(hasCompressingEvent(aboveSemi(), SplitSide::Above));
    CHECK(allSemi(aboveSemi(), SplitSide::Above));
    CHECK_FALSE(allSemi(aboveSemi(), SplitSide::Below));
}

TEST_CASE("malformed trees are rejected") {
    SplitTree bad = makeLeafTree(0, "l0");
    addEvent(bad, 0, SplitSide::Below, SplitKind::NonSep, 0, "x", "");
    CHECK_THROWS_AS((void)leaves(bad), GhsError);  // no handle on a sphere

    SplitTree sep = makeLeafTree(2, "l0");
    addEvent(sep, 0, SplitSide::Below, SplitKind::Sep, 2, "a", "b");  // needs 1..g-1
    CHECK_THROWS_AS((void)leaves(sep), GhsError);

    SplitTree dup = makeLeafTree(2, "l0");
    addEvent(dup, 0, SplitSide::Below, SplitKind::Semi, 0, "a", "a");
    CHECK_THROWS_AS((void)leaves(dup), GhsError);
}

TEST_CASE("tree text round trips") {
    for (const auto& t : {oneBelowNonSep(), bothNonSep(), aboveSemi(), semiThenSep()}) {
        auto text = treeText(t);
        auto back = parseTreeText(text, t.root_genus);
        CHECK(treeText(back) == text);
        CHECK(leaves(back) == leaves(t));
        CHECK(project(back, SplitSide::Below) == project(t, SplitSide::Below));
        CHECK(project(back, SplitSide::Above) == project(t, SplitSide::Above));
    }
    CHECK(treeText(aboveSemi()) == "(a semi main sphere)");
    CHECK_THROWS_AS((void)parseTreeText("(b wut x)", 2), GhsError);
    CHECK_THROWS_AS((void)parseTreeText("(b nonsep x", 2), GhsError);
}
