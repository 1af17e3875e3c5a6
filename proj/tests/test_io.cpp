#include "doctest.h"

#include "ghs/digraph.hpp"
#include "ghs/generator.hpp"
#include "ghs/io.hpp"
#include "ghs/pipeline.hpp"
#include "ghs/suite.hpp"

using namespace ghs;

TEST_CASE("parsing the minimal file") {
    std::string text =
        "ghs v1\n"
        "# a genus-2 Heegaard surface\n"
        "vertex a\n"
        "vertex b\n"
        "edge H thick genus=2 tail=a head=b\n";
    auto g = parse(text);
    CHECK(isHeegaard(g));
    CHECK(g.edges.at("H").genus == 2);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        (void)parse("ghs v1\nvertex a\nwut x\n");
        CHECK(false);
    } catch (const GhsError& e) {
        CHECK(e.code == Err::ParseError);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS((void)parse("vertex a\n"), GhsError);  // missing header
    CHECK_THROWS_AS((void)parse("ghs v1\nvertex a\nvertex a\n"), GhsError);
}

TEST_CASE("a loop edge fails validation at parse time") {
    std::string text =
        "ghs v1\n"
        "vertex a\n"
        "edge H thick genus=2 tail=a head=a\n";
    try {
        (void)parse(text);
        CHECK(false);
    } catch (const GhsError& e) {
        CHECK(e.code == Err::InvalidSurface);
        CHECK(std::string(e.what()).find("loop") != std::string::npos);
    }
}

TEST_CASE("the chain example file computes heights (1,2,3)") {
    std::string text =
        "ghs v1\n"
        "vertex L1\nvertex M1\nvertex M2\nvertex L2\n"
        "edge H1 thick genus=2 tail=L1 head=M1\n"
        "edge F thin genus=1 tail=M1 head=M2\n"
        "edge H2 thick genus=3 tail=M2 head=L2\n";
    auto g = parse(text);
    auto f = computeHeight(g);
    CHECK(f.assignment.at("H1") == 1);
    CHECK(f.assignment.at("F") == 2);
    CHECK(f.assignment.at("H2") == 3);
}

TEST_CASE("serialize/parse is a normalization fixed point") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        GenLimits lim;
        lim.loop_spheres = seed % 2 == 0;
        auto g = randomSurface(seed, lim);
        std::string once = serialize(g);
        auto back = parse(once);
        CHECK(back == g);
        CHECK(serialize(back) == once);
    }
}

TEST_CASE("tracked objects round trip through the file format") {
    auto g = selfAmalgShape(2, 1, true);
    g.marks["bm"] = {"bm", 1, "a"};
    g.edges["H"].genus = 3;  // keep room for the mark
    g.discs["D"] = {"D", "H", 1, "bm"};
    g.spheres["Qx"] = {"Qx", SphereState::Crossing, "", {}, "H", 1};
    REQUIRE(validate(g).ok());
    auto back = parse(serialize(g));
    CHECK(back == g);
}

TEST_CASE("mutated files never escape the error contract") {
    // every mutation either parses to a valid surface or raises GhsError
    GenLimits lim;
    for (uint64_t seed = 1; seed <= 15; ++seed) {
        std::string text = serialize(randomSurface(seed, lim));
        Rng rng(seed * 101 + 13);
        for (int trial = 0; trial < 40; ++trial) {
            std::string mut = text;
            size_t pos = rng.below(mut.size());
            switch (rng.below(4)) {
                case 0: mut[pos] = static_cast<char>('!' + rng.below(90)); break;
                case 1: mut.erase(pos, 1 + rng.below(5)); break;
                case 2: mut.insert(pos, "x"); break;
                case 3: mut[pos] = '\n'; break;
            }
            try {
                auto g = parse(mut);
                CHECK(validate(g).ok());
            } catch (const GhsError&) {
                // rejected cleanly
            }
        }
    }
}

TEST_CASE("the generator is deterministic and sound") {
    GenLimits lim;
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        auto g1 = randomSurface(seed, lim);
        auto g2 = randomSurface(seed, lim);
        CHECK(g1 == g2);
        CHECK(validate(g1).ok());
        CHECK(isAcyclic(g1));
        CHECK(verifyHeight(g1, computeHeight(g1)));
    }
}

TEST_CASE("script lines apply module operations") {
    auto g = chainSurface();
    auto j = applyScriptLine(g, "amalgamate center=H2 side=below partners=H1");
    CHECK(isHeegaard(j));
    CHECK(j.edges.begin()->second.genus == 4);

    // side can be inferred when unambiguous
    auto j2 = applyScriptLine(g, "amalgamate center=H2 partners=H1");
    CHECK(j2 == j);

    auto k = applyScriptLine(minimalHeegaard(3),
                             "untelescope h=H tree=(b nonsep (a nonsep l0))");
    CHECK(width(k).entries == std::vector<int>{2, 2});

    auto loop = selfAmalgShape(2, 1, true);
    auto l = applyScriptLine(loop, "selfamalg p=P0");
    CHECK(l.edges.at("H").genus == 3);

    CHECK_THROWS_AS((void)applyScriptLine(g, "frobnicate x=1"), GhsError);
}

TEST_CASE("reports replay deterministically") {
    auto g = selfAmalgShape(1, 2, true);
    std::vector<std::string> script{"amalgobtained", "merge s=Q"};
    auto r1 = reportText(runScript(g, script));
    auto r2 = reportText(runScript(g, script));
    CHECK(r1 == r2);
    CHECK(r1.find("netchi=4") != std::string::npos);
}

TEST_CASE("scenario reports track the conserved quantity") {
    auto g = chainSurface();
    std::vector<std::string> script{"amalgamate center=H2 side=below partners=H1"};
    auto rep = runScript(g, script);
    REQUIRE(rep.steps.size() == 2);
    CHECK(rep.steps[0].netchi == rep.steps[1].netchi);
    CHECK(rep.heegaard);
    CHECK(rep.final_genus == 4);
    CHECK(rep.genus_matches_netchi);
}

TEST_CASE("strong haken pipeline scenarios") {
    SuiteConfig cfg;
    cfg.seed_lo = 1;
    cfg.seed_hi = 25;
    auto r = propStrongHakenPipeline(cfg);
    CHECK(r.failures == 0);
    CHECK(r.cases >= 20);
}

TEST_CASE("pipeline enforces its preconditions") {
    auto g = selfAmalgShape(2, 1, true);
    g.spheres["Qx"] = {"Qx", SphereState::Crossing, "", {}, "H", 2};
    REQUIRE(validate(g).ok());
    try {
        (void)runPipelineStrongHaken(g);
        CHECK(false);
    } catch (const GhsError& e) {
        CHECK(e.code == Err::PreconditionFailed);
    }

    // a cycle with no thin sphere on it
    GeneralizedSurface t;
    t.vertices = {"a", "b"};
    t.edges["H"] = {"H", EdgeRole::Thick, 2, "a", "b"};
    t.edges["T"] = {"T", EdgeRole::Thin, 1, "b", "a"};
    CHECK_THROWS_AS((void)runPipelineStrongHaken(t), GhsError);
}

TEST_CASE("pipeline finishes with every count at one") {
    auto g = selfAmalgShape(1, 2, true);  // Q will cross twice before merging
    GeneralizedSurface out;
    auto rep = runPipelineStrongHaken(g, &out);
    CHECK(rep.heegaard);
    CHECK(rep.counts_all_one);
    CHECK(rep.genus_matches_netchi);
    CHECK(out.spheres.at("Q").count == 1);
    CHECK(out.edges.begin()->second.genus == 3);
}

TEST_CASE("pipeline on a two-summand surface") {
    GeneralizedSurface g;
    g.vertices = {"a1", "a2", "b1", "b2"};
    g.edges["H1"] = {"H1", EdgeRole::Thick, 2, "a1", "a2"};
    g.edges["Fs"] = {"Fs", EdgeRole::Thin, 0, "a2", "b1"};
    g.edges["H2"] = {"H2", EdgeRole::Thick, 3, "b1", "b2"};
    g.spheres["Q"] = {"Q", SphereState::Hosted, "b1", {"Fs"}, "", 0};
    GeneralizedSurface out;
    auto rep = runPipelineStrongHaken(g, &out);
    CHECK(rep.heegaard);
    CHECK(rep.final_genus == 5);
    CHECK(out.spheres.at("Q").count == 1);
    CHECK(rep.counts_all_one);
}

TEST_CASE("anonymous juggle through the script surface") {
    GeneralizedSurface g;
    g.vertices = {"b1", "x", "Bv", "A", "C", "d"};
    g.edges["Hx"] = {"Hx", EdgeRole::Thick, 1, "b1", "x"};
    g.edges["R"] = {"R", EdgeRole::Thick, 1, "Bv", "A"};
    g.edges["HC"] = {"HC", EdgeRole::Thick, 2, "C", "d"};
    g.edges["P"] = {"P", EdgeRole::Thin, 0, "A", "C"};
    g.edges["e"] = {"e", EdgeRole::Thin, 0, "x", "C"};
    auto j = applyScriptLine(g, "juggle vertex=C encloses=e p=P r=R");
    CHECK(j.edges.at("e").head == "Bv");
}

TEST_CASE("report text is locked against format drift") {
    GeneralizedSurface g;
    g.vertices = {"a1", "a2", "b1", "b2"};
    g.edges["H1"] = {"H1", EdgeRole::Thick, 2, "a1", "a2"};
    g.edges["Fs"] = {"Fs", EdgeRole::Thin, 0, "a2", "b1"};
    g.edges["H2"] = {"H2", EdgeRole::Thick, 3, "b1", "b2"};
    g.spheres["Q"] = {"Q", SphereState::Hosted, "b1", {"Fs"}, "", 0};
    auto rep = runPipelineStrongHaken(g);
    CHECK(reportText(rep) ==
          "ghs-report v1\n"
          "step 0 op=load width=3,2 netchi=8 acyclic=1 cyclesphere=1 tracked=Q:h:b1\n"
          "step 1 op=amalgamate width=5 netchi=8 acyclic=1 cyclesphere=1 "
          "tracked=Q:x:J:1\n"
          "final heegaard=1 genus=5 counts=Q:1 allone=1 netchipred=1\n");
}

TEST_CASE("identifiers are restricted to the portable charset") {
    CHECK_THROWS_AS((void)parse("ghs v1\nvertex a,b\n"), GhsError);
    CHECK_THROWS_AS((void)parse("ghs v1\nvertex a:1\n"), GhsError);
}

TEST_CASE("pipeline on the nonseparating loop shape") {
    auto g = selfAmalgShape(2, 1, true);
    GeneralizedSurface out;
    auto rep = runPipelineStrongHaken(g, &out);
    CHECK(rep.final_genus == 3);
    CHECK(out.spheres.at("Q").count == 1);
}
