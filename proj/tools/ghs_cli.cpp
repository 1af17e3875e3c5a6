// ghs_cli.cpp -- batch command-line surface for the rewrite engine.
//
// Exit codes: 0 ok, 1 property/validation failure, 2 usage/parse error.

#include <fstream>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ghs/amalgamation.hpp"
#include "ghs/complexity.hpp"
#include "ghs/digraph.hpp"
#include "ghs/generator.hpp"
#include "ghs/io.hpp"
#include "ghs/pipeline.hpp"
#include "ghs/suite.hpp"

namespace {

int exitCodeFor(const ghs::GhsError& e) {
    switch (e.code) {
        case ghs::Err::ParseError:
        case ghs::Err::UnknownVertex:
        case ghs::Err::UnknownEdge:
        case ghs::Err::UnknownMark:
        case ghs::Err::UnknownTracked:
            return 2;
        default:
            return 1;
    }
}

std::string readScript(const std::string& path, std::vector<std::string>& lines) {
    std::ifstream in(path);
    if (!in) throw ghs::GhsError(ghs::Err::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    lines = ghs::splitLines(ss.str());
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ghs: a rewrite calculus for generalized Heegaard surface diagrams"};
    app.require_subcommand(1);
    bool json = false, strict = false;
    app.add_flag("--json", json, "emit JSON records");
    app.add_flag("--strict", strict, "treat warnings as errors");

    std::string file, script_path;
    auto* c_validate = app.add_subcommand("validate", "check a surface file");
    c_validate->add_option("file", file)->required();
    auto* c_width = app.add_subcommand("width", "print the width sequence");
    c_width->add_option("file", file)->required();
    auto* c_netchi = app.add_subcommand("netchi", "print the conserved quantity");
    c_netchi->add_option("file", file)->required();
    auto* c_height = app.add_subcommand("height", "print a height function");
    c_height->add_option("file", file)->required();
    auto* c_apply = app.add_subcommand("apply", "run a move script");
    c_apply->add_option("file", file)->required();
    c_apply->add_option("script", script_path)->required();
    auto* c_amalg = app.add_subcommand("amalg", "amalgamate down to a Heegaard surface");
    c_amalg->add_option("file", file)->required();
    auto* c_pipeline = app.add_subcommand("pipeline", "scenario pipelines");
    std::string pipeline_kind;
    c_pipeline->add_option("kind", pipeline_kind, "strong-haken")->required();
    c_pipeline->add_option("file", file)->required();

    auto* c_gen = app.add_subcommand("gen", "generate a random surface");
    uint64_t seed = 1;
    ghs::GenLimits limits;
    bool gen_loops = false, gen_plain = false;
    c_gen->add_option("--seed", seed);
    c_gen->add_option("--max-thick", limits.max_thick);
    c_gen->add_option("--max-genus", limits.max_genus);
    c_gen->add_flag("--loops", gen_loops, "allow backward thin spheres");
    c_gen->add_flag("--no-tracked", gen_plain, "skip tracked objects");

    auto* c_verify = app.add_subcommand("verify", "run the property suite");
    std::string seeds = "1..40";
    std::string report_dir;
    c_verify->add_option("--seeds", seeds, "A..B");
    c_verify->add_option("--report-dir", report_dir, "where to write counterexamples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_validate) {
            auto text = [&] {
                std::ifstream in(file);
                if (!in) throw ghs::GhsError(ghs::Err::ParseError, "cannot open " + file);
                std::ostringstream ss;
                ss << in.rdbuf();
                return ss.str();
            }();
            ghs::GeneralizedSurface g;
            try {
                g = ghs::parse(text);
            } catch (const ghs::GhsError& e) {
                std::cout << "invalid: " << e.what() << "\n";
                return exitCodeFor(e);
            }
            std::string normalized = ghs::serialize(g);
            bool changed = normalized != text;
            if (json) {
                nlohmann::json j;
                j["valid"] = true;
                j["normalized"] = !changed;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "valid\n";
                if (changed) std::cout << "warning: file is not in normalized form\n";
            }
            return (strict && changed) ? 1 : 0;
        }
        if (*c_width) {
            auto g = ghs::parseFile(file);
            auto w = ghs::width(g);
            if (json) {
                nlohmann::json j = w.entries;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "(";
                for (size_t i = 0; i < w.entries.size(); ++i)
                    std::cout << (i ? "," : "") << w.entries[i];
                std::cout << ")\n";
            }
            return 0;
        }
        if (*c_netchi) {
            auto g = ghs::parseFile(file);
            std::cout << ghs::netChi(g) << "\n";
            return 0;
        }
        if (*c_height) {
            auto g = ghs::parseFile(file);
            auto f = ghs::computeHeight(g);
            if (json) {
                nlohmann::json j = f.assignment;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& [id, v] : f.assignment)
                    std::cout << id << " " << v << "\n";
            }
            return 0;
        }
        if (*c_apply) {
            auto g = ghs::parseFile(file);
            std::vector<std::string> lines;
            readScript(script_path, lines);
            ghs::GeneralizedSurface out;
            auto rep = ghs::runScript(g, lines, &out);
            std::cout << (json ? ghs::reportJson(rep) : ghs::reportText(rep));
            std::cout << ghs::serialize(out);
            return 0;
        }
        if (*c_amalg) {
            auto g = ghs::parseFile(file);
            auto [res, log] = ghs::amalgamationObtained(g);
            auto rep = ghs::runScript(g, log);
            std::cout << (json ? ghs::reportJson(rep) : ghs::reportText(rep));
            std::cout << ghs::serialize(res);
            return 0;
        }
        if (*c_pipeline) {
            if (pipeline_kind != "strong-haken") {
                std::cerr << "unknown pipeline: " << pipeline_kind << "\n";
                return 2;
            }
            auto g = ghs::parseFile(file);
            ghs::GeneralizedSurface out;
            auto rep = ghs::runPipelineStrongHaken(g, &out);
            std::cout << (json ? ghs::reportJson(rep) : ghs::reportText(rep));
            bool ok = rep.heegaard && rep.counts_all_one && rep.genus_matches_netchi;
            return ok ? 0 : 1;
        }
        if (*c_gen) {
            limits.loop_spheres = gen_loops;
            limits.tracked = !gen_plain;
            auto g = ghs::randomSurface(seed, limits);
            std::cout << ghs::serialize(g);
            return 0;
        }
        if (*c_verify) {
            ghs::SuiteConfig cfg;
            auto dots = seeds.find("..");
            if (dots == std::string::npos) {
                std::cerr << "--seeds wants A..B\n";
                return 2;
            }
            cfg.seed_lo = std::stoull(seeds.substr(0, dots));
            cfg.seed_hi = std::stoull(seeds.substr(dots + 2));
            if (cfg.seed_hi < cfg.seed_lo) {
                // empty range: vacuous pass
                std::cout << "ALL PASS\n";
                return 0;
            }
            auto rep = ghs::verifySuite(cfg);
            std::cout << ghs::suiteText(rep);
            if (report_dir.empty())
                if (const char* env = std::getenv("GHS_REPORT_DIR")) report_dir = env;
            if (!report_dir.empty() && !rep.allPass()) {
                int n = 0;
                for (const auto& p : rep.results)
                    for (const auto& c : p.counterexamples) {
                        std::ofstream out(report_dir + "/counterexample-" +
                                          std::to_string(n++) + ".txt");
                        out << "# " << p.name << "\n" << c;
                    }
            }
            return rep.allPass() ? 0 : 1;
        }
    } catch (const ghs::GhsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exitCodeFor(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
