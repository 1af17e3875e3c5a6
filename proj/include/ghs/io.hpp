// io.hpp -- the ghs v1 text format, the move-script interpreter, and
// line-record scenario reports.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ghs/core.hpp"

namespace ghs {

// Parses the "ghs v1" line format:
//   vertex <id>
//   edge <id> thick|thin genus=<n> tail=<vid> head=<vid>
//   boundary <id> genus=<n> vertex=<vid>
//   sphere <id> host=<vid> encloses=<eid,...>
//   sphere <id> edge=<eid> count=<n>
//   disc <id> edge=<eid> count=<n> boundary=<bid>
// '#' starts a comment.  Throws ParseError with a line number, or
// InvalidSurface when the parsed surface fails validation.
GeneralizedSurface parse(const std::string& text);
GeneralizedSurface parseFile(const std::string& path);

// Canonical text form: ids in sorted order, stable key order.  A
// serialize/parse round trip is byte-stable.
std::string serialize(const GeneralizedSurface& g);

// Applies one script line / a whole script.  Lines as produced by the
// *Script helpers; see MoveScript in the docs.
GeneralizedSurface applyScriptLine(const GeneralizedSurface& g, const std::string& line);
GeneralizedSurface applyScript(const GeneralizedSurface& g,
                               const std::vector<std::string>& lines);
GeneralizedSurface replay(const GeneralizedSurface& g, const MoveLog& log);

// Per-step record of the conserved and monitored quantities.
struct StepRecord {
    int index = 0;
    std::string op;
    std::vector<int> width;
    int netchi = 0;
    bool acyclic = false;
    bool cycle_sphere = false;
    std::string tracked;  // id:state comma list
};

struct ScenarioReport {
    std::vector<StepRecord> steps;
    bool heegaard = false;
    int final_genus = 0;
    std::vector<std::pair<TrackId, int>> final_counts;  // -1 = still hosted
    bool counts_all_one = false;
    bool genus_matches_netchi = false;
};

StepRecord recordStep(const GeneralizedSurface& g, int index, const std::string& op);
std::string reportText(const ScenarioReport& r);
std::string reportJson(const ScenarioReport& r);

// Runs a script line by line, recording each step.
ScenarioReport runScript(const GeneralizedSurface& g, const std::vector<std::string>& lines,
                         GeneralizedSurface* out = nullptr);

std::vector<std::string> splitLines(const std::string& text);

}  // namespace ghs
