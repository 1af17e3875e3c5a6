// thinning.hpp -- the three thinning moves as digraph rewrites, plus a
// strategy-driven thinning loop with a strictly decreasing width chain.

#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "ghs/complexity.hpp"
#include "ghs/core.hpp"
#include "ghs/split_tree.hpp"

namespace ghs {

// Replaces the thick edge h and its two endpoint vertices by the full
// two-level structure described by the plan: per projection component a
// new thick edge with an outer and an inner vertex, and one new thin edge
// per leaf running from the below-side inner vertices to the above-side
// ones.  Old negative-boundary elements land where t.assignment sends
// them.  Conserves netChi and preserves acyclicity.
GeneralizedSurface untelescope(const GeneralizedSurface& g, const EdgeId& h,
                               const SplitTree& t);

// Deletes a thick/thin pair cobounding a product vertex and merges the
// two far endpoints.
GeneralizedSurface consolidate(const GeneralizedSurface& g, const EdgeId& h,
                               const EdgeId& f);

// Untelescope with one all-Semi side, then consolidate the positive-genus
// component on that side with `target`.
GeneralizedSurface typeIIMove(const GeneralizedSurface& g, const EdgeId& h,
                              const SplitTree& t, const EdgeId& target);

struct ConsolidateMove {
    EdgeId h, f;
};
struct UntelescopeMove {
    EdgeId h;
    SplitTree tree;
};
struct TypeIIPlan {
    EdgeId h;
    SplitTree tree;
    EdgeId target;
};
using ThinningMove = std::variant<ConsolidateMove, UntelescopeMove, TypeIIPlan>;

GeneralizedSurface applyThinningMove(const GeneralizedSurface& g, const ThinningMove& m);
std::string thinningMoveScript(const ThinningMove& m);

// Supplies the next move for an intermediate surface, or nothing to stop.
using MoveChooser =
    std::function<std::optional<ThinningMove>(const GeneralizedSurface&)>;

struct ThinResult {
    GeneralizedSurface surface;
    MoveLog log;
    std::optional<std::string> error;  // set when a move aborted the run
};

// Applies moves until the chooser stops; the width sequence of the
// surfaces visited is strictly decreasing.  A move failure aborts with
// the partial log recorded.
ThinResult thinToLocal(const GeneralizedSurface& g, const MoveChooser& choose);

// Consolidates the first available product vertex each round.
MoveChooser greedyConsolidation();

// Consolidates when possible, otherwise untelescopes a genus >= 2 thick
// edge with a one-handle compression on each side; stops when neither
// applies.
MoveChooser nonsepCascade();

}  // namespace ghs
