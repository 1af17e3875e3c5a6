// complexity.hpp -- the width measure on diagrams and the conserved
// quantity netChi.
//
// Width is the non-increasing sequence of thick-edge complexities
// c = 1 - chi/2 = genus, compared lexicographically with the
// shorter-prefix-is-smaller rule.  Genus is the stored quantity
// throughout; chi is always derived as 2 - 2g.

#pragma once

#include <vector>

#include "ghs/core.hpp"

namespace ghs {

struct WidthSeq {
    std::vector<int> entries;  // non-increasing
    bool operator==(const WidthSeq&) const = default;
};

enum class Ord { LT, EQ, GT };

// c(H) = 1 - chi/2 for a closed orientable surface of the given genus.
int componentComplexity(int genus);

WidthSeq width(const GeneralizedSurface& g);

// alpha < beta iff, at the first index where they differ, alpha either
// has run out of terms or has the strictly smaller term.  Note (3) < (3,0):
// padding with zeros is NOT equivalent to this order.
Ord compareWidth(const WidthSeq& a, const WidthSeq& b);

// -chi(thick surfaces) + chi(thin surfaces); conserved by every move.
int netChi(const GeneralizedSurface& g);

}  // namespace ghs
