#include "ghs/complexity.hpp"

#include <algorithm>
#include <functional>

namespace ghs {

int componentComplexity(int genus) {
    // 1 - (2 - 2g)/2 = g
    return genus;
}

WidthSeq width(const GeneralizedSurface& g) {
    requireValid(g);
    WidthSeq w;
    for (const auto& [id, e] : g.edges)
        if (e.role == EdgeRole::Thick)
            w.entries.push_back(componentComplexity(e.genus));
    std::sort(w.entries.begin(), w.entries.end(), std::greater<int>());
    return w;
}

Ord compareWidth(const WidthSeq& a, const WidthSeq& b) {
    size_t n = std::min(a.entries.size(), b.entries.size());
    for (size_t k = 0; k < n; ++k) {
        if (a.entries[k] < b.entries[k]) return Ord::LT;
        if (a.entries[k] > b.entries[k]) return Ord::GT;
    }
    if (a.entries.size() < b.entries.size()) return Ord::LT;
    if (a.entries.size() > b.entries.size()) return Ord::GT;
    return Ord::EQ;
}

int netChi(const GeneralizedSurface& g) {
    requireValid(g);
    int total = 0;
    for (const auto& [id, e] : g.edges)
        total += e.role == EdgeRole::Thick ? 2 * e.genus - 2 : 2 - 2 * e.genus;
    return total;
}

}  // namespace ghs
