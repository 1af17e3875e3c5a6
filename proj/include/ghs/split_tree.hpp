// split_tree.hpp -- compression plans for one thick surface.
//
// A split tree records a system of compression events on a thick surface,
// each tagged with the side of the surface its disc lies on.  Leaves are
// the components left after performing every event; projecting to one
// side performs only that side's events and keeps track of how leaves
// group into the resulting components.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghs/core.hpp"

namespace ghs {

enum class SplitSide { Below, Above };

// NonSep compresses along a non-separating curve: genus g -> g-1.
// Sep splits along a separating essential curve: g -> (g1, g-g1).
// Semi splits off a sphere: g -> (g, 0).
enum class SplitKind { NonSep, Sep, Semi };

struct SplitNode {
    bool leaf = false;
    std::string leaf_id;  // leaves only
    SplitSide side = SplitSide::Below;
    SplitKind kind = SplitKind::NonSep;
    int first_genus = 0;  // Sep only
    std::vector<int> children;  // indices into SplitTree::nodes
};

struct SplitTree {
    int root_genus = 0;
    std::vector<SplitNode> nodes;  // nodes[0] is the root
    // Old negative-boundary element (thin edge or mark id) -> leaf id;
    // the element lands on the projection component containing that leaf.
    std::map<std::string, std::string> assignment;
    bool operator==(const SplitTree&) const = default;
};

// One component of a one-sided projection: the leaves it groups and its
// genus.  `id` is the leaf the component is named after.
struct ProjComponent {
    std::string id;
    int genus = 0;
    std::vector<std::string> leaf_group;  // sorted
    bool operator==(const ProjComponent&) const = default;
};

// Genus of every leaf region, in tree order.  Throws MalformedTree when
// the genus arithmetic breaks (NonSep on genus 0, Sep out of range, bad
// child counts, duplicate leaf ids).
std::vector<std::pair<std::string, int>> leaves(const SplitTree& t);

// Components of the surface compressed along only the given side's
// events; events of the other side are contracted (Sep/Semi merge their
// child groups, NonSep returns one handle to its group).
std::vector<ProjComponent> project(const SplitTree& t, SplitSide side);

bool hasEvent(const SplitTree& t, SplitSide side);
bool hasCompressingEvent(const SplitTree& t, SplitSide side);  // NonSep or Sep
bool allSemi(const SplitTree& t, SplitSide side);  // >= 1 event, all Semi

// Convenience constructors used by tests and strategies.
SplitTree makeLeafTree(int root_genus, const std::string& leaf_id);
int addEvent(SplitTree& t, int node, SplitSide side, SplitKind kind, int first_genus,
             const std::string& left_leaf, const std::string& right_leaf);

// Nested-list text form used by move scripts, e.g.
// "(b nonsep (a semi main sph))".  Events are "(b|a nonsep|sep:<g1>|semi
// child...)"; bare identifiers are leaves.  The root genus is not part of
// the text; parse supplies it.
std::string treeText(const SplitTree& t);
SplitTree parseTreeText(const std::string& text, int root_genus);

}  // namespace ghs
