#include "ghs/split_tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ghs {

namespace {

// Genus of each node, walking from the root; throws on arithmetic or
// shape violations.
std::vector<int> nodeGenera(const SplitTree& t) {
    if (t.nodes.empty()) throw GhsError(Err::MalformedTree, "empty tree");
    if (t.root_genus < 0) throw GhsError(Err::MalformedTree, "negative root genus");
    std::vector<int> genus(t.nodes.size(), -1);
    std::set<std::string> leaf_ids;
    size_t visited = 0;

    std::function<void(int, int)> walk = [&](int idx, int g) {
        if (idx < 0 || idx >= static_cast<int>(t.nodes.size()) || genus[idx] >= 0)
            throw GhsError(Err::MalformedTree, "bad node reference");
        genus[idx] = g;
        visited++;
        const SplitNode& n = t.nodes[idx];
        if (n.leaf) {
            if (n.leaf_id.empty() || !leaf_ids.insert(n.leaf_id).second)
                throw GhsError(Err::MalformedTree, "leaf id: " + n.leaf_id);
            if (!n.children.empty())
                throw GhsError(Err::MalformedTree, "leaf with children");
            return;
        }
        switch (n.kind) {
            case SplitKind::NonSep:
                if (n.children.size() != 1)
                    throw GhsError(Err::MalformedTree, "nonsep child count");
                if (g < 1) throw GhsError(Err::MalformedTree, "nonsep on genus 0");
                walk(n.children[0], g - 1);
                break;
            case SplitKind::Sep:
                if (n.children.size() != 2)
                    throw GhsError(Err::MalformedTree, "sep child count");
                if (n.first_genus < 1 || n.first_genus > g - 1)
                    throw GhsError(Err::MalformedTree, "sep genus out of range");
                walk(n.children[0], n.first_genus);
                walk(n.children[1], g - n.first_genus);
                break;
            case SplitKind::Semi:
                if (n.children.size() != 2)
                    throw GhsError(Err::MalformedTree, "semi child count");
                walk(n.children[0], g);
                walk(n.children[1], 0);
                break;
        }
    };
    walk(0, t.root_genus);
    if (visited != t.nodes.size())
        throw GhsError(Err::MalformedTree, "orphan nodes");
    return genus;
}

struct Parts {
    std::vector<ProjComponent> comps;
    size_t primary = 0;
};

}  // namespace

std::vector<std::pair<std::string, int>> leaves(const SplitTree& t) {
    auto genus = nodeGenera(t);
    std::vector<std::pair<std::string, int>> out;
    std::function<void(int)> walk = [&](int idx) {
        const SplitNode& n = t.nodes[idx];
        if (n.leaf) {
            out.emplace_back(n.leaf_id, genus[idx]);
            return;
        }
        for (int c : n.children) walk(c);
    };
    walk(0);
    return out;
}

std::vector<ProjComponent> project(const SplitTree& t, SplitSide side) {
    auto genus = nodeGenera(t);

    std::function<Parts(int)> walk = [&](int idx) -> Parts {
        const SplitNode& n = t.nodes[idx];
        if (n.leaf) {
            Parts p;
            p.comps.push_back({n.leaf_id, genus[idx], {n.leaf_id}});
            return p;
        }
        if (n.kind == SplitKind::NonSep) {
            Parts p = walk(n.children[0]);
            // A disc we do not cut along leaves its handle on the
            // component carrying the region's basepoint.
            if (n.side != side) p.comps[p.primary].genus += 1;
            return p;
        }
        Parts left = walk(n.children[0]);
        Parts right = walk(n.children[1]);
        if (n.side == side) {
            // Cut: the two child regions stay separate components.
            Parts p = std::move(left);
            p.comps.insert(p.comps.end(), right.comps.begin(), right.comps.end());
            return p;
        }
        // Not cut: the child regions remain one component; merge their
        // primary parts.
        ProjComponent& into = left.comps[left.primary];
        ProjComponent& from = right.comps[right.primary];
        into.genus += from.genus;
        into.leaf_group.insert(into.leaf_group.end(), from.leaf_group.begin(),
                               from.leaf_group.end());
        Parts p = std::move(left);
        for (size_t i = 0; i < right.comps.size(); ++i)
            if (i != right.primary) p.comps.push_back(std::move(right.comps[i]));
        return p;
    };

    Parts root = walk(0);
    for (auto& c : root.comps) std::sort(c.leaf_group.begin(), c.leaf_group.end());
    std::sort(root.comps.begin(), root.comps.end(),
              [](const ProjComponent& a, const ProjComponent& b) { return a.id < b.id; });
    return root.comps;
}

bool hasEvent(const SplitTree& t, SplitSide side) {
    for (const auto& n : t.nodes)
        if (!n.leaf && n.side == side) return true;
    return false;
}

bool hasCompressingEvent(const SplitTree& t, SplitSide side) {
    for (const auto& n : t.nodes)
        if (!n.leaf && n.side == side && n.kind != SplitKind::Semi) return true;
    return false;
}

bool allSemi(const SplitTree& t, SplitSide side) {
    return hasEvent(t, side) && !hasCompressingEvent(t, side);
}

SplitTree makeLeafTree(int root_genus, const std::string& leaf_id) {
    SplitTree t;
    t.root_genus = root_genus;
    SplitNode n;
    n.leaf = true;
    n.leaf_id = leaf_id;
    t.nodes.push_back(n);
    return t;
}

int addEvent(SplitTree& t, int node, SplitSide side, SplitKind kind, int first_genus,
             const std::string& left_leaf, const std::string& right_leaf) {
    if (node < 0 || node >= static_cast<int>(t.nodes.size()) || !t.nodes[node].leaf)
        throw GhsError(Err::MalformedTree, "addEvent target is not a leaf");
    int first = static_cast<int>(t.nodes.size());
    SplitNode l;
    l.leaf = true;
    l.leaf_id = left_leaf;
    t.nodes.push_back(l);
    if (kind != SplitKind::NonSep) {
        SplitNode r;
        r.leaf = true;
        r.leaf_id = right_leaf;
        t.nodes.push_back(r);
    }
    SplitNode& n = t.nodes[node];  // only safe after all reallocation
    n.leaf = false;
    n.leaf_id.clear();
    n.side = side;
    n.kind = kind;
    n.first_genus = first_genus;
    n.children = {first};
    if (kind != SplitKind::NonSep) n.children.push_back(first + 1);
    return first;
}

std::string treeText(const SplitTree& t) {
    std::function<std::string(int)> fmt = [&](int idx) -> std::string {
        const SplitNode& n = t.nodes[idx];
        if (n.leaf) return n.leaf_id;
        std::string s = "(";
        s += n.side == SplitSide::Below ? "b " : "a ";
        switch (n.kind) {
            case SplitKind::NonSep: s += "nonsep"; break;
            case SplitKind::Sep: s += "sep:" + std::to_string(n.first_genus); break;
            case SplitKind::Semi: s += "semi"; break;
        }
        for (int c : n.children) s += " " + fmt(c);
        return s + ")";
    };
    return fmt(0);
}

namespace {

struct TreeLexer {
    const std::string& s;
    size_t pos = 0;
    void skipWs() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) pos++;
    }
    bool eof() {
        skipWs();
        return pos >= s.size();
    }
    char peek() {
        skipWs();
        return pos < s.size() ? s[pos] : '\0';
    }
    std::string token() {
        skipWs();
        size_t start = pos;
        while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t' && s[pos] != '(' &&
               s[pos] != ')')
            pos++;
        if (start == pos) throw GhsError(Err::MalformedTree, "expected token in tree text");
        return s.substr(start, pos - start);
    }
};

int parseNode(TreeLexer& lx, SplitTree& t) {
    int idx = static_cast<int>(t.nodes.size());
    t.nodes.emplace_back();
    if (lx.peek() == '(') {
        lx.pos++;
        std::string side = lx.token();
        std::string kind = lx.token();
        SplitNode n;
        n.leaf = false;
        if (side == "b" || side == "below")
            n.side = SplitSide::Below;
        else if (side == "a" || side == "above")
            n.side = SplitSide::Above;
        else
            throw GhsError(Err::MalformedTree, "bad side: " + side);
        if (kind == "nonsep") {
            n.kind = SplitKind::NonSep;
        } else if (kind == "semi") {
            n.kind = SplitKind::Semi;
        } else if (kind.rfind("sep:", 0) == 0) {
            n.kind = SplitKind::Sep;
            try {
                n.first_genus = std::stoi(kind.substr(4));
            } catch (const std::exception&) {
                throw GhsError(Err::MalformedTree, "bad sep genus: " + kind);
            }
        } else {
            throw GhsError(Err::MalformedTree, "bad kind: " + kind);
        }
        while (lx.peek() != ')') {
            if (lx.eof()) throw GhsError(Err::MalformedTree, "unclosed tree node");
            n.children.push_back(parseNode(lx, t));
        }
        lx.pos++;  // ')'
        t.nodes[idx] = n;
    } else {
        SplitNode n;
        n.leaf = true;
        n.leaf_id = lx.token();
        t.nodes[idx] = n;
    }
    return idx;
}

}  // namespace

SplitTree parseTreeText(const std::string& text, int root_genus) {
    SplitTree t;
    t.root_genus = root_genus;
    TreeLexer lx{text};
    parseNode(lx, t);
    if (!lx.eof()) throw GhsError(Err::MalformedTree, "trailing tree text");
    leaves(t);  // shape and arithmetic check
    return t;
}

}  // namespace ghs
