#include "ghs/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ghs/amalgamation.hpp"
#include "ghs/complexity.hpp"
#include "ghs/digraph.hpp"
#include "ghs/juggle.hpp"
#include "ghs/split_tree.hpp"
#include "ghs/thinning.hpp"

#include "json.hpp"

namespace ghs {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// Script tokens, with tree texts (which contain spaces) kept whole by
// balancing parentheses.
std::vector<std::string> scriptTokens(const std::string& line) {
    std::vector<std::string> raw = tokenize(line);
    std::vector<std::string> out;
    for (size_t i = 0; i < raw.size(); ++i) {
        std::string tok = raw[i];
        auto depth = [](const std::string& s) {
            long d = 0;
            for (char c : s) d += c == '(' ? 1 : c == ')' ? -1 : 0;
            return d;
        };
        while (depth(tok) > 0 && i + 1 < raw.size()) tok += " " + raw[++i];
        out.push_back(tok);
    }
    return out;
}

int parseInt(const std::string& s, int line_no) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw GhsError(Err::ParseError,
                       "line " + std::to_string(line_no) + ": bad integer '" + s + "'");
    }
}

std::vector<std::string> splitList(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// key=value fields after the leading words of a line.
std::map<std::string, std::string> keyValues(const std::vector<std::string>& toks,
                                             size_t from, int line_no) {
    std::map<std::string, std::string> kv;
    for (size_t i = from; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos)
            throw GhsError(Err::ParseError, "line " + std::to_string(line_no) +
                                                ": expected key=value, got '" + toks[i] + "'");
        std::string k = toks[i].substr(0, eq);
        if (kv.count(k))
            throw GhsError(Err::ParseError,
                           "line " + std::to_string(line_no) + ": duplicate key " + k);
        kv[k] = toks[i].substr(eq + 1);
    }
    return kv;
}

const std::string& need(const std::map<std::string, std::string>& kv,
                        const std::string& key, int line_no) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw GhsError(Err::ParseError,
                       "line " + std::to_string(line_no) + ": missing " + key + "=");
    return it->second;
}

// ids must survive the list and report separators
const std::string& checkId(const std::string& id, int line_no) {
    bool ok = !id.empty();
    for (char c : id)
        ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                    c == '.' || c == '-' || c == '~');
    if (!ok)
        throw GhsError(Err::ParseError,
                       "line " + std::to_string(line_no) + ": bad identifier '" + id + "'");
    return id;
}

}  // namespace

std::vector<std::string> splitLines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

GeneralizedSurface parse(const std::string& text) {
    auto lines = splitLines(text);
    GeneralizedSurface g;
    bool header_seen = false;
    for (size_t i = 0; i < lines.size(); ++i) {
        int line_no = static_cast<int>(i) + 1;
        std::string line = lines[i];
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!header_seen) {
            if (toks.size() != 2 || toks[0] != "ghs" || toks[1] != "v1")
                throw GhsError(Err::ParseError,
                               "line " + std::to_string(line_no) + ": expected 'ghs v1'");
            header_seen = true;
            continue;
        }
        const std::string& kind = toks[0];
        if (kind == "vertex") {
            if (toks.size() != 2)
                throw GhsError(Err::ParseError,
                               "line " + std::to_string(line_no) + ": vertex <id>");
            if (!g.vertices.insert(checkId(toks[1], line_no)).second)
                throw GhsError(Err::ParseError, "line " + std::to_string(line_no) +
                                                    ": duplicate vertex " + toks[1]);
        } else if (kind == "edge") {
            if (toks.size() < 3)
                throw GhsError(Err::ParseError,
                               "line " + std::to_string(line_no) + ": edge <id> thick|thin ...");
            SurfaceEdge e;
            e.id = checkId(toks[1], line_no);
            if (toks[2] == "thick")
                e.role = EdgeRole::Thick;
            else if (toks[2] == "thin")
                e.role = EdgeRole::Thin;
            else
                throw GhsError(Err::ParseError, "line " + std::to_string(line_no) +
                                                    ": bad role " + toks[2]);
            auto kv = keyValues(toks, 3, line_no);
            e.genus = parseInt(need(kv, "genus", line_no), line_no);
            e.tail = need(kv, "tail", line_no);
            e.head = need(kv, "head", line_no);
            if (!g.edges.emplace(e.id, e).second)
                throw GhsError(Err::ParseError, "line " + std::to_string(line_no) +
                                                    ": duplicate edge " + e.id);
        } else if (kind == "boundary") {
            if (toks.size() < 2)
                throw GhsError(Err::ParseError,
                               "line " + std::to_string(line_no) + ": boundary <id> ...");
            BoundaryMark m;
            m.id = checkId(toks[1], line_no);
            auto kv = keyValues(toks, 2, line_no);
            m.genus = parseInt(need(kv, "genus", line_no), line_no);
            m.vertex = need(kv, "vertex", line_no);
            if (!g.marks.emplace(m.id, m).second)
                throw GhsError(Err::ParseError, "line " + std::to_string(line_no) +
                                                    ": duplicate boundary " + m.id);
        } else if (kind == "sphere") {
            if (toks.size() < 2)
                throw GhsError(Err::ParseError,
                               "line " + std::to_string(line_no) + ": sphere <id> ...");
            TrackedSphere s;
            s.id = checkId(toks[1], line_no);
            auto kv = keyValues(toks, 2, line_no);
            if (kv.count("host") && kv.count("edge"))
                throw GhsError(Err::ParseError, "line " + std::to_string(line_no) +
                                                    ": sphere is host= or edge=, not both");
            if (kv.count("host")) {
                s.state = SphereState::Hosted;
                s.host = kv.at("host");
                if (kv.count("encloses"))
                    for (const auto& e : splitList(kv.at("encloses")))
                        s.encloses.insert(e);
            } else {
                s.state = SphereState::Crossing;
                s.edge = need(kv, "edge", line_no);
                s.count = parseInt(need(kv, "count", line_no), line_no);
            }
            if (!g.spheres.emplace(s.id, s).second)
                throw GhsError(Err::ParseError, "line " + std::to_string(line_no) +
                                                    ": duplicate sphere " + s.id);
        } else if (kind == "disc") {
            if (toks.size() < 2)
                throw GhsError(Err::ParseError,
                               "line " + std::to_string(line_no) + ": disc <id> ...");
            TrackedDisc d;
            d.id = checkId(toks[1], line_no);
            auto kv = keyValues(toks, 2, line_no);
            d.edge = need(kv, "edge", line_no);
            d.count = parseInt(need(kv, "count", line_no), line_no);
            d.boundary = need(kv, "boundary", line_no);
            if (!g.discs.emplace(d.id, d).second)
                throw GhsError(Err::ParseError, "line " + std::to_string(line_no) +
                                                    ": duplicate disc " + d.id);
        } else {
            throw GhsError(Err::ParseError,
                           "line " + std::to_string(line_no) + ": unknown kind " + kind);
        }
    }
    if (!header_seen) throw GhsError(Err::ParseError, "missing 'ghs v1' header");
    requireValid(g);
    return g;
}

GeneralizedSurface parseFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GhsError(Err::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string serialize(const GeneralizedSurface& g) {
    std::ostringstream os;
    os << "ghs v1\n";
    for (const auto& v : g.vertices) os << "vertex " << v << "\n";
    for (const auto& [id, e] : g.edges)
        os << "edge " << id << (e.role == EdgeRole::Thick ? " thick" : " thin")
           << " genus=" << e.genus << " tail=" << e.tail << " head=" << e.head << "\n";
    for (const auto& [id, m] : g.marks)
        os << "boundary " << id << " genus=" << m.genus << " vertex=" << m.vertex << "\n";
    for (const auto& [id, s] : g.spheres) {
        if (s.state == SphereState::Hosted) {
            os << "sphere " << id << " host=" << s.host;
            if (!s.encloses.empty()) {
                os << " encloses=";
                bool first = true;
                for (const auto& e : s.encloses) {
                    os << (first ? "" : ",") << e;
                    first = false;
                }
            }
            os << "\n";
        } else {
            os << "sphere " << id << " edge=" << s.edge << " count=" << s.count << "\n";
        }
    }
    for (const auto& [id, d] : g.discs)
        os << "disc " << id << " edge=" << d.edge << " count=" << d.count
           << " boundary=" << d.boundary << "\n";
    return os.str();
}

namespace {

std::map<std::string, std::string> parseAssign(const std::string& s, int line_no) {
    std::map<std::string, std::string> out;
    for (const auto& item : splitList(s)) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw GhsError(Err::ParseError, "line " + std::to_string(line_no) +
                                                ": assign item '" + item + "'");
        out[item.substr(0, colon)] = item.substr(colon + 1);
    }
    return out;
}

AmalgSide inferSide(const GeneralizedSurface& g, const EdgeId& center,
                    const std::vector<EdgeId>& partners) {
    auto cit = g.edges.find(center);
    if (cit == g.edges.end()) throw GhsError(Err::UnknownEdge, center);
    bool any_below = false, any_above = false;
    for (const auto& pid : partners) {
        auto pit = g.edges.find(pid);
        if (pit == g.edges.end()) throw GhsError(Err::UnknownEdge, pid);
        for (const auto& [id, e] : g.edges) {
            if (e.role != EdgeRole::Thin) continue;
            if (e.tail == pit->second.head && e.head == cit->second.tail)
                any_below = true;
            if (e.tail == cit->second.head && e.head == pit->second.tail)
                any_above = true;
        }
    }
    if (any_below == any_above)
        throw GhsError(Err::ParseError,
                       "amalgamate needs side=below|above for " + center);
    return any_below ? AmalgSide::PartnersBelow : AmalgSide::PartnersAbove;
}

}  // namespace

GeneralizedSurface applyScriptLine(const GeneralizedSurface& g, const std::string& line) {
    std::string stripped = line;
    auto hash = stripped.find('#');
    if (hash != std::string::npos) stripped = stripped.substr(0, hash);
    auto toks = scriptTokens(stripped);
    if (toks.empty()) return g;
    const std::string& verb = toks[0];
    const int ln = 1;

    if (verb == "consolidate") {
        auto kv = keyValues(toks, 1, ln);
        return consolidate(g, need(kv, "h", ln), need(kv, "f", ln));
    }
    if (verb == "untelescope" || verb == "type2") {
        auto kv = keyValues(toks, 1, ln);
        EdgeId h = need(kv, "h", ln);
        auto eit = g.edges.find(h);
        if (eit == g.edges.end()) throw GhsError(Err::UnknownEdge, h);
        SplitTree t = parseTreeText(need(kv, "tree", ln), eit->second.genus);
        if (kv.count("assign")) t.assignment = parseAssign(kv.at("assign"), ln);
        if (verb == "untelescope") return untelescope(g, h, t);
        return typeIIMove(g, h, t, need(kv, "target", ln));
    }
    if (verb == "amalgamate") {
        auto kv = keyValues(toks, 1, ln);
        AmalgSpec spec;
        spec.center = need(kv, "center", ln);
        spec.partners = splitList(need(kv, "partners", ln));
        if (kv.count("side")) {
            if (kv.at("side") == "below")
                spec.side = AmalgSide::PartnersBelow;
            else if (kv.at("side") == "above")
                spec.side = AmalgSide::PartnersAbove;
            else
                throw GhsError(Err::ParseError, "side=below|above");
        } else {
            spec.side = inferSide(g, spec.center, spec.partners);
        }
        if (kv.count("tubes"))
            for (const auto& item : splitList(kv.at("tubes"))) {
                auto colon = item.find(':');
                if (colon == std::string::npos)
                    throw GhsError(Err::ParseError, "tubes item '" + item + "'");
                spec.tubes[item.substr(0, colon)] =
                    parseInt(item.substr(colon + 1), ln);
            }
        return amalgamate(g, spec);
    }
    if (verb == "selfamalg") {
        auto kv = keyValues(toks, 1, ln);
        SphereCollection p;
        for (const auto& e : splitList(need(kv, "p", ln))) p.edges.insert(e);
        return selfAmalgamate(g, p);
    }
    if (verb == "juggle") {
        auto kv = keyValues(toks, 1, ln);
        JuggleSpec spec;
        if (kv.count("sphere")) {
            spec.sphere = kv.at("sphere");
        } else {
            spec.vertex = need(kv, "vertex", ln);
            if (kv.count("encloses"))
                for (const auto& e : splitList(kv.at("encloses")))
                    spec.encloses.insert(e);
        }
        spec.pierced = need(kv, "p", ln);
        spec.landing = need(kv, "r", ln);
        return juggle(g, spec);
    }
    if (verb == "merge") {
        auto kv = keyValues(toks, 1, ln);
        return mergeTubes(g, need(kv, "s", ln));
    }
    if (verb == "fullamalg") return fullyAmalgamate(g).first;
    if (verb == "amalgobtained") return amalgamationObtained(g).first;
    throw GhsError(Err::ParseError, "unknown verb " + verb);
}

GeneralizedSurface applyScript(const GeneralizedSurface& g,
                               const std::vector<std::string>& lines) {
    GeneralizedSurface cur = g;
    for (const auto& line : lines) cur = applyScriptLine(cur, line);
    return cur;
}

GeneralizedSurface replay(const GeneralizedSurface& g, const MoveLog& log) {
    return applyScript(g, log);
}

StepRecord recordStep(const GeneralizedSurface& g, int index, const std::string& op) {
    StepRecord r;
    r.index = index;
    r.op = op;
    r.width = width(g).entries;
    r.netchi = netChi(g);
    r.acyclic = isAcyclic(g);
    r.cycle_sphere = cycleSphereCondition(g);
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, s] : g.spheres) {
        os << (first ? "" : ",") << id;
        if (s.state == SphereState::Hosted)
            os << ":h:" << s.host;
        else
            os << ":x:" << s.edge << ":" << s.count;
        first = false;
    }
    for (const auto& [id, d] : g.discs) {
        os << (first ? "" : ",") << id << ":d:" << d.edge << ":" << d.count;
        first = false;
    }
    r.tracked = os.str();
    return r;
}

ScenarioReport runScript(const GeneralizedSurface& g,
                         const std::vector<std::string>& lines,
                         GeneralizedSurface* out) {
    ScenarioReport rep;
    GeneralizedSurface cur = g;
    rep.steps.push_back(recordStep(cur, 0, "load"));
    int idx = 1;
    for (const auto& line : lines) {
        std::string stripped = line;
        auto hash = stripped.find('#');
        if (hash != std::string::npos) stripped = stripped.substr(0, hash);
        auto toks = tokenize(stripped);
        if (toks.empty()) continue;
        cur = applyScriptLine(cur, stripped);
        rep.steps.push_back(recordStep(cur, idx++, toks[0]));
    }
    rep.heegaard = cur.edges.size() == 1 && cur.vertices.size() == 2;
    {
        // report a genus only when it is unambiguous
        int genus = -1, thick = 0;
        for (const auto& [id, e] : cur.edges)
            if (e.role == EdgeRole::Thick) {
                genus = e.genus;
                thick++;
            }
        rep.final_genus = thick == 1 ? genus : -1;
    }
    bool all_one = true;
    for (const auto& [id, s] : cur.spheres) {
        int c = s.state == SphereState::Crossing ? s.count : -1;
        rep.final_counts.emplace_back(id, c);
        if (c != 1) all_one = false;
    }
    for (const auto& [id, d] : cur.discs) {
        rep.final_counts.emplace_back(id, d.count);
        if (d.count != 1) all_one = false;
    }
    rep.counts_all_one = all_one;
    rep.genus_matches_netchi =
        rep.heegaard && rep.final_genus == (netChi(g) + 2) / 2;
    if (out) *out = cur;
    return rep;
}

namespace {

std::string joinInts(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

std::string reportText(const ScenarioReport& r) {
    std::ostringstream os;
    os << "ghs-report v1\n";
    for (const auto& s : r.steps) {
        os << "step " << s.index << " op=" << s.op << " width=" << joinInts(s.width)
           << " netchi=" << s.netchi << " acyclic=" << (s.acyclic ? 1 : 0)
           << " cyclesphere=" << (s.cycle_sphere ? 1 : 0);
        if (!s.tracked.empty()) os << " tracked=" << s.tracked;
        os << "\n";
    }
    os << "final heegaard=" << (r.heegaard ? 1 : 0) << " genus=" << r.final_genus;
    if (!r.final_counts.empty()) {
        os << " counts=";
        bool first = true;
        for (const auto& [id, c] : r.final_counts) {
            os << (first ? "" : ",") << id << ":" << c;
            first = false;
        }
    }
    os << " allone=" << (r.counts_all_one ? 1 : 0)
       << " netchipred=" << (r.genus_matches_netchi ? 1 : 0) << "\n";
    return os.str();
}

std::string reportJson(const ScenarioReport& r) {
    nlohmann::json j;
    j["steps"] = nlohmann::json::array();
    for (const auto& s : r.steps) {
        nlohmann::json js;
        js["index"] = s.index;
        js["op"] = s.op;
        js["width"] = s.width;
        js["netchi"] = s.netchi;
        js["acyclic"] = s.acyclic;
        js["cyclesphere"] = s.cycle_sphere;
        js["tracked"] = s.tracked;
        j["steps"].push_back(js);
    }
    j["final"]["heegaard"] = r.heegaard;
    j["final"]["genus"] = r.final_genus;
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [id, c] : r.final_counts) counts[id] = c;
    j["final"]["counts"] = counts;
    j["final"]["allone"] = r.counts_all_one;
    j["final"]["netchipred"] = r.genus_matches_netchi;
    return j.dump(2) + "\n";
}

}  // namespace ghs
