#include "reeb3/io.hpp"

#include <json.hpp>

#include "reeb3/validate.hpp"

namespace reeb3 {

namespace {

bool name_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_';
}

// One line of input; columns are 1-based.
struct LineScanner {
    const std::string& s;
    int line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line, static_cast<int>(pos) + 1, msg);
    }
    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    void require_ws() {
        if (done() || (peek() != ' ' && peek() != '\t')) fail("expected whitespace");
        while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
    }

    std::string name() {
        std::size_t start = pos;
        while (!done() && name_char(peek())) ++pos;
        if (pos == start) fail("expected a name");
        return s.substr(start, pos - start);
    }

    void literal(const std::string& tok) {
        if (s.compare(pos, tok.size(), tok) != 0) fail("expected '" + tok + "'");
        pos += tok.size();
    }

    void end() {
        if (!done()) fail("unexpected trailing characters");
    }

    long long integer() {
        std::size_t start = pos;
        while (!done() && peek() >= '0' && peek() <= '9') ++pos;
        if (pos == start) fail("expected digits");
        try {
            return std::stoll(s.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            pos = start;
            fail("number out of range");
        }
    }

    Rational rational() {
        long long sign = 1;
        if (!done() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            ++pos;
        }
        long long num = integer();
        long long den = 1;
        if (!done() && peek() == '/') {
            ++pos;
            std::size_t den_col = pos;
            den = integer();
            if (den == 0) {
                pos = den_col;
                fail("zero denominator");
            }
        }
        return Rational(sign * num, den);
    }

    SingularityKind sing() {
        for (SingularityKind k :
             {SingularityKind::MorsePoint, SingularityKind::Circle,
              SingularityKind::SphereBott, SingularityKind::TorusBott,
              SingularityKind::ProjectivePlane}) {
            std::string tok = to_string(k);
            if (s.compare(pos, tok.size(), tok) == 0 &&
                (pos + tok.size() >= s.size() || !name_char(s[pos + tok.size()]))) {
                pos += tok.size();
                return k;
            }
        }
        fail("expected one of point|circle|sphere|torus|rp2");
    }

    FiberLabel label() {
        if (s.compare(pos, 2, "S2") == 0 && (pos + 2 >= s.size())) {
            pos += 2;
            return FiberLabel::Sphere2;
        }
        if (s.compare(pos, 2, "T2") == 0 && (pos + 2 >= s.size())) {
            pos += 2;
            return FiberLabel::Torus2;
        }
        fail("expected S2 or T2");
    }
};

}  // namespace

LabeledReebDigraph parse(const std::string& text) {
    LabeledReebDigraph g;
    bool any_height = false;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string line = text.substr(start, nl == std::string::npos ? nl : nl - start);
        if (nl == std::string::npos && line.empty() && start == text.size()) break;
        ++line_no;
        start = (nl == std::string::npos) ? text.size() + 1 : nl + 1;

        if (line.find('\r') != std::string::npos)
            throw ParseError(line_no, static_cast<int>(line.find('\r')) + 1,
                             "carriage return; use LF line endings");

        bool blank = true;
        for (char c : line)
            if (c != ' ' && c != '\t') blank = false;
        if (blank) continue;
        if (line[0] == '#') continue;

        LineScanner sc{line, line_no, 0};
        if (line[0] == 'v' && line.size() > 1 && (line[1] == ' ' || line[1] == '\t')) {
            sc.pos = 1;
            sc.require_ws();
            std::size_t name_col = sc.pos;
            std::string id = sc.name();
            std::optional<Rational> h;
            std::optional<SingularityKind> k;
            if (!sc.done()) {
                std::size_t mark = sc.pos;
                sc.require_ws();
                if (!sc.done() && sc.peek() == '@') {
                    ++sc.pos;
                    h = sc.rational();
                    mark = sc.pos;
                    if (!sc.done()) sc.require_ws();
                }
                if (!sc.done() && sc.peek() == '!') {
                    ++sc.pos;
                    k = sc.sing();
                } else if (sc.pos != mark) {
                    sc.fail("expected '@', '!' or end of line");
                }
            }
            sc.end();
            if (g.has_vertex(id))
                throw DuplicateDeclarationError(line_no, static_cast<int>(name_col) + 1, id);
            g.add_vertex(id);
            if (h) {
                g.set_height(id, *h);
                any_height = true;
            }
            if (k) g.set_sing(id, *k);
        } else if (line[0] == 'e' && line.size() > 1 && (line[1] == ' ' || line[1] == '\t')) {
            sc.pos = 1;
            sc.require_ws();
            std::size_t src_col = sc.pos;
            std::string src = sc.name();
            sc.require_ws();
            sc.literal("->");
            sc.require_ws();
            std::size_t dst_col = sc.pos;
            std::string dst = sc.name();
            sc.require_ws();
            sc.literal(":");
            sc.require_ws();
            FiberLabel l = sc.label();
            sc.end();
            if (!g.has_vertex(src))
                throw UndeclaredVertexError(line_no, static_cast<int>(src_col) + 1, src);
            if (!g.has_vertex(dst))
                throw UndeclaredVertexError(line_no, static_cast<int>(dst_col) + 1, dst);
            g.add_edge(src, dst, l);
        } else {
            throw ParseError(line_no, 1, "expected 'v', 'e', '#' or a blank line");
        }
    }

    if (any_height) g = complete_heights(g);
    return g;
}

std::string serialize(const LabeledReebDigraph& g) {
    std::string out;
    for (const std::string& v : g.vertices()) {
        out += "v " + v;
        if (auto h = g.height(v)) out += " @" + rational_to_string(*h);
        if (auto k = g.sing(v)) out += std::string(" !") + to_string(*k);
        out += "\n";
    }
    for (const Edge& e : g.edges())
        out += "e " + e.src + " -> " + e.dst + " : " + to_string(e.label) + "\n";
    return out;
}

std::string export_dot(const LabeledReebDigraph& g,
                       const std::set<std::string>& boundary_markers) {
    std::string out = "digraph reeb {\n  node [shape=point width=0.12];\n";
    for (const std::string& v : g.vertices()) {
        out += "  \"" + v + "\"";
        if (boundary_markers.count(v)) out += " [color=blue]";
        out += ";\n";
    }
    for (const Edge& e : g.edges()) {
        out += "  \"" + e.src + "\" -> \"" + e.dst + "\" [color=" +
               (e.label == FiberLabel::Sphere2 ? "blue" : "red") + "];\n";
    }
    out += "}\n";
    return out;
}

namespace {

nlohmann::ordered_json census_to_json(const ManifoldCensus& c) {
    nlohmann::ordered_json j;
    j["member_of_class"] = c.member_of_class;
    j["torus_bundle_count"] = c.torus_bundle_count;
    j["arc_summands"] = c.arc_summands;
    j["rp3_count"] = c.rp3_count;
    j["residual_cycle_count"] = c.residual_cycle_count;
    return j;
}

}  // namespace

std::string export_json(const LabeledReebDigraph& g, const ManifoldCensus* census) {
    nlohmann::ordered_json j;
    j["format"] = "reeb3kit/1";
    j["vertices"] = nlohmann::ordered_json::array();
    for (const std::string& v : g.vertices()) {
        nlohmann::ordered_json jv;
        jv["id"] = v;
        if (auto h = g.height(v))
            jv["height"] = rational_to_string(*h);
        else
            jv["height"] = nullptr;
        if (auto k = g.sing(v))
            jv["sing"] = to_string(*k);
        else
            jv["sing"] = nullptr;
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) {
        nlohmann::ordered_json je;
        je["src"] = e.src;
        je["dst"] = e.dst;
        je["label"] = to_string(e.label);
        j["edges"].push_back(je);
    }
    if (census) j["census"] = census_to_json(*census);
    return j.dump(2) + "\n";
}

std::string census_json(const ManifoldCensus& census) {
    return census_to_json(census).dump(2) + "\n";
}

}  // namespace reeb3
