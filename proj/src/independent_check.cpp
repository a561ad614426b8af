#include "reeb3/independent_check.hpp"

#include <map>
#include <regex>
#include <vector>

namespace reeb3::oracle {

namespace {

enum Color { White, Gray, Black };

bool dfs_finds_cycle(const std::string& v,
                     const std::map<std::string, std::vector<std::string>>& adj,
                     std::map<std::string, Color>& color) {
    color[v] = Gray;
    auto it = adj.find(v);
    if (it != adj.end())
        for (const std::string& w : it->second) {
            if (color[w] == Gray) return true;
            if (color[w] == White && dfs_finds_cycle(w, adj, color)) return true;
        }
    color[v] = Black;
    return false;
}

}  // namespace

IndependentVerdict check_problem1_independent(const LabeledReebDigraph& g) {
    IndependentVerdict verdict;
    auto flag = [&verdict](ViolationKind k) { verdict.kinds.insert(k); };

    if (g.edges().empty()) {
        flag(ViolationKind::NoEdges);
        verdict.valid = false;
        return verdict;
    }

    // Tallies per vertex, gathered in one sweep over the edge list.
    struct Tally {
        int in_s = 0, in_t = 0, out_s = 0, out_t = 0;
    };
    std::map<std::string, Tally> tally;
    for (const std::string& v : g.vertices()) tally[v];
    std::map<std::string, std::vector<std::string>> adj;
    for (const Edge& e : g.edges()) {
        bool sphere = e.label == FiberLabel::Sphere2;
        (sphere ? tally[e.src].out_s : tally[e.src].out_t)++;
        (sphere ? tally[e.dst].in_s : tally[e.dst].in_t)++;
        adj[e.src].push_back(e.dst);
    }

    for (const auto& [v, t] : tally)
        if (t.in_s + t.in_t + t.out_s + t.out_t == 0) flag(ViolationKind::IsolatedVertex);

    {
        std::map<std::string, Color> color;
        for (const std::string& v : g.vertices()) color[v] = White;
        for (const std::string& v : g.vertices())
            if (color[v] == White && dfs_finds_cycle(v, adj, color)) {
                flag(ViolationKind::DirectedCycle);
                break;
            }
    }

    for (const auto& [v, t] : tally) {
        int in = t.in_s + t.in_t;
        int out = t.out_s + t.out_t;
        int deg = in + out;
        bool extremum = deg > 0 && (in == 0 || out == 0);
        auto ann = g.sing(v);

        if (!extremum) {
            if (deg > 0 && ann && *ann != SingularityKind::MorsePoint)
                flag(ViolationKind::AnnotationIncompatible);
            continue;
        }

        bool good_shape = true;
        if (deg >= 3) {
            flag(ViolationKind::ExtremumDegree);
            good_shape = false;
        }
        if ((t.in_s + t.out_s) > 0 && (t.in_t + t.out_t) > 0) {
            flag(ViolationKind::ExtremumMixedLabels);
            good_shape = false;
        }
        if (!ann) {
            flag(ViolationKind::ExtremumMissingAnnotation);
        } else if (good_shape) {
            bool torus_side = (t.in_t + t.out_t) > 0;
            bool compatible = false;
            switch (*ann) {
                case SingularityKind::MorsePoint:
                case SingularityKind::ProjectivePlane:
                    compatible = !torus_side && deg == 1;
                    break;
                case SingularityKind::SphereBott:
                    compatible = !torus_side && deg == 2;
                    break;
                case SingularityKind::Circle:
                    compatible = torus_side && deg == 1;
                    break;
                case SingularityKind::TorusBott:
                    compatible = torus_side && deg == 2;
                    break;
            }
            if (!compatible) flag(ViolationKind::AnnotationIncompatible);
        }
    }

    for (const Edge& e : g.edges()) {
        auto a = g.height(e.src);
        auto b = g.height(e.dst);
        if (a.has_value() && b.has_value() && *a >= *b)
            flag(ViolationKind::HeightOrientation);
    }

    verdict.valid = verdict.kinds.empty();
    return verdict;
}

bool document_is_valid(const std::string& text) {
    if (text.find('\r') != std::string::npos) return false;

    static const std::regex vline(
        R"(^v[ \t]+([A-Za-z0-9_]+)([ \t]+@([+-])?([0-9]+)(/([0-9]+))?)?([ \t]+!(point|circle|sphere|torus|rp2))?$)");
    static const std::regex eline(
        R"(^e[ \t]+([A-Za-z0-9_]+)[ \t]+->[ \t]+([A-Za-z0-9_]+)[ \t]+:[ \t]+(S2|T2)$)");
    static const std::regex blank(R"(^[ \t]*$)");

    auto digits_fit = [](const std::string& ds) {
        // Mirrors the parser's acceptance: the unsigned digit string itself
        // must fit in a long long.
        try {
            (void)std::stoll(ds);
        } catch (const std::out_of_range&) {
            return false;
        }
        return true;
    };

    std::set<std::string> declared;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string line =
            text.substr(start, nl == std::string::npos ? nl : nl - start);
        if (nl == std::string::npos && line.empty() && start == text.size()) break;
        start = (nl == std::string::npos) ? text.size() + 1 : nl + 1;

        if (!line.empty() && line[0] == '#') continue;
        if (std::regex_match(line, blank)) continue;

        std::smatch m;
        if (std::regex_match(line, m, vline)) {
            if (!declared.insert(m[1].str()).second) return false;
            if (m[4].matched && !digits_fit(m[4].str())) return false;
            if (m[6].matched) {
                if (!digits_fit(m[6].str())) return false;
                bool all_zero = m[6].str().find_first_not_of('0') == std::string::npos;
                if (all_zero) return false;
            }
        } else if (std::regex_match(line, m, eline)) {
            if (!declared.count(m[1].str())) return false;
            if (!declared.count(m[2].str())) return false;
        } else {
            return false;
        }
    }
    return true;
}

}  // namespace reeb3::oracle
