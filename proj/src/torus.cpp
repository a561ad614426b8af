#include "reeb3/torus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace reeb3 {

namespace {

struct Component {
    std::set<std::string> vertices;
    std::vector<int> edges;
};

std::vector<Component> torus_components(const LabeledReebDigraph& g) {
    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find = [&](const std::string& v) {
        std::string root = v;
        while (parent[root] != root) root = parent[root];
        return root;
    };

    std::vector<int> torus_edges;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (e.label != FiberLabel::Torus2) continue;
        torus_edges.push_back(i);
        if (!parent.count(e.src)) parent[e.src] = e.src;
        if (!parent.count(e.dst)) parent[e.dst] = e.dst;
        std::string a = find(e.src), b = find(e.dst);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    std::map<std::string, Component> by_root;
    for (int i : torus_edges) {
        Component& c = by_root[find(g.edge(i).src)];
        c.vertices.insert(g.edge(i).src);
        c.vertices.insert(g.edge(i).dst);
        c.edges.push_back(i);
    }
    std::vector<Component> out;
    for (auto& [root, c] : by_root) out.push_back(std::move(c));
    return out;
}

int torus_degree(const Component& c, const LabeledReebDigraph& g, const std::string& v) {
    int d = 0;
    for (int i : c.edges) {
        if (g.edge(i).src == v) ++d;
        if (g.edge(i).dst == v) ++d;
    }
    return d;
}

// Orders a path component's edges from one endpoint to the other, or a cycle
// starting at its smallest vertex. Assumes torus degrees are 1 or 2.
std::vector<int> walk(const Component& c, const LabeledReebDigraph& g,
                      const std::string& start) {
    std::vector<int> order;
    std::set<int> used;
    std::string cur = start;
    for (;;) {
        int next = -1;
        for (int i : c.edges) {
            if (used.count(i)) continue;
            const Edge& e = g.edge(i);
            if (e.src == cur || e.dst == cur) {
                next = i;
                break;
            }
        }
        if (next < 0) break;
        used.insert(next);
        order.push_back(next);
        const Edge& e = g.edge(next);
        cur = (e.src == cur) ? e.dst : e.src;
    }
    return order;
}

}  // namespace

TorusDecomposition decompose_torus_subgraph(const LabeledReebDigraph& g) {
    TorusDecomposition out;

    for (const Component& c : torus_components(g)) {
        std::vector<std::string> deg1, deg2;
        bool branched = false;
        for (const std::string& v : c.vertices) {
            int d = torus_degree(c, g, v);
            if (d == 1) deg1.push_back(v);
            else if (d == 2) deg2.push_back(v);
            else branched = true;
        }
        std::vector<int> sorted_edges = c.edges;
        std::sort(sorted_edges.begin(), sorted_edges.end());

        if (branched) {
            out.defects.push_back({sorted_edges, "a vertex carries three torus edges"});
            continue;
        }

        if (deg1.empty()) {
            // Single cycle. Check its restriction extrema: a vertex whose two
            // cycle edges point the same way must be a full-graph extremum of
            // degree 2.
            std::string why;
            for (const std::string& v : c.vertices) {
                int in = 0, outn = 0;
                for (int i : c.edges) {
                    if (g.edge(i).dst == v) ++in;
                    if (g.edge(i).src == v) ++outn;
                }
                if (in == 2 || outn == 2) {
                    if (!g.is_extremum(v))
                        why = "cycle-local extremum " + v + " is not a graph extremum";
                    else if (g.degree(v) != 2)
                        why = "cycle-local extremum " + v + " has degree " +
                              std::to_string(g.degree(v));
                    if (!why.empty()) break;
                }
            }
            if (!why.empty()) {
                out.defects.push_back({sorted_edges, why});
            } else {
                out.cycles.push_back(walk(c, g, *c.vertices.begin()));
            }
            continue;
        }

        if (deg1.size() != 2) {
            out.defects.push_back({sorted_edges, "component is neither a path nor a cycle"});
            continue;
        }

        // Path. Boundary vertices must be degree-2 non-extremal transitions,
        // interior vertices degree-2 extrema.
        std::string why;
        for (const std::string& v : deg1) {
            if (g.is_extremum(v))
                why = "path endpoint " + v + " is an extremum";
            else if (g.degree(v) != 2)
                why = "path endpoint " + v + " has degree " + std::to_string(g.degree(v));
            if (!why.empty()) break;
        }
        if (why.empty()) {
            for (const std::string& v : deg2) {
                if (!g.is_extremum(v))
                    why = "path interior vertex " + v + " is not an extremum";
                else if (g.degree(v) != 2)
                    why = "path interior vertex " + v + " has degree " +
                          std::to_string(g.degree(v));
                if (!why.empty()) break;
            }
        }
        if (!why.empty()) {
            out.defects.push_back({sorted_edges, why});
        } else {
            out.arcs.push_back(walk(c, g, std::min(deg1[0], deg1[1])));
        }
    }

    return out;
}

}  // namespace reeb3
