#include "reeb3/graph_algos.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace reeb3 {

std::map<std::string, int> connected_components(const LabeledReebDigraph& g) {
    std::map<std::string, std::string> parent;
    for (const std::string& v : g.vertices()) parent[v] = v;

    std::function<std::string(const std::string&)> find = [&](const std::string& v) {
        std::string root = v;
        while (parent[root] != root) root = parent[root];
        std::string cur = v;
        while (parent[cur] != root) {
            std::string next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        return root;
    };

    for (const Edge& e : g.edges()) {
        std::string a = find(e.src), b = find(e.dst);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    // vertices() iterates sorted, so components are numbered by smallest member
    std::map<std::string, int> id;
    std::map<std::string, int> root_id;
    for (const std::string& v : g.vertices()) {
        std::string r = find(v);
        auto it = root_id.find(r);
        if (it == root_id.end())
            it = root_id.emplace(r, static_cast<int>(root_id.size())).first;
        id[v] = it->second;
    }
    return id;
}

int connected_component_count(const LabeledReebDigraph& g) {
    auto comps = connected_components(g);
    int n = 0;
    for (const auto& [v, c] : comps) n = std::max(n, c + 1);
    return n;
}

bool is_connected(const LabeledReebDigraph& g) {
    return connected_component_count(g) == 1;
}

int betti1(const LabeledReebDigraph& g) {
    return g.edge_count() - g.vertex_count() + connected_component_count(g);
}

namespace {

struct CycleSearch {
    const LabeledReebDigraph& g;
    int anchor;
    std::string u;  // anchor endpoint the walk must reach
    std::set<std::string> visited;
    std::vector<int> path;
    std::vector<std::vector<int>>& out;

    void run(const std::string& cur) {
        for (int j : g.incident_edges(cur)) {
            if (j <= anchor) continue;
            const Edge& e = g.edge(j);
            if (e.src == e.dst) continue;  // loops close only as 1-cycles
            if (std::find(path.begin(), path.end(), j) != path.end()) continue;
            const std::string& w = (e.src == cur) ? e.dst : e.src;
            if (w == u) {
                std::vector<int> cycle = path;
                cycle.push_back(anchor);
                cycle.push_back(j);
                std::sort(cycle.begin(), cycle.end());
                out.push_back(std::move(cycle));
            } else if (!visited.count(w)) {
                visited.insert(w);
                path.push_back(j);
                run(w);
                path.pop_back();
                visited.erase(w);
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int>> simple_cycles(const LabeledReebDigraph& g) {
    std::vector<std::vector<int>> out;
    for (int a = 0; a < g.edge_count(); ++a) {
        const Edge& e = g.edge(a);
        if (e.src == e.dst) {
            out.push_back({a});
            continue;
        }
        // Cycles whose smallest edge index is the anchor: simple paths from
        // e.dst back to e.src over strictly larger edge indices.
        CycleSearch search{g, a, e.src, {e.dst}, {}, out};
        search.run(e.dst);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_cactus(const LabeledReebDigraph& g) {
    std::vector<int> uses(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& cycle : simple_cycles(g))
        for (int e : cycle)
            if (++uses[static_cast<std::size_t>(e)] > 1) return false;
    return true;
}

}  // namespace reeb3
