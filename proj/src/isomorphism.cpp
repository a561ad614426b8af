#include "reeb3/isomorphism.hpp"

#include <algorithm>
#include <tuple>

namespace reeb3 {

namespace {

using ClassKey = std::tuple<int, int, int, int, int>;  // signature counts + sing

ClassKey class_key(const LabeledReebDigraph& g, const std::string& v) {
    VertexSignature s = g.signature(v);
    auto eff = g.effective_sing(v);
    int k = eff ? static_cast<int>(*eff) : -1;
    return {s.in_sphere, s.in_torus, s.out_sphere, s.out_torus, k};
}

// Multiset of edges between an ordered vertex pair, split by label.
std::pair<int, int> pair_counts(const LabeledReebDigraph& g, const std::string& a,
                                const std::string& b) {
    int s = 0, t = 0;
    for (const Edge& e : g.edges())
        if (e.src == a && e.dst == b)
            (e.label == FiberLabel::Sphere2 ? s : t)++;
    return {s, t};
}

struct Matcher {
    const LabeledReebDigraph& g1;
    const LabeledReebDigraph& g2;
    std::vector<std::string> order1;
    std::map<std::string, std::vector<std::string>> candidates;
    std::map<std::string, std::string> assign;
    std::map<std::string, std::string> taken;  // image -> preimage

    bool extend(std::size_t k) {
        if (k == order1.size()) return true;
        const std::string& v = order1[k];
        for (const std::string& w : candidates[v]) {
            if (taken.count(w)) continue;
            bool ok = true;
            for (const auto& [u, x] : assign) {
                if (pair_counts(g1, v, u) != pair_counts(g2, w, x) ||
                    pair_counts(g1, u, v) != pair_counts(g2, x, w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assign[v] = w;
            taken[w] = v;
            if (extend(k + 1)) return true;
            assign.erase(v);
            taken.erase(w);
        }
        return false;
    }
};

}  // namespace

std::optional<Isomorphism> isomorphic(const LabeledReebDigraph& g1,
                                      const LabeledReebDigraph& g2) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;

    Matcher m{g1, g2, {}, {}, {}, {}};
    std::map<ClassKey, std::vector<std::string>> classes2;
    for (const std::string& w : g2.vertices()) classes2[class_key(g2, w)].push_back(w);
    for (const std::string& v : g1.vertices()) {
        auto it = classes2.find(class_key(g1, v));
        if (it == classes2.end()) return std::nullopt;
        m.candidates[v] = it->second;
        m.order1.push_back(v);
    }
    // Most constrained vertices first.
    std::stable_sort(m.order1.begin(), m.order1.end(),
                     [&](const std::string& a, const std::string& b) {
                         return m.candidates[a].size() < m.candidates[b].size();
                     });

    if (!m.extend(0)) return std::nullopt;

    Isomorphism iso;
    iso.vertex_map = m.assign;

    // Edges correspond within (src, dst, label) groups, in index order.
    std::map<std::tuple<std::string, std::string, int>, std::vector<int>> groups2;
    for (int j = 0; j < g2.edge_count(); ++j) {
        const Edge& e = g2.edge(j);
        groups2[{e.src, e.dst, static_cast<int>(e.label)}].push_back(j);
    }
    std::map<std::tuple<std::string, std::string, int>, std::size_t> used;
    iso.edge_map.resize(static_cast<std::size_t>(g1.edge_count()), -1);
    for (int i = 0; i < g1.edge_count(); ++i) {
        const Edge& e = g1.edge(i);
        std::tuple<std::string, std::string, int> key{iso.vertex_map[e.src],
                                                      iso.vertex_map[e.dst],
                                                      static_cast<int>(e.label)};
        auto it = groups2.find(key);
        std::size_t& next = used[key];
        if (it == groups2.end() || next >= it->second.size()) return std::nullopt;
        iso.edge_map[static_cast<std::size_t>(i)] = it->second[next++];
    }
    return iso;
}

bool check_isomorphism(const LabeledReebDigraph& g1, const LabeledReebDigraph& g2,
                       const Isomorphism& iso) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return false;
    if (iso.vertex_map.size() != static_cast<std::size_t>(g1.vertex_count())) return false;
    std::set<std::string> image;
    for (const auto& [v, w] : iso.vertex_map) {
        if (!g1.has_vertex(v) || !g2.has_vertex(w)) return false;
        if (!image.insert(w).second) return false;
        if (g1.effective_sing(v) != g2.effective_sing(w)) return false;
    }
    if (iso.edge_map.size() != static_cast<std::size_t>(g1.edge_count())) return false;
    std::set<int> edge_image;
    for (int i = 0; i < g1.edge_count(); ++i) {
        int j = iso.edge_map[static_cast<std::size_t>(i)];
        if (j < 0 || j >= g2.edge_count()) return false;
        if (!edge_image.insert(j).second) return false;
        const Edge& a = g1.edge(i);
        const Edge& b = g2.edge(j);
        if (iso.vertex_map.at(a.src) != b.src) return false;
        if (iso.vertex_map.at(a.dst) != b.dst) return false;
        if (a.label != b.label) return false;
    }
    return true;
}

namespace {

// Encoding under a vertex numbering: vertex count, sorted edge triples,
// sorted (vertex, annotation) pairs. Reconstructible, so equal encodings
// mean equal relabeled graphs.
std::vector<int> encode(const LabeledReebDigraph& g,
                        const std::map<std::string, int>& num) {
    std::vector<std::tuple<int, int, int>> es;
    for (const Edge& e : g.edges())
        es.emplace_back(num.at(e.src), num.at(e.dst), static_cast<int>(e.label));
    std::sort(es.begin(), es.end());
    std::vector<std::pair<int, int>> ss;
    for (const std::string& v : g.vertices())
        if (auto k = g.effective_sing(v)) ss.emplace_back(num.at(v), static_cast<int>(*k));
    std::sort(ss.begin(), ss.end());

    std::vector<int> out;
    out.push_back(g.vertex_count());
    for (const auto& [a, b, l] : es) {
        out.push_back(a);
        out.push_back(b);
        out.push_back(l);
    }
    out.push_back(-1);
    for (const auto& [v, k] : ss) {
        out.push_back(v);
        out.push_back(k);
    }
    return out;
}

struct CanonicalSearch {
    const LabeledReebDigraph& g;
    std::vector<std::vector<std::string>> blocks;  // vertices per class, class keys sorted
    std::map<std::string, int> num;
    std::optional<std::vector<int>> best;
    std::map<std::string, int> best_num;

    void run(std::size_t block, int next) {
        if (block == blocks.size()) {
            std::vector<int> enc = encode(g, num);
            if (!best || enc < *best) {
                best = enc;
                best_num = num;
            }
            return;
        }
        std::vector<std::string>& vs = blocks[block];
        std::sort(vs.begin(), vs.end());
        do {
            for (std::size_t i = 0; i < vs.size(); ++i) num[vs[i]] = next + static_cast<int>(i);
            run(block + 1, next + static_cast<int>(vs.size()));
        } while (std::next_permutation(vs.begin(), vs.end()));
    }
};

std::map<std::string, int> canonical_numbering(const LabeledReebDigraph& g) {
    std::map<ClassKey, std::vector<std::string>> classes;
    for (const std::string& v : g.vertices()) classes[class_key(g, v)].push_back(v);
    CanonicalSearch search{g, {}, {}, std::nullopt, {}};
    for (auto& [key, vs] : classes) search.blocks.push_back(vs);
    search.run(0, 0);
    return search.best_num;
}

}  // namespace

std::string canonical_key(const LabeledReebDigraph& g) {
    std::vector<int> enc = encode(g, canonical_numbering(g));
    std::string out;
    for (int x : enc) {
        out += std::to_string(x);
        out += '.';
    }
    return out;
}

LabeledReebDigraph canonical_graph(const LabeledReebDigraph& g) {
    std::map<std::string, int> num = canonical_numbering(g);

    // Rebuilt from the encoding (edges sorted, annotations made effective),
    // so equal keys give equal graphs byte for byte.
    std::vector<std::tuple<int, int, int>> es;
    for (const Edge& e : g.edges())
        es.emplace_back(num.at(e.src), num.at(e.dst), static_cast<int>(e.label));
    std::sort(es.begin(), es.end());
    LabeledReebDigraph rebuilt;
    for (int i = 0; i < g.vertex_count(); ++i) rebuilt.add_vertex("v" + std::to_string(i));
    for (const auto& [a, b, l] : es)
        rebuilt.add_edge("v" + std::to_string(a), "v" + std::to_string(b),
                         static_cast<FiberLabel>(l));
    for (const auto& [v, i] : num)
        if (auto k = g.effective_sing(v)) rebuilt.set_sing("v" + std::to_string(i), *k);
    return rebuilt;
}

LabeledReebDigraph renamed(const LabeledReebDigraph& g,
                           const std::map<std::string, std::string>& names) {
    LabeledReebDigraph out;
    for (const std::string& v : g.vertices()) out.add_vertex(names.at(v));
    for (const Edge& e : g.edges()) out.add_edge(names.at(e.src), names.at(e.dst), e.label);
    for (const auto& [v, k] : g.sing_map()) out.set_sing(names.at(v), k);
    for (const auto& [v, h] : g.height_map()) out.set_height(names.at(v), h);
    return out;
}

}  // namespace reeb3
