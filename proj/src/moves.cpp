#include "reeb3/moves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace reeb3 {

const char* to_string(MoveDirection d) {
    return d == MoveDirection::Forward ? "forward" : "reverse";
}

namespace {

VertexSignature sig(int in_s, int in_t, int out_s, int out_t) {
    VertexSignature s;
    s.in_sphere = in_s;
    s.in_torus = in_t;
    s.out_sphere = out_s;
    s.out_torus = out_t;
    s.sing = SingularityKind::MorsePoint;
    return s;
}

constexpr FiberLabel S2 = FiberLabel::Sphere2;
constexpr FiberLabel T2 = FiberLabel::Torus2;
constexpr bool IN = true;
constexpr bool OUT = false;

std::vector<Move> make_builtins() {
    std::vector<Move> ms;
    const std::string preimage = "solid torus minus two balls";

    // Torus edge rising into a transition, sphere sliding in from the side.
    // Left: transition x then sphere-merge y. Right: transitions p under q.
    {
        Move m;
        m.name = "slide";
        m.left.vertices = {sig(0, 1, 1, 0), sig(2, 0, 1, 0)};   // x, y
        m.left.edges = {{0, 1, S2}};
        m.left.boundary = {{0, IN, T2}, {1, IN, S2}, {1, OUT, S2}};
        m.right.vertices = {sig(1, 1, 0, 1), sig(0, 1, 1, 0)};  // p, q
        m.right.edges = {{0, 1, T2}};
        m.right.boundary = {{0, IN, T2}, {0, IN, S2}, {1, OUT, S2}};
        m.preimage = preimage;
        ms.push_back(std::move(m));
    }

    // The same region upside down: torus edge falling out of a transition,
    // sphere sliding out. Left: sphere-split y' then transition x'.
    {
        Move m;
        m.name = "slide_flip";
        m.left.vertices = {sig(1, 0, 2, 0), sig(1, 0, 0, 1)};   // y', x'
        m.left.edges = {{0, 1, S2}};
        m.left.boundary = {{0, IN, S2}, {0, OUT, S2}, {1, OUT, T2}};
        m.right.vertices = {sig(1, 0, 0, 1), sig(0, 1, 1, 1)};  // q', p'
        m.right.edges = {{0, 1, T2}};
        m.right.boundary = {{0, IN, S2}, {1, OUT, S2}, {1, OUT, T2}};
        m.preimage = preimage;
        ms.push_back(std::move(m));
    }

    // Sliding sphere arriving from above the torus edge's lower end. Left:
    // sphere-merge y over transition a. Right: transition p over a.
    {
        Move m;
        m.name = "slide_drop";
        m.left.vertices = {sig(2, 0, 1, 0), sig(1, 0, 0, 1)};   // y, a
        m.left.edges = {{0, 1, S2}};
        m.left.boundary = {{0, IN, S2}, {0, IN, S2}, {1, OUT, T2}};
        m.right.vertices = {sig(1, 0, 0, 1), sig(1, 1, 0, 1)};  // a, p
        m.right.edges = {{0, 1, T2}};
        m.right.boundary = {{0, IN, S2}, {1, IN, S2}, {1, OUT, T2}};
        m.preimage = preimage;
        ms.push_back(std::move(m));
    }

    // And its reversal: sphere leaving below the torus edge's upper end.
    {
        Move m;
        m.name = "slide_drop_flip";
        m.left.vertices = {sig(0, 1, 1, 0), sig(1, 0, 2, 0)};   // a~, y~
        m.left.edges = {{0, 1, S2}};
        m.left.boundary = {{0, IN, T2}, {1, OUT, S2}, {1, OUT, S2}};
        m.right.vertices = {sig(0, 1, 1, 1), sig(0, 1, 1, 0)};  // p~, a~
        m.right.edges = {{0, 1, T2}};
        m.right.boundary = {{0, IN, T2}, {0, OUT, S2}, {1, OUT, S2}};
        m.preimage = preimage;
        ms.push_back(std::move(m));
    }
    return ms;
}

const Pattern& side(const Move& m, MoveDirection d, bool source) {
    bool left = (d == MoveDirection::Forward) == source;
    return left ? m.left : m.right;
}

bool signature_matches(const LabeledReebDigraph& g, const std::string& v,
                       const VertexSignature& want) {
    VertexSignature have = g.signature(v);
    return have.same_shape(want) && g.effective_sing(v) == want.sing;
}

int pattern_pair_count(const Pattern& p, int a, int b, FiberLabel l) {
    int n = 0;
    for (const PatternEdge& e : p.edges)
        if (e.src == a && e.dst == b && e.label == l) ++n;
    return n;
}

// Interior edges must account exactly for every host edge between matched
// vertices; anything left over could not be a boundary edge.
bool interior_exact(const LabeledReebDigraph& g, const Pattern& p,
                    const std::vector<std::string>& image) {
    int k = static_cast<int>(p.vertices.size());
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (FiberLabel l : {S2, T2}) {
                int host = 0;
                for (const Edge& e : g.edges())
                    if (e.src == image[static_cast<std::size_t>(a)] &&
                        e.dst == image[static_cast<std::size_t>(b)] && e.label == l)
                        ++host;
                if (host != pattern_pair_count(p, a, b, l)) return false;
            }
    return true;
}

// Host edges available to fill stubs at pattern vertex a: right direction and
// label, far endpoint outside the image. Sorted by index.
std::vector<int> stub_candidates(const LabeledReebDigraph& g,
                                 const std::vector<std::string>& image, int a,
                                 bool incoming, FiberLabel l) {
    const std::string& v = image[static_cast<std::size_t>(a)];
    std::set<std::string> inside(image.begin(), image.end());
    std::vector<int> out;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (e.label != l) continue;
        if (incoming) {
            if (e.dst == v && !inside.count(e.src)) out.push_back(i);
        } else {
            if (e.src == v && !inside.count(e.dst)) out.push_back(i);
        }
    }
    return out;
}

// Stub groups share (vertex, direction, label); within a group any bijection
// between slots and candidate edges is a distinct site.
void enumerate_boundaries(const LabeledReebDigraph& g, const Pattern& p,
                          const std::vector<std::string>& image,
                          std::vector<MoveSite>& out) {
    using GroupKey = std::tuple<int, bool, int>;
    std::map<GroupKey, std::vector<int>> slots;  // key -> slot indices, in order
    for (int s = 0; s < static_cast<int>(p.boundary.size()); ++s) {
        const PatternStub& st = p.boundary[static_cast<std::size_t>(s)];
        slots[{st.vertex, st.incoming, static_cast<int>(st.label)}].push_back(s);
    }

    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;  // slots, candidates
    for (const auto& [key, slot_ids] : slots) {
        auto [a, incoming, l] = key;
        std::vector<int> cand =
            stub_candidates(g, image, a, incoming, static_cast<FiberLabel>(l));
        if (cand.size() != slot_ids.size()) return;  // counts fixed by the signature
        groups.emplace_back(slot_ids, cand);
    }

    std::vector<int> assignment(p.boundary.size(), -1);
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
        if (gi == groups.size()) {
            out.push_back(MoveSite{image, assignment});
            return;
        }
        auto& [slot_ids, cand] = groups[gi];
        std::vector<int> perm = cand;  // sorted already
        do {
            for (std::size_t i = 0; i < slot_ids.size(); ++i)
                assignment[static_cast<std::size_t>(slot_ids[i])] = perm[i];
            rec(gi + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0);
}

void embed(const LabeledReebDigraph& g, const Pattern& p,
           std::vector<std::string>& image, std::vector<MoveSite>& out) {
    std::size_t k = image.size();
    if (k == p.vertices.size()) {
        if (interior_exact(g, p, image)) enumerate_boundaries(g, p, image, out);
        return;
    }
    for (const std::string& v : g.vertices()) {
        if (std::find(image.begin(), image.end(), v) != image.end()) continue;
        if (!signature_matches(g, v, p.vertices[k])) continue;
        image.push_back(v);
        embed(g, p, image, out);
        image.pop_back();
    }
}

}  // namespace

const std::vector<Move>& builtin_moves() {
    static const std::vector<Move> ms = make_builtins();
    return ms;
}

const Move& move_by_name(const std::string& name) {
    for (const Move& m : builtin_moves())
        if (m.name == name) return m;
    throw Error("unknown move: " + name);
}

std::vector<MoveSite> find_sites(const LabeledReebDigraph& g, const Move& m,
                                 MoveDirection d) {
    const Pattern& p = side(m, d, /*source=*/true);
    std::vector<MoveSite> out;
    std::vector<std::string> image;
    embed(g, p, image, out);
    std::sort(out.begin(), out.end(), [](const MoveSite& a, const MoveSite& b) {
        if (a.vertex_image != b.vertex_image) return a.vertex_image < b.vertex_image;
        return a.boundary_edges < b.boundary_edges;
    });
    return out;
}

namespace {

// A site is only trusted after re-checking; traces replay on rebuilt graphs.
void verify_site(const LabeledReebDigraph& g, const Move& m, MoveDirection d,
                 const Pattern& p, const MoveSite& site) {
    auto fail = [&](const std::string& why) {
        throw NoMatchError("move " + m.name + " (" + to_string(d) + "): " + why);
    };
    if (site.vertex_image.size() != p.vertices.size()) fail("wrong vertex count");
    std::set<std::string> inside(site.vertex_image.begin(), site.vertex_image.end());
    if (inside.size() != site.vertex_image.size()) fail("vertex image not injective");
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const std::string& v = site.vertex_image[i];
        if (!g.has_vertex(v)) fail("no vertex " + v);
        if (!signature_matches(g, v, p.vertices[i]))
            fail(v + " has signature " + g.signature(v).to_string() + ", pattern wants " +
                 p.vertices[i].to_string());
    }
    if (!interior_exact(g, p, site.vertex_image)) fail("interior edges do not line up");
    if (site.boundary_edges.size() != p.boundary.size()) fail("wrong boundary count");
    std::set<int> seen;
    for (std::size_t s = 0; s < p.boundary.size(); ++s) {
        int ei = site.boundary_edges[s];
        if (ei < 0 || ei >= g.edge_count()) fail("boundary edge out of range");
        if (!seen.insert(ei).second) fail("boundary edge repeated");
        const PatternStub& st = p.boundary[s];
        const Edge& e = g.edge(ei);
        const std::string& at = site.vertex_image[static_cast<std::size_t>(st.vertex)];
        if (e.label != st.label) fail("boundary edge label mismatch");
        if (st.incoming) {
            if (e.dst != at || inside.count(e.src)) fail("boundary edge does not enter the site");
        } else {
            if (e.src != at || inside.count(e.dst)) fail("boundary edge does not leave the site");
        }
    }
}

}  // namespace

LabeledReebDigraph apply_move(const LabeledReebDigraph& g, const Move& m,
                              MoveDirection d, const MoveSite& site) {
    const Pattern& from = side(m, d, /*source=*/true);
    const Pattern& to = side(m, d, /*source=*/false);
    verify_site(g, m, d, from, site);

    std::set<std::string> removed(site.vertex_image.begin(), site.vertex_image.end());
    LabeledReebDigraph out;
    for (const std::string& v : g.vertices())
        if (!removed.count(v)) out.add_vertex(v);

    std::vector<std::string> names;
    for (std::size_t i = 0; i < to.vertices.size(); ++i) {
        std::string nv = out.fresh_vertex(site.vertex_image[0], "_m" + std::to_string(i));
        out.add_vertex(nv);
        if (to.vertices[i].sing) out.set_sing(nv, *to.vertices[i].sing);
        names.push_back(nv);
    }

    std::map<int, std::size_t> stub_of;  // host edge index -> slot
    for (std::size_t s = 0; s < site.boundary_edges.size(); ++s)
        stub_of[site.boundary_edges[s]] = s;

    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        auto it = stub_of.find(i);
        if (it != stub_of.end()) {
            const PatternStub& st = to.boundary[it->second];
            const std::string& nv = names[static_cast<std::size_t>(st.vertex)];
            if (st.incoming)
                out.add_edge(e.src, nv, e.label);
            else
                out.add_edge(nv, e.dst, e.label);
        } else if (!removed.count(e.src) && !removed.count(e.dst)) {
            out.add_edge(e.src, e.dst, e.label);
        }
    }
    for (const PatternEdge& e : to.edges)
        out.add_edge(names[static_cast<std::size_t>(e.src)],
                     names[static_cast<std::size_t>(e.dst)], e.label);

    for (const auto& [v, k] : g.sing_map())
        if (!removed.count(v)) out.set_sing(v, k);
    for (const auto& [v, h] : g.height_map())
        if (!removed.count(v)) out.set_height(v, h);
    return out;
}

}  // namespace reeb3
