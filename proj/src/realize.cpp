#include "reeb3/realize.hpp"

#include <algorithm>
#include <set>

#include "reeb3/catalog.hpp"
#include "reeb3/graph_algos.hpp"
#include "reeb3/normalize.hpp"
#include "reeb3/validate.hpp"

namespace reeb3 {

bool HypothesisReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const HypothesisCheck& c) { return c.passed; });
}

std::string HypothesisReport::to_string() const {
    std::string out;
    for (const HypothesisCheck& c : checks) {
        out += c.passed ? "pass " : "FAIL ";
        out += c.name;
        if (!c.detail.empty()) {
            out += ": ";
            out += c.detail;
        }
        out += '\n';
    }
    return out;
}

HypothesisViolationError::HypothesisViolationError(HypothesisReport r)
    : Error([&r] {
          std::string what = "realization hypotheses violated:";
          for (const HypothesisCheck& c : r.checks)
              if (!c.passed) {
                  what += ' ';
                  what += c.name;
                  what += ';';
              }
          return what;
      }()),
      report(std::move(r)) {}

namespace {

std::set<std::string> cycle_vertices(const LabeledReebDigraph& g,
                                     const std::vector<int>& cycle) {
    std::set<std::string> vs;
    for (int i : cycle) {
        vs.insert(g.edge(i).src);
        vs.insert(g.edge(i).dst);
    }
    return vs;
}

// Vertices where the orientation turns around along the cycle: both cycle
// edges at the vertex point in, or both point out.
std::set<std::string> turning_points(const LabeledReebDigraph& g,
                                     const std::vector<int>& cycle) {
    std::map<std::string, std::pair<int, int>> in_out;
    for (int i : cycle) {
        const Edge& e = g.edge(i);
        in_out[e.src].second++;
        in_out[e.dst].first++;
    }
    std::set<std::string> out;
    for (const auto& [v, io] : in_out)
        if (io.first == 2 || io.second == 2) out.insert(v);
    return out;
}

bool indices_ok(const LabeledReebDigraph& g, const std::vector<int>& cycle) {
    std::set<int> seen;
    for (int i : cycle)
        if (i < 0 || i >= g.edge_count() || !seen.insert(i).second) return false;
    return !cycle.empty();
}

// A set of edges forms a simple cycle iff it is connected, touches as many
// vertices as edges, and meets every one of them in exactly two edge-ends.
bool is_simple_cycle(const LabeledReebDigraph& g, const std::vector<int>& cycle) {
    if (!indices_ok(g, cycle)) return false;
    std::map<std::string, int> ends;
    for (int i : cycle) {
        const Edge& e = g.edge(i);
        if (e.src == e.dst) return false;
        ends[e.src]++;
        ends[e.dst]++;
    }
    if (ends.size() != cycle.size()) return false;
    for (const auto& [v, d] : ends)
        if (d != 2) return false;

    LabeledReebDigraph sub;
    for (const auto& [v, d] : ends) sub.add_vertex(v);
    for (int i : cycle) sub.add_edge(g.edge(i).src, g.edge(i).dst, g.edge(i).label);
    return is_connected(sub);
}

}  // namespace

HypothesisReport check_theorem3_hypotheses(const Theorem3Instance& inst) {
    const LabeledReebDigraph& k = inst.k;
    HypothesisReport rep;
    auto add = [&rep](const std::string& name, bool passed, const std::string& detail) {
        rep.checks.push_back(HypothesisCheck{name, passed, detail});
    };

    {
        bool ok = true;
        std::string detail;
        for (std::size_t j = 0; j < inst.cycles.size(); ++j)
            if (!is_simple_cycle(k, inst.cycles[j])) {
                ok = false;
                detail = "cycle " + std::to_string(j) + " is not a simple cycle of the graph";
                break;
            }
        add("cycles-are-simple-cycles", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t a = 0; ok && a < inst.cycles.size(); ++a) {
            if (!indices_ok(k, inst.cycles[a])) continue;  // first check reports it
            std::set<std::string> va = cycle_vertices(k, inst.cycles[a]);
            for (std::size_t b = a + 1; ok && b < inst.cycles.size(); ++b) {
                if (!indices_ok(k, inst.cycles[b])) continue;
                for (const std::string& v : cycle_vertices(k, inst.cycles[b]))
                    if (va.count(v)) {
                        ok = false;
                        detail = "cycles " + std::to_string(a) + " and " + std::to_string(b) +
                                 " share vertex " + v;
                        break;
                    }
            }
        }
        add("cycles-pairwise-vertex-disjoint", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t j = 0; ok && j < inst.cycles.size(); ++j)
            for (int i : inst.cycles[j])
                if (i >= 0 && i < k.edge_count() && k.edge(i).label != FiberLabel::Torus2) {
                    ok = false;
                    detail = "cycle " + std::to_string(j) + " uses non-torus edge " +
                             std::to_string(i);
                    break;
                }
        add("cycle-edges-torus-labeled", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t j = 0; ok && j < inst.cycles.size(); ++j) {
            if (!indices_ok(k, inst.cycles[j])) continue;  // first check reports it
            for (const std::string& v : turning_points(k, inst.cycles[j]))
                if (!k.is_extremum(v)) {
                    ok = false;
                    detail = "the height turns around at " + v + " on cycle " +
                             std::to_string(j) + " but the graph has no extremum there";
                    break;
                }
        }
        add("turning-points-are-extrema", ok, detail);
    }
    {
        // A graph homeomorphic to the circle: connected, every vertex of
        // degree two, one independent cycle.
        bool is_circle = k.vertex_count() > 0 && is_connected(k) && betti1(k) == 1;
        if (is_circle)
            for (const std::string& v : k.vertices())
                if (k.degree(v) != 2) {
                    is_circle = false;
                    break;
                }
        if (!is_circle) {
            add("circle-needs-interior-vertex", true, "graph is not a circle");
        } else {
            bool has_interior = false;
            for (const std::string& v : k.vertices())
                if (!k.is_extremum(v)) {
                    has_interior = true;
                    break;
                }
            add("circle-needs-interior-vertex", has_interior,
                has_interior ? ""
                             : "the graph is a circle and every vertex is an extremum; "
                               "the construction needs a non-extremal vertex to cut at");
        }
    }
    return rep;
}

LabeledReebDigraph construct_k_prime(const Theorem3Instance& inst) {
    std::set<int> drop;
    for (const std::vector<int>& c : inst.cycles) drop.insert(c.begin(), c.end());
    LabeledReebDigraph out;
    for (const std::string& v : inst.k.vertices()) out.add_vertex(v);
    for (int i = 0; i < inst.k.edge_count(); ++i)
        if (!drop.count(i)) {
            const Edge& e = inst.k.edge(i);
            out.add_edge(e.src, e.dst, e.label);
        }
    for (const auto& [v, s] : inst.k.sing_map()) out.set_sing(v, s);
    for (const auto& [v, h] : inst.k.height_map()) out.set_height(v, h);
    return out;
}

LabeledReebDigraph cycle_subgraph(const Theorem3Instance& inst, std::size_t j) {
    const std::vector<int>& cycle = inst.cycles.at(j);
    LabeledReebDigraph out;
    for (const std::string& v : cycle_vertices(inst.k, cycle)) out.add_vertex(v);
    std::vector<int> order(cycle.begin(), cycle.end());
    std::sort(order.begin(), order.end());
    for (int i : order) {
        const Edge& e = inst.k.edge(i);
        out.add_edge(e.src, e.dst, e.label);
    }
    for (const std::string& v : out.vertices()) {
        if (auto s = inst.k.sing(v)) out.set_sing(v, *s);
        if (auto h = inst.k.height(v)) out.set_height(v, *h);
    }
    return out;
}

AugmentedGraph augment_with_pendants(const LabeledReebDigraph& h,
                                     const std::vector<std::string>& targets) {
    AugmentedGraph out{h, {}};
    for (const std::string& v : targets) {
        if (!out.graph.has_vertex(v)) throw UnknownVertexError(v);
        if (out.pendants.count(v)) continue;

        // Height bounds come from everything incident to the target, so the
        // new edges stay monotone without rescaling anything.
        std::optional<Rational> lo, hi;
        auto see = [&](const std::string& u) {
            if (auto x = out.graph.height(u)) {
                if (!lo || *x < *lo) lo = *x;
                if (!hi || *x > *hi) hi = *x;
            }
        };
        see(v);
        for (int i : out.graph.incident_edges(v)) {
            see(out.graph.edge(i).src);
            see(out.graph.edge(i).dst);
        }

        PendantPair p;
        p.low = out.graph.fresh_vertex(v, "_lo");
        out.graph.add_vertex(p.low);
        p.low_edge = out.graph.add_edge(p.low, v, FiberLabel::Sphere2);
        p.high = out.graph.fresh_vertex(v, "_hi");
        out.graph.add_vertex(p.high);
        p.high_edge = out.graph.add_edge(v, p.high, FiberLabel::Sphere2);
        out.graph.set_sing(p.low, SingularityKind::MorsePoint);
        out.graph.set_sing(p.high, SingularityKind::MorsePoint);
        out.graph.set_sing(v, SingularityKind::MorsePoint);  // no longer an extremum
        if (lo) out.graph.set_height(p.low, *lo - Rational(1));
        if (hi) out.graph.set_height(p.high, *hi + Rational(1));
        out.pendants[v] = p;
    }
    return out;
}

GluedRealization glue_realization(const AugmentedGraph& k0,
                                  const std::vector<AugmentedGraph>& c0,
                                  const std::vector<std::string>& shared) {
    std::map<std::string, std::size_t> owner;
    for (const std::string& v : shared) {
        std::size_t n = 0, at = 0;
        for (std::size_t j = 0; j < c0.size(); ++j)
            if (c0[j].graph.has_vertex(v)) {
                ++n;
                at = j;
            }
        if (n != 1)
            throw AmbiguousSharedVertexError(v + " occurs in " + std::to_string(n) +
                                             " cycle pieces, wanted exactly 1");
        if (!k0.graph.has_vertex(v))
            throw MissingPendantError(v + " is not a vertex of the residue piece");
        if (!k0.pendants.count(v))
            throw MissingPendantError("no pendant record for " + v + " in the residue piece");
        if (!c0[at].pendants.count(v))
            throw MissingPendantError("no pendant record for " + v + " in cycle piece " +
                                      std::to_string(at));
        owner[v] = at;
    }

    GluedRealization out{k0.graph, k0.pendants};
    std::set<std::string> shared_set(shared.begin(), shared.end());
    for (std::size_t j = 0; j < c0.size(); ++j) {
        const AugmentedGraph& piece = c0[j];
        std::map<std::string, std::string> into;  // piece vertex -> glued vertex
        std::set<int> pendant_edges;
        for (const auto& [v, p] : piece.pendants) {
            if (!shared_set.count(v) || owner.at(v) != j)
                throw AmbiguousSharedVertexError("cycle piece " + std::to_string(j) +
                                                 " carries pendants for " + v +
                                                 " which is not shared with it");
            into[v] = v;
            into[p.low] = k0.pendants.at(v).low;
            into[p.high] = k0.pendants.at(v).high;
            pendant_edges.insert(p.low_edge);
            pendant_edges.insert(p.high_edge);
        }
        for (const std::string& v : piece.graph.vertices()) {
            if (into.count(v)) continue;
            std::string name =
                out.graph.has_vertex(v) ? out.graph.fresh_vertex(v, "_c" + std::to_string(j)) : v;
            out.graph.add_vertex(name);
            if (auto s = piece.graph.sing(v)) out.graph.set_sing(name, *s);
            if (auto h = piece.graph.height(v)) out.graph.set_height(name, *h);
            into[v] = name;
        }
        for (int i = 0; i < piece.graph.edge_count(); ++i) {
            if (pendant_edges.count(i)) continue;
            const Edge& e = piece.graph.edge(i);
            out.graph.add_edge(into.at(e.src), into.at(e.dst), e.label);
        }
    }
    return out;
}

std::pair<LabeledReebDigraph, Isomorphism> cancel_pendants(const GluedRealization& glued,
                                                           const Theorem3Instance& inst) {
    std::set<std::string> drop;
    std::set<int> drop_edges;
    for (const auto& [v, p] : glued.pendants) {
        if (!glued.graph.has_vertex(p.low) || !glued.graph.has_vertex(p.high))
            throw MissingPendantError("pendant vertices for " + v + " are gone");
        drop.insert(p.low);
        drop.insert(p.high);
        drop_edges.insert(p.low_edge);
        drop_edges.insert(p.high_edge);
    }

    LabeledReebDigraph f;
    for (const std::string& v : glued.graph.vertices())
        if (!drop.count(v)) f.add_vertex(v);
    for (int i = 0; i < glued.graph.edge_count(); ++i) {
        const Edge& e = glued.graph.edge(i);
        if (drop_edges.count(i)) continue;
        if (drop.count(e.src) || drop.count(e.dst))
            throw MissingPendantError("pendant vertex still has a non-pendant edge " +
                                      e.src + "->" + e.dst);
        f.add_edge(e.src, e.dst, e.label);
    }
    for (const auto& [v, h] : glued.graph.height_map())
        if (!drop.count(v)) f.set_height(v, h);

    std::set<std::string> turning;
    for (const std::vector<int>& c : inst.cycles)
        for (const std::string& v : turning_points(inst.k, c)) turning.insert(v);
    for (const std::string& v : f.vertices()) {
        if (turning.count(v)) {
            f.set_sing(v, inst.k.degree(v) == 2 ? SingularityKind::TorusBott
                                                : SingularityKind::Circle);
        } else if (f.is_extremum(v)) {
            if (auto s = inst.k.sing(v)) f.set_sing(v, *s);
        } else if (f.degree(v) > 0) {
            f.set_sing(v, SingularityKind::MorsePoint);
        }
    }

    auto iso = isomorphic(f, inst.k);
    if (!iso)
        throw Error("pendant cancellation did not restore the input graph");
    return {std::move(f), std::move(*iso)};
}

RealizationCertificate realize(const Theorem3Instance& inst) {
    ValidationReport val = validate_problem1(inst.k);
    if (!val.ok())
        throw PreconditionError("realization needs a realizable digraph", std::move(val));

    RealizationCertificate cert;
    cert.hypotheses = check_theorem3_hypotheses(inst);
    if (!cert.hypotheses.all_passed()) throw HypothesisViolationError(cert.hypotheses);

    cert.k_prime = construct_k_prime(inst);

    std::set<std::string> shared_set;
    for (const std::vector<int>& c : inst.cycles) {
        std::set<std::string> vs = cycle_vertices(inst.k, c);
        shared_set.insert(vs.begin(), vs.end());
    }
    std::vector<std::string> shared(shared_set.begin(), shared_set.end());

    cert.k0_prime = augment_with_pendants(cert.k_prime, shared);
    for (std::size_t j = 0; j < inst.cycles.size(); ++j) {
        std::set<std::string> vs = cycle_vertices(inst.k, inst.cycles[j]);
        cert.c0.push_back(augment_with_pendants(
            cycle_subgraph(inst, j), std::vector<std::string>(vs.begin(), vs.end())));
    }

    cert.glued = glue_realization(cert.k0_prime, cert.c0, shared);
    ValidationReport glued_val = validate_problem1(cert.glued.graph);
    if (!glued_val.ok())
        throw Error("glued graph fails validation:\n" + glued_val.to_string());

    auto [final_graph, iso] = cancel_pendants(cert.glued, inst);
    cert.final_graph = std::move(final_graph);
    cert.iso_witness = std::move(iso);

    // The chosen cycles must account for every torus bundle the finished
    // graph encodes; otherwise the stated summand expression would be wrong.
    // Only checkable when the catalog applies.
    if (validate_catalog(cert.final_graph).empty()) {
        TorusDecomposition dec = decompose_torus_subgraph(cert.final_graph);
        cert.census = dec.clean() ? classify(cert.final_graph)
                                  : classify(normalize(cert.final_graph).graph);
        if (cert.census.torus_bundle_count != static_cast<int>(inst.cycles.size()))
            throw CycleSelectionError(
                "chosen cycles do not exhaust the torus cycles: the finished graph encodes " +
                std::to_string(cert.census.torus_bundle_count) +
                " torus bundles, instance chose " + std::to_string(inst.cycles.size()));
    }

    for (std::size_t j = 0; j < inst.cycles.size(); ++j) {
        cert.manifold_expression += "TorusBundle";
        cert.manifold_expression += " # ";
    }
    cert.manifold_expression += "Theorem1Class";
    return cert;
}

}  // namespace reeb3
