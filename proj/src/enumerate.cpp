#include "reeb3/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "reeb3/catalog.hpp"
#include "reeb3/graph_algos.hpp"
#include "reeb3/independent_check.hpp"
#include "reeb3/io.hpp"
#include "reeb3/isomorphism.hpp"
#include "reeb3/moves.hpp"
#include "reeb3/normalize.hpp"
#include "reeb3/splits.hpp"
#include "reeb3/validate.hpp"

namespace reeb3 {

namespace {

// Phase 1: undirected connected multigraphs on vertices 0..n-1, up to
// isomorphism. Loops are left out from the start: the only orientation of a
// loop is a directed cycle, so no expansion of one ever validates.
struct UGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized a < b, list sorted
};

std::vector<int> udegrees(const UGraph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (auto [a, b] : g.edges) {
        deg[static_cast<std::size_t>(a)]++;
        deg[static_cast<std::size_t>(b)]++;
    }
    return deg;
}

// Minimal edge list over relabelings that respect the degree partition;
// blocks of equal degree are the only candidates an isomorphism can mix.
UGraph ucanon(const UGraph& g) {
    std::vector<int> deg = udegrees(g);
    std::map<int, std::vector<int>> blocks;
    for (int v = 0; v < g.n; ++v) blocks[deg[static_cast<std::size_t>(v)]].push_back(v);

    std::vector<std::vector<int>> block_list;
    for (auto& [d, vs] : blocks) block_list.push_back(vs);

    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::optional<std::vector<std::pair<int, int>>> best;

    std::function<void(std::size_t, int)> rec = [&](std::size_t bi, int next) {
        if (bi == block_list.size()) {
            std::vector<std::pair<int, int>> es;
            es.reserve(g.edges.size());
            for (auto [a, b] : g.edges) {
                int x = perm[static_cast<std::size_t>(a)];
                int y = perm[static_cast<std::size_t>(b)];
                es.emplace_back(std::min(x, y), std::max(x, y));
            }
            std::sort(es.begin(), es.end());
            if (!best || es < *best) best = std::move(es);
            return;
        }
        std::vector<int> vs = block_list[bi];
        std::sort(vs.begin(), vs.end());
        do {
            for (std::size_t i = 0; i < vs.size(); ++i)
                perm[static_cast<std::size_t>(vs[i])] = next + static_cast<int>(i);
            rec(bi + 1, next + static_cast<int>(vs.size()));
        } while (std::next_permutation(vs.begin(), vs.end()));
    };
    rec(0, 0);
    return UGraph{g.n, *best};
}

std::string ukey(const UGraph& g) {
    std::string out = std::to_string(g.n) + ":";
    for (auto [a, b] : g.edges)
        out += std::to_string(a) + "," + std::to_string(b) + ";";
    return out;
}

// Every target is reachable: removing a non-bridge edge, a leaf vertex with
// its edge, or a whole single-edge component lands in the previous level.
std::vector<UGraph> grow_ugraphs(int max_edges, bool require_connected) {
    std::vector<UGraph> all;
    std::map<std::string, UGraph> level;
    UGraph seed{2, {{0, 1}}};
    level[ukey(seed)] = seed;

    for (int e = 1; e <= max_edges; ++e) {
        for (const auto& [k, g] : level) all.push_back(g);
        if (e == max_edges) break;

        std::map<std::string, UGraph> next;
        auto offer = [&next](UGraph g) {
            UGraph c = ucanon(g);
            next.emplace(ukey(c), std::move(c));
        };
        for (const auto& [k, g] : level) {
            for (int i = 0; i < g.n; ++i)
                for (int j = i + 1; j < g.n; ++j) {
                    UGraph h = g;
                    h.edges.emplace_back(i, j);
                    offer(std::move(h));
                }
            for (int i = 0; i < g.n; ++i) {
                UGraph h = g;
                h.edges.emplace_back(i, g.n);
                h.n++;
                offer(std::move(h));
            }
            if (!require_connected) {
                UGraph h = g;
                h.edges.emplace_back(g.n, g.n + 1);
                h.n += 2;
                offer(std::move(h));
            }
        }
        level = std::move(next);
    }
    return all;
}

// Phase 2: all acyclic orientations x labelings x admissible annotations of
// one skeleton, already in canonical form, keyed for the global merge.
using Keyed = std::pair<std::tuple<int, int, std::string>, LabeledReebDigraph>;

bool orientation_acyclic(const UGraph& u, unsigned omask) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(u.n));
    std::vector<int> indeg(static_cast<std::size_t>(u.n), 0);
    for (std::size_t k = 0; k < u.edges.size(); ++k) {
        auto [a, b] = u.edges[k];
        if (omask & (1u << k)) std::swap(a, b);
        out[static_cast<std::size_t>(a)].push_back(b);
        indeg[static_cast<std::size_t>(b)]++;
    }
    std::vector<int> stack;
    for (int v = 0; v < u.n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) stack.push_back(w);
    }
    return seen == u.n;
}

void expand(const UGraph& u, bool require_catalog, std::vector<Keyed>& out) {
    const std::size_t ne = u.edges.size();
    for (unsigned omask = 0; omask < (1u << ne); ++omask) {
        if (!orientation_acyclic(u, omask)) continue;
        for (unsigned lmask = 0; lmask < (1u << ne); ++lmask) {
            std::vector<VertexSignature> sig(static_cast<std::size_t>(u.n));
            for (std::size_t k = 0; k < ne; ++k) {
                auto [a, b] = u.edges[k];
                if (omask & (1u << k)) std::swap(a, b);
                bool torus = (lmask & (1u << k)) != 0;
                auto& sa = sig[static_cast<std::size_t>(a)];
                auto& sb = sig[static_cast<std::size_t>(b)];
                (torus ? sa.out_torus : sa.out_sphere)++;
                (torus ? sb.in_torus : sb.in_sphere)++;
            }

            std::vector<int> extrema;
            std::vector<std::vector<SingularityKind>> options;
            bool feasible = true;
            for (int v = 0; v < u.n && feasible; ++v) {
                const VertexSignature& s = sig[static_cast<std::size_t>(v)];
                if (s.is_extremum()) {
                    if (s.degree() > 2 || s.labels_mixed()) {
                        feasible = false;
                        break;
                    }
                    FiberLabel l = (s.in_torus + s.out_torus) > 0 ? FiberLabel::Torus2
                                                                  : FiberLabel::Sphere2;
                    std::vector<SingularityKind> allowed =
                        allowed_extremum_annotations(l, s.degree());
                    if (allowed.empty()) {
                        feasible = false;
                        break;
                    }
                    extrema.push_back(v);
                    options.push_back(std::move(allowed));
                } else if (require_catalog && !catalog_contains(s)) {
                    feasible = false;
                }
            }
            if (!feasible) continue;

            // Odometer over the annotation choices.
            std::vector<std::size_t> pick(options.size(), 0);
            for (;;) {
                LabeledReebDigraph g;
                for (int v = 0; v < u.n; ++v) g.add_vertex("v" + std::to_string(v));
                for (std::size_t k = 0; k < ne; ++k) {
                    auto [a, b] = u.edges[k];
                    if (omask & (1u << k)) std::swap(a, b);
                    g.add_edge("v" + std::to_string(a), "v" + std::to_string(b),
                               (lmask & (1u << k)) ? FiberLabel::Torus2
                                                   : FiberLabel::Sphere2);
                }
                for (std::size_t i = 0; i < extrema.size(); ++i)
                    g.set_sing("v" + std::to_string(extrema[i]), options[i][pick[i]]);

                LabeledReebDigraph cg = canonical_graph(g);
                out.emplace_back(std::make_tuple(cg.edge_count(), cg.vertex_count(),
                                                 canonical_key(cg)),
                                 std::move(cg));

                std::size_t d = 0;
                while (d < pick.size()) {
                    if (++pick[d] < options[d].size()) break;
                    pick[d] = 0;
                    ++d;
                }
                if (d == pick.size()) break;
            }
        }
    }
}

void check_cap(const EnumerationSpec& spec) {
    if (spec.max_edges < 1 || spec.max_edges > 8)
        throw CapExceededError("max_edges must be between 1 and 8, got " +
                               std::to_string(spec.max_edges));
}

std::vector<LabeledReebDigraph> merge_sorted(std::vector<Keyed>&& found) {
    std::sort(found.begin(), found.end(),
              [](const Keyed& a, const Keyed& b) { return a.first < b.first; });
    std::vector<LabeledReebDigraph> out;
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (i > 0 && found[i].first == found[i - 1].first) continue;
        out.push_back(std::move(found[i].second));
    }
    return out;
}

}  // namespace

std::vector<LabeledReebDigraph> enumerate_graphs_serial(const EnumerationSpec& spec) {
    check_cap(spec);
    std::vector<UGraph> skeletons = grow_ugraphs(spec.max_edges, spec.require_connected);
    std::vector<Keyed> found;
    for (const UGraph& u : skeletons) expand(u, spec.require_catalog, found);
    return merge_sorted(std::move(found));
}

std::vector<LabeledReebDigraph> enumerate_graphs(const EnumerationSpec& spec) {
    check_cap(spec);
    std::vector<UGraph> skeletons = grow_ugraphs(spec.max_edges, spec.require_connected);
    std::vector<Keyed> found;

#pragma omp parallel
    {
        std::vector<Keyed> local;
#pragma omp for schedule(dynamic) nowait
        for (int i = 0; i < static_cast<int>(skeletons.size()); ++i)
            expand(skeletons[static_cast<std::size_t>(i)], spec.require_catalog, local);
#pragma omp critical
        found.insert(found.end(), std::make_move_iterator(local.begin()),
                     std::make_move_iterator(local.end()));
    }
    return merge_sorted(std::move(found));
}

namespace {

ManifoldCensus census_after_normalize(const LabeledReebDigraph& g) {
    return classify(normalize(g).graph);
}

std::string brief(const LabeledReebDigraph& g) { return serialize(g); }

void check_validator_agreement(const LabeledReebDigraph& g, const std::string& label,
                               std::vector<std::string>& discrepancies) {
    ValidationReport main = validate_problem1(g);
    oracle::IndependentVerdict ind = oracle::check_problem1_independent(g);
    std::set<ViolationKind> main_kinds;
    for (const Violation& v : main.violations) main_kinds.insert(v.kind);
    if (main.ok() != ind.valid || main_kinds != ind.kinds)
        discrepancies.push_back("validators disagree on " + label + ":\n" + brief(g));
}

// Single-step deterministic mutations; the two validators must agree on all
// of them, valid or not.
std::vector<LabeledReebDigraph> mutants_of(const LabeledReebDigraph& g) {
    std::vector<LabeledReebDigraph> out;
    for (int i = 0; i < g.edge_count(); ++i) {
        LabeledReebDigraph m;
        for (const std::string& v : g.vertices()) m.add_vertex(v);
        for (int j = 0; j < g.edge_count(); ++j) {
            const Edge& e = g.edge(j);
            FiberLabel l = e.label;
            if (j == i) l = l == FiberLabel::Sphere2 ? FiberLabel::Torus2 : FiberLabel::Sphere2;
            m.add_edge(e.src, e.dst, l);
        }
        for (const auto& [v, k] : g.sing_map()) m.set_sing(v, k);
        out.push_back(std::move(m));
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        LabeledReebDigraph m;
        for (const std::string& v : g.vertices()) m.add_vertex(v);
        for (int j = 0; j < g.edge_count(); ++j) {
            const Edge& e = g.edge(j);
            if (j == i)
                m.add_edge(e.dst, e.src, e.label);
            else
                m.add_edge(e.src, e.dst, e.label);
        }
        for (const auto& [v, k] : g.sing_map()) m.set_sing(v, k);
        out.push_back(std::move(m));
    }
    for (const std::string& v : g.vertices()) {
        if (g.sing(v)) {
            LabeledReebDigraph m = g;
            m.clear_sing(v);
            out.push_back(std::move(m));
        }
        for (SingularityKind k :
             {SingularityKind::MorsePoint, SingularityKind::Circle,
              SingularityKind::SphereBott, SingularityKind::TorusBott,
              SingularityKind::ProjectivePlane}) {
            LabeledReebDigraph m = g;
            m.set_sing(v, k);
            out.push_back(std::move(m));
        }
    }
    {
        LabeledReebDigraph m = g;
        for (const std::string& v : g.vertices()) m.set_height(v, Rational(0));
        out.push_back(std::move(m));
        out.push_back(assign_heights(g));
    }
    return out;
}

}  // namespace

OracleReport oracle_check(const EnumerationSpec& spec) {
    OracleReport report;
    std::vector<LabeledReebDigraph> suite = enumerate_graphs(spec);
    report.graphs_checked = static_cast<int>(suite.size());

    std::map<std::tuple<int, int, int, int>, int> buckets;

    for (const LabeledReebDigraph& g : suite) {
        if (!validate_problem1(g).ok())
            report.discrepancies.push_back("enumerated graph fails validation:\n" + brief(g));
        check_validator_agreement(g, "suite graph", report.discrepancies);
        for (const LabeledReebDigraph& m : mutants_of(g))
            check_validator_agreement(m, "mutant", report.discrepancies);

        if (!validate_catalog(g).empty()) continue;

        NormalizeResult norm;
        try {
            norm = normalize(g);
        } catch (const Error& e) {
            report.discrepancies.push_back(std::string("normalize failed: ") + e.what() +
                                           "\n" + brief(g));
            continue;
        }
        if (!decompose_torus_subgraph(norm.graph).clean())
            report.discrepancies.push_back("normal form still defective:\n" + brief(g));
        if (!validate_problem1(norm.graph).ok() || !validate_catalog(norm.graph).empty())
            report.discrepancies.push_back("normal form fails validation:\n" + brief(g));
        NormalizeResult again = normalize(norm.graph);
        if (!again.trace.empty() || !(again.graph == norm.graph))
            report.discrepancies.push_back("normalize is not idempotent:\n" + brief(g));
        if (!(apply_trace(g, norm.trace) == norm.graph))
            report.discrepancies.push_back("trace replay diverges:\n" + brief(g));

        ManifoldCensus census = classify(norm.graph);
        buckets[{census.torus_bundle_count, census.arc_summands, census.rp3_count,
                 census.residual_cycle_count}]++;

        auto expect_same_census = [&](const LabeledReebDigraph& h, const std::string& what) {
            ManifoldCensus c = census_after_normalize(h);
            if (!(c == census))
                report.discrepancies.push_back("census moved under " + what + ": " +
                                               c.to_string() + " vs " + census.to_string() +
                                               "\n" + brief(g));
        };
        for (const std::string& v : g.vertices()) {
            auto k = g.sing(v);
            if (k == SingularityKind::Circle)
                expect_same_census(split_circle_bott(g, v), "split-circle " + v);
            else if (k == SingularityKind::SphereBott)
                expect_same_census(split_sphere_bott(g, v), "split-sphere " + v);
        }
        for (const Move& m : builtin_moves())
            for (MoveDirection d : {MoveDirection::Forward, MoveDirection::Reverse})
                for (const MoveSite& site : find_sites(g, m, d))
                    expect_same_census(apply_move(g, m, d, site),
                                       m.name + std::string(" ") + to_string(d));
    }

    for (const auto& [key, count] : buckets) {
        CensusBucket b;
        b.census.member_of_class = true;
        b.census.torus_bundle_count = std::get<0>(key);
        b.census.arc_summands = std::get<1>(key);
        b.census.rp3_count = std::get<2>(key);
        b.census.residual_cycle_count = std::get<3>(key);
        b.count = count;
        report.buckets.push_back(b);
    }
    return report;
}

std::string census_bucket_csv(const OracleReport& report) {
    std::string out = "torus_bundles,arc_summands,rp3,residual_cycles,count\n";
    for (const CensusBucket& b : report.buckets) {
        out += std::to_string(b.census.torus_bundle_count) + "," +
               std::to_string(b.census.arc_summands) + "," +
               std::to_string(b.census.rp3_count) + "," +
               std::to_string(b.census.residual_cycle_count) + "," +
               std::to_string(b.count) + "\n";
    }
    return out;
}

}  // namespace reeb3
