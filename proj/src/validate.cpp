#include "reeb3/validate.hpp"

#include <algorithm>
#include <map>

#include "reeb3/catalog.hpp"

namespace reeb3 {

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::NoEdges: return "no-edges";
        case ViolationKind::IsolatedVertex: return "isolated-vertex";
        case ViolationKind::DirectedCycle: return "directed-cycle";
        case ViolationKind::ExtremumDegree: return "extremum-degree";
        case ViolationKind::ExtremumMixedLabels: return "extremum-mixed-labels";
        case ViolationKind::ExtremumMissingAnnotation: return "extremum-missing-annotation";
        case ViolationKind::AnnotationIncompatible: return "annotation-incompatible";
        case ViolationKind::HeightOrientation: return "height-orientation";
    }
    return "?";
}

bool ValidationReport::has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(),
                       [k](const Violation& v) { return v.kind == k; });
}

std::string ValidationReport::to_string() const {
    std::string out;
    for (const Violation& v : violations) {
        out += std::string(reeb3::to_string(v.kind)) + " [" + v.subject + "]: " +
               v.message + "\n";
    }
    return out;
}

std::vector<std::string> topological_order(const LabeledReebDigraph& g) {
    std::map<std::string, int> indeg;
    for (const std::string& v : g.vertices()) indeg[v] = 0;
    for (const Edge& e : g.edges()) ++indeg[e.dst];

    std::set<std::string> ready;
    for (const auto& [v, d] : indeg)
        if (d == 0) ready.insert(v);

    std::vector<std::string> order;
    while (!ready.empty()) {
        std::string v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int i : g.out_edges(v)) {
            const std::string& w = g.edge(i).dst;
            if (--indeg[w] == 0) ready.insert(w);
        }
    }
    if (static_cast<int>(order.size()) != g.vertex_count()) return {};
    return order;
}

ValidationReport validate_problem1(const LabeledReebDigraph& g) {
    ValidationReport report;
    auto add = [&](ViolationKind k, const std::string& subject, const std::string& msg) {
        report.violations.push_back({k, subject, msg});
    };

    if (g.edge_count() == 0) {
        add(ViolationKind::NoEdges, "", "a closed 3-manifold's Reeb digraph has at least one edge");
        return report;
    }

    for (const std::string& v : g.vertices())
        if (g.degree(v) == 0)
            add(ViolationKind::IsolatedVertex, v, "vertex has no incident edge");

    if (topological_order(g).empty()) {
        std::string loops;
        for (const Edge& e : g.edges())
            if (e.src == e.dst) loops += (loops.empty() ? "" : ", ") + e.src;
        add(ViolationKind::DirectedCycle, loops,
            loops.empty() ? "orientation admits no height function"
                          : "loop edge forces equal endpoint heights");
    }

    for (const std::string& v : g.vertices()) {
        VertexSignature s = g.signature(v);
        if (s.is_extremum()) {
            bool shape_ok = true;
            if (s.degree() >= 3) {
                add(ViolationKind::ExtremumDegree, v,
                    "extremum has degree " + std::to_string(s.degree()));
                shape_ok = false;
            }
            if (s.labels_mixed()) {
                add(ViolationKind::ExtremumMixedLabels, v,
                    "incident labels at an extremum must agree: " + s.to_string());
                shape_ok = false;
            }
            if (!s.sing) {
                add(ViolationKind::ExtremumMissingAnnotation, v,
                    "extremum carries no singularity annotation");
            } else if (shape_ok) {
                FiberLabel l = (s.in_torus + s.out_torus) > 0 ? FiberLabel::Torus2
                                                              : FiberLabel::Sphere2;
                auto allowed = allowed_extremum_annotations(l, s.degree());
                if (std::find(allowed.begin(), allowed.end(), *s.sing) == allowed.end())
                    add(ViolationKind::AnnotationIncompatible, v,
                        std::string(to_string(*s.sing)) + " cannot sit over " + s.to_string());
            }
        } else if (s.degree() > 0 && s.sing && *s.sing != SingularityKind::MorsePoint) {
            add(ViolationKind::AnnotationIncompatible, v,
                std::string(to_string(*s.sing)) + " may annotate extrema only");
        }
    }

    for (const Edge& e : g.edges()) {
        auto hs = g.height(e.src);
        auto hd = g.height(e.dst);
        if (hs && hd && !(*hs < *hd))
            add(ViolationKind::HeightOrientation, e.src + "->" + e.dst,
                "height must increase along the edge: " + rational_to_string(*hs) +
                    " !< " + rational_to_string(*hd));
    }

    return report;
}

LabeledReebDigraph assign_heights(const LabeledReebDigraph& g) {
    std::vector<std::string> order = topological_order(g);
    if (order.empty() && g.vertex_count() > 0)
        throw DirectedCycleError("cannot layer a cyclic digraph");

    std::map<std::string, long long> layer;
    for (const std::string& v : order) layer[v] = 0;
    for (const std::string& v : order)
        for (int i : g.out_edges(v))
            layer[g.edge(i).dst] = std::max(layer[g.edge(i).dst], layer[v] + 1);

    LabeledReebDigraph out = g;
    out.clear_heights();
    for (const auto& [v, k] : layer) out.set_height(v, Rational(k));
    return out;
}

LabeledReebDigraph complete_heights(const LabeledReebDigraph& g) {
    std::vector<std::string> order = topological_order(g);
    if (order.empty() && g.vertex_count() > 0) return g;

    LabeledReebDigraph out = g;
    for (const std::string& v : order) {
        if (out.height(v)) continue;
        std::optional<Rational> best;
        for (int i : g.in_edges(v)) {
            auto h = out.height(g.edge(i).src);
            if (h && (!best || *h > *best)) best = *h;
        }
        out.set_height(v, best ? *best + Rational(1) : Rational(0));
    }
    return out;
}

}  // namespace reeb3
