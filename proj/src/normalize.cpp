#include "reeb3/normalize.hpp"

#include "reeb3/catalog.hpp"
#include "reeb3/classify.hpp"
#include "reeb3/splits.hpp"
#include "reeb3/validate.hpp"

namespace reeb3 {

std::string TraceStep::to_string() const {
    if (kind == Kind::SplitCircle) return "split-circle " + vertex;
    std::string out = move_name;
    out += ' ';
    out += reeb3::to_string(direction);
    out += " at [";
    for (std::size_t i = 0; i < site.vertex_image.size(); ++i) {
        if (i) out += ',';
        out += site.vertex_image[i];
    }
    out += ']';
    return out;
}

namespace {

void require_admissible(const LabeledReebDigraph& g) {
    ValidationReport report = validate_problem1(g);
    if (!report.ok())
        throw PreconditionError("normalize requires a realizable digraph", std::move(report));
    std::vector<CatalogViolation> bad = validate_catalog(g);
    if (!bad.empty()) {
        std::vector<std::string> vs;
        for (const CatalogViolation& v : bad) vs.push_back(v.vertex);
        throw NonCatalogVertexError(std::move(vs));
    }
}

}  // namespace

NormalizeResult normalize(const LabeledReebDigraph& g) {
    require_admissible(g);

    NormalizeResult res{g, {}};
    const std::size_t budget =
        10 * static_cast<std::size_t>(g.edge_count() + g.vertex_count());

    for (;;) {
        TorusDecomposition dec = decompose_torus_subgraph(res.graph);
        if (dec.clean()) break;
        if (res.trace.size() >= budget)
            throw NormalizationStuckError(
                "normalization exceeded its step budget of " + std::to_string(budget),
                std::move(res.trace), std::move(dec.defects));

        // Circles of extremal points first: each split turns one into a
        // Morse extremum and a transition, and no step creates new ones.
        const std::string* circle = nullptr;
        for (const auto& [v, k] : res.graph.sing_map())
            if (k == SingularityKind::Circle) {
                circle = &v;
                break;
            }
        if (circle) {
            std::string v = *circle;
            res.graph = split_circle_bott(res.graph, v);
            TraceStep step;
            step.kind = TraceStep::Kind::SplitCircle;
            step.vertex = v;
            res.trace.push_back(std::move(step));
            continue;
        }

        // Then the first reverse slide in canonical order. Each one removes
        // an interior transition from a torus path.
        bool stepped = false;
        for (const Move& m : builtin_moves()) {
            std::vector<MoveSite> sites = find_sites(res.graph, m, MoveDirection::Reverse);
            if (sites.empty()) continue;
            res.graph = apply_move(res.graph, m, MoveDirection::Reverse, sites.front());
            TraceStep step;
            step.kind = TraceStep::Kind::Slide;
            step.move_name = m.name;
            step.direction = MoveDirection::Reverse;
            step.site = sites.front();
            res.trace.push_back(std::move(step));
            stepped = true;
            break;
        }
        if (!stepped)
            throw NormalizationStuckError(
                "torus subgraph still defective but no split or reverse slide applies",
                std::move(res.trace), std::move(dec.defects));
    }
    return res;
}

LabeledReebDigraph apply_trace(const LabeledReebDigraph& g,
                               const std::vector<TraceStep>& trace) {
    LabeledReebDigraph cur = g;
    for (const TraceStep& step : trace) {
        if (step.kind == TraceStep::Kind::SplitCircle)
            cur = split_circle_bott(cur, step.vertex);
        else
            cur = apply_move(cur, move_by_name(step.move_name), step.direction, step.site);
    }
    return cur;
}

}  // namespace reeb3
