#include "reeb3/classify.hpp"

#include "reeb3/catalog.hpp"
#include "reeb3/graph_algos.hpp"

namespace reeb3 {

std::string ManifoldCensus::to_string() const {
    return std::string("member=") + (member_of_class ? "yes" : "no") +
           " torus_bundles=" + std::to_string(torus_bundle_count) +
           " arc_summands=" + std::to_string(arc_summands) +
           " rp3=" + std::to_string(rp3_count) +
           " residual_cycles=" + std::to_string(residual_cycle_count);
}

namespace {

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const std::string& x : xs) out += (out.empty() ? "" : ", ") + x;
    return out;
}

}  // namespace

NonCatalogVertexError::NonCatalogVertexError(std::vector<std::string> vs)
    : Error("vertices outside the local-form table: " + join(vs)), vertices(std::move(vs)) {}

DefectiveTorusSubgraphError::DefectiveTorusSubgraphError(std::vector<TorusDefect> ds)
    : Error("torus subgraph has " + std::to_string(ds.size()) +
            " component(s) in no normal shape"),
      defects(std::move(ds)) {}

ManifoldCensus classify(const LabeledReebDigraph& g) {
    ValidationReport report = validate_problem1(g);
    if (!report.ok())
        throw PreconditionError("classify requires a valid graph:\n" + report.to_string(),
                                std::move(report));
    auto bad = validate_catalog(g);
    if (!bad.empty()) {
        std::vector<std::string> vs;
        for (const auto& b : bad) vs.push_back(b.vertex);
        throw NonCatalogVertexError(std::move(vs));
    }

    TorusDecomposition d = decompose_torus_subgraph(g);
    if (!d.clean()) throw DefectiveTorusSubgraphError(d.defects);

    ManifoldCensus census;
    census.member_of_class = true;
    census.torus_bundle_count = static_cast<int>(d.cycles.size());
    census.arc_summands = static_cast<int>(d.arcs.size());
    for (const auto& [v, k] : g.sing_map())
        if (k == SingularityKind::ProjectivePlane) ++census.rp3_count;
    census.residual_cycle_count = betti1(g) - census.torus_bundle_count;
    return census;
}

std::map<SingularityKind, int> singular_locus_census(const LabeledReebDigraph& g) {
    std::map<SingularityKind, int> out;
    for (const std::string& v : g.vertices()) {
        auto k = g.sing(v);
        ++out[k ? *k : SingularityKind::MorsePoint];
    }
    return out;
}

}  // namespace reeb3
