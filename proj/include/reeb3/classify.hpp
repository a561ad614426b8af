#pragma once

#include <map>

#include "reeb3/torus.hpp"
#include "reeb3/types.hpp"
#include "reeb3/validate.hpp"

namespace reeb3 {

// Census of the 3-manifold class determined by a normal-form digraph: a
// connected sum of torus bundles over the circle, arc summands (each a lens
// space, S2xS1 or S3), RP3 summands, one S2xS1 per residual independent
// cycle, and S3 fillers.
struct ManifoldCensus {
    bool member_of_class = false;
    int torus_bundle_count = 0;   // cycles of the torus subgraph
    int arc_summands = 0;         // arcs of the torus subgraph
    int rp3_count = 0;            // ProjectivePlane vertices
    int residual_cycle_count = 0; // betti1 minus torus_bundle_count

    bool operator==(const ManifoldCensus&) const = default;
    std::string to_string() const;
};

struct PreconditionError : Error {
    ValidationReport report;
    PreconditionError(const std::string& what, ValidationReport r)
        : Error(what), report(std::move(r)) {}
};

struct NonCatalogVertexError : Error {
    std::vector<std::string> vertices;
    explicit NonCatalogVertexError(std::vector<std::string> vs);
};

struct DefectiveTorusSubgraphError : Error {
    std::vector<TorusDefect> defects;
    explicit DefectiveTorusSubgraphError(std::vector<TorusDefect> ds);
};

// Requires a graph that passes both validators and whose torus subgraph
// decomposes without defects (normalize first otherwise). All counts are
// isomorphism invariants.
ManifoldCensus classify(const LabeledReebDigraph& g);

// Vertex counts by singularity kind; unannotated non-extrema count as
// MorsePoint. Totals to the vertex count.
std::map<SingularityKind, int> singular_locus_census(const LabeledReebDigraph& g);

}  // namespace reeb3
