#pragma once

#include <map>
#include <string>
#include <vector>

#include "reeb3/classify.hpp"
#include "reeb3/isomorphism.hpp"
#include "reeb3/types.hpp"

namespace reeb3 {

// Input to the realization construction: a digraph together with the chosen
// pairwise vertex-disjoint simple cycles (edge index lists) that are to
// become torus bundle summands.
struct Theorem3Instance {
    LabeledReebDigraph k;
    std::vector<std::vector<int>> cycles;
};

struct HypothesisCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct HypothesisReport {
    std::vector<HypothesisCheck> checks;
    bool all_passed() const;
    std::string to_string() const;
};

// The admissibility conditions on an instance: every chosen cycle is a
// simple cycle of the graph; the cycles are pairwise vertex-disjoint; every
// chosen edge is torus-labeled; every vertex where the orientation turns
// around along a cycle is an extremum of the whole graph of degree two; and
// a graph homeomorphic to a circle must have at least one non-extremal
// vertex. The last one is checked whether or not cycles were chosen.
HypothesisReport check_theorem3_hypotheses(const Theorem3Instance& inst);

struct HypothesisViolationError : Error {
    HypothesisReport report;
    explicit HypothesisViolationError(HypothesisReport r);
};

// Pendant bookkeeping: which fresh extremum hangs under and over a vertex,
// and by which edges. Gluing and cancellation consume these records instead
// of rediscovering pendants structurally, which would be ambiguous whenever
// a vertex already had sphere edges of its own.
struct PendantPair {
    std::string low;
    std::string high;
    int low_edge = -1;
    int high_edge = -1;
};

struct AugmentedGraph {
    LabeledReebDigraph graph;
    std::map<std::string, PendantPair> pendants;  // target vertex -> its pair
};

// The graph minus the chosen cycles' edges; every vertex stays.
LabeledReebDigraph construct_k_prime(const Theorem3Instance& inst);

// The subgraph spanned by one chosen cycle, annotations and heights kept.
LabeledReebDigraph cycle_subgraph(const Theorem3Instance& inst, std::size_t j);

// Hangs a fresh Morse minimum below and maximum above each target by sphere
// edges. Targets become interior vertices, so their annotations reset to
// MorsePoint; pendant heights sit one below/above the target's when it has
// one. Fresh ids derive from the target, so repeated runs agree.
AugmentedGraph augment_with_pendants(const LabeledReebDigraph& h,
                                     const std::vector<std::string>& targets);

struct MissingPendantError : Error {
    explicit MissingPendantError(const std::string& detail)
        : Error("missing pendant: " + detail) {}
};

struct AmbiguousSharedVertexError : Error {
    explicit AmbiguousSharedVertexError(const std::string& detail)
        : Error("ambiguous shared vertex: " + detail) {}
};

struct GluedRealization {
    LabeledReebDigraph graph;
    std::map<std::string, PendantPair> pendants;  // survivors of identification
};

// Glues the augmented cycle pieces onto the augmented residue along each
// shared vertex, identifying the vertex itself, both its pendant vertices
// and both pendant edges. Each shared vertex must carry pendants on both
// sides and belong to exactly one cycle piece.
GluedRealization glue_realization(const AugmentedGraph& k0,
                                  const std::vector<AugmentedGraph>& c0,
                                  const std::vector<std::string>& shared);

// Removes every pendant pair and re-annotates: cycle turning points become
// TorusBott (degree two) or Circle (degree one), other extrema take the
// input graph's annotations, interior vertices become MorsePoint. Returns
// the finished graph and an isomorphism onto inst.k.
std::pair<LabeledReebDigraph, Isomorphism> cancel_pendants(const GluedRealization& glued,
                                                           const Theorem3Instance& inst);

// Every stage of one run, kept for inspection and for the paper trail the
// tests walk: counts at each stage are part of the construction's contract.
struct RealizationCertificate {
    HypothesisReport hypotheses;
    LabeledReebDigraph k_prime;
    AugmentedGraph k0_prime;
    std::vector<AugmentedGraph> c0;
    GluedRealization glued;
    LabeledReebDigraph final_graph;
    Isomorphism iso_witness;  // final_graph -> instance graph
    // Census of the finished graph (normalized first if needed); left at its
    // default when the graph falls outside the vertex catalog.
    ManifoldCensus census;
    std::string manifold_expression;
};

// The chosen cycles must account for every torus bundle the finished graph
// encodes, or the stated summand expression would be wrong.
struct CycleSelectionError : Error {
    explicit CycleSelectionError(const std::string& detail) : Error(detail) {}
};

// Runs the whole construction. Throws PreconditionError when the graph fails
// validation, HypothesisViolationError when the instance is inadmissible,
// and CycleSelectionError when the chosen cycles do not exhaust the torus
// cycles of the graph (the realized manifold would carry extra torus
// bundles).
RealizationCertificate realize(const Theorem3Instance& inst);

}  // namespace reeb3
