#pragma once

#include <string>
#include <vector>

#include "reeb3/moves.hpp"
#include "reeb3/torus.hpp"
#include "reeb3/types.hpp"

namespace reeb3 {

// One rewrite in a normalization run. Traces replay deterministically:
// apply_trace on the original input reproduces the normalized graph exactly.
struct TraceStep {
    enum class Kind { SplitCircle, Slide };
    Kind kind;
    std::string vertex;     // SplitCircle: the Circle extremum split
    std::string move_name;  // Slide: which built-in move
    MoveDirection direction = MoveDirection::Reverse;
    MoveSite site;          // Slide: where

    std::string to_string() const;
};

struct NormalizeResult {
    LabeledReebDigraph graph;
    std::vector<TraceStep> trace;
};

// Raised when the move repertoire cannot reach a clean torus decomposition,
// or (defensively) when the step budget runs out. Carries the partial trace
// and the defects left standing.
struct NormalizationStuckError : Error {
    std::vector<TraceStep> trace;
    std::vector<TorusDefect> defects;
    NormalizationStuckError(const std::string& what, std::vector<TraceStep> t,
                            std::vector<TorusDefect> d)
        : Error(what), trace(std::move(t)), defects(std::move(d)) {}
};

// Drives the torus subgraph to arcs and cycles only: splits every circle of
// extremal points first (smallest vertex id first), then repeatedly applies
// the first reverse slide in canonical order (built-in move order, then site
// order). Each reverse slide removes one interior transition from a torus
// path and creates none, so the run terminates well inside the 10*(E+V)
// step budget. A graph that is already clean comes back unchanged with an
// empty trace.
//
// Throws PreconditionError or NonCatalogVertexError (via the validators)
// on inadmissible input, NormalizationStuckError when no step applies; a
// torus path whose interior transition sits between two tori of extremal
// points is the known unreachable case.
NormalizeResult normalize(const LabeledReebDigraph& g);

// Replays a trace. Fresh vertex names are derived from the graph, so the
// replay is byte-for-byte the original run.
LabeledReebDigraph apply_trace(const LabeledReebDigraph& g,
                               const std::vector<TraceStep>& trace);

}  // namespace reeb3
