#pragma once

#include <string>
#include <vector>

#include "reeb3/types.hpp"

namespace reeb3 {

enum class ViolationKind : std::uint8_t {
    NoEdges,                     // empty or single-vertex graph
    IsolatedVertex,
    DirectedCycle,               // includes loops, a loop is a length-1 cycle
    ExtremumDegree,              // extremum of degree >= 3
    ExtremumMixedLabels,
    ExtremumMissingAnnotation,
    AnnotationIncompatible,
    HeightOrientation,           // height(src) >= height(dst) on some edge
};

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string subject;  // vertex id, or "src->dst" for edge-level findings
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(ViolationKind k) const;
    std::string to_string() const;
};

// Checks the realizability conditions for a digraph to be the Reeb digraph of
// a sphere/torus-fibered function: acyclic orientation, extrema of degree at
// most two with uniform labels and a compatible annotation, heights (where
// present) increasing along edges. Pure; repeated calls agree.
ValidationReport validate_problem1(const LabeledReebDigraph& g);

// Replaces the height map with longest-path layering: layer 0 sources, each
// vertex one above its deepest predecessor. Deterministic. Throws
// DirectedCycleError on cyclic input.
LabeledReebDigraph assign_heights(const LabeledReebDigraph& g);

// Fills only the missing heights, keeping declared ones: a vertex gets one
// more than the largest completed height among its predecessors (0 for a
// source). Cyclic graphs are returned unchanged; the validator reports them.
LabeledReebDigraph complete_heights(const LabeledReebDigraph& g);

// Kahn order; empty when the graph has a directed cycle. Ties broken by id.
std::vector<std::string> topological_order(const LabeledReebDigraph& g);

}  // namespace reeb3
