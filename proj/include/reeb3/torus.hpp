#pragma once

#include <string>
#include <vector>

#include "reeb3/types.hpp"

namespace reeb3 {

// One component of the subgraph spanned by torus edges that fits neither
// normal shape, with the reason it fails.
struct TorusDefect {
    std::vector<int> edges;
    std::string reason;
};

// Partition of the torus subgraph's components.
//
// Arc: a path whose two boundary vertices have degree 2 in the full graph and
// are non-extremal (the sphere/torus transitions), and whose interior
// vertices have degree 2 and are extrema (torus circles of critical points).
// Each arc contributes one lens-space / S2xS1 / S3 connected summand.
//
// Cycle: a simple cycle where every local extremum of the height restricted
// to the cycle is an extremum of the full graph of degree 2. Each cycle
// contributes one torus bundle over the circle.
struct TorusDecomposition {
    std::vector<std::vector<int>> arcs;    // edge indices ordered along the path
    std::vector<std::vector<int>> cycles;  // edge indices ordered around the cycle
    std::vector<TorusDefect> defects;

    bool clean() const { return defects.empty(); }
};

// Expects a graph passing validate_problem1. Restriction extrema are read
// from orientations (both component edges at the vertex point the same way),
// so no numeric heights are needed.
TorusDecomposition decompose_torus_subgraph(const LabeledReebDigraph& g);

}  // namespace reeb3
