#pragma once

#include <string>
#include <vector>

#include "reeb3/types.hpp"

namespace reeb3 {

// Local rewrite patterns. A pattern is a small digraph plus an ordered list
// of boundary stubs; a stub names a pattern vertex, a direction and a label,
// and stands for one edge of the host graph whose far endpoint lies outside
// the matched region. The two sides of a move list their stubs in the same
// order, and a rewrite reattaches host edges stub by stub, so applying a
// move never touches anything beyond the matched vertices.

struct PatternStub {
    int vertex;     // index into Pattern::vertices
    bool incoming;  // true: host edge points into the region here
    FiberLabel label;

    bool operator==(const PatternStub&) const = default;
};

struct PatternEdge {
    int src;
    int dst;
    FiberLabel label;

    bool operator==(const PatternEdge&) const = default;
};

struct Pattern {
    std::vector<VertexSignature> vertices;  // full signatures, annotations included
    std::vector<PatternEdge> edges;         // edges interior to the region
    std::vector<PatternStub> boundary;      // ordered boundary stubs
};

struct Move {
    std::string name;
    Pattern left;
    Pattern right;
    // Certified common preimage of both sides; equal interfaces make the
    // exchange well defined in either direction.
    std::string preimage;
};

enum class MoveDirection { Forward, Reverse };

const char* to_string(MoveDirection d);

// The slide moves. Each exchanges "transition, then sphere edge, then
// merge/split" for "transition above a transition along a torus edge"; all
// four orientation variants of the region are covered and every one carries
// the same preimage, a solid torus minus two balls. Reverse application
// (right to left) removes an interior transition from a torus path, which is
// what normalization runs on.
const std::vector<Move>& builtin_moves();

const Move& move_by_name(const std::string& name);

// One occurrence of a pattern in a host graph: where each pattern vertex
// lands and which host edge fills each boundary stub. Boundary assignment is
// part of the site because stubs at one vertex can be interchangeable and
// the choice changes the rewrite.
struct MoveSite {
    std::vector<std::string> vertex_image;
    std::vector<int> boundary_edges;

    bool operator==(const MoveSite&) const = default;
};

// All occurrences of the source side (left for Forward, right for Reverse),
// ordered by (vertex_image, boundary_edges). Signatures must match exactly,
// interior edges must be distinct host edges, and stub edges must leave the
// matched region.
std::vector<MoveSite> find_sites(const LabeledReebDigraph& g, const Move& m,
                                 MoveDirection d);

// Rewrites the site, replacing the matched vertices by the other side's and
// reattaching boundary edges stub for stub. Replacement vertices get fresh
// ids derived from the site; their heights are left unset. Throws
// NoMatchError if the site does not embed the source pattern.
LabeledReebDigraph apply_move(const LabeledReebDigraph& g, const Move& m,
                              MoveDirection d, const MoveSite& site);

}  // namespace reeb3
