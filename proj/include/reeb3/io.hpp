#pragma once

#include <set>
#include <string>

#include "reeb3/classify.hpp"
#include "reeb3/types.hpp"

namespace reeb3 {

// Line-based text format, UTF-8 with LF endings. Line kinds:
//
//   v NAME [@RATIONAL] [!SING]     vertex, optional height and annotation
//   e NAME -> NAME : LABEL         edge; LABEL is S2 or T2
//   # ...                          comment
//   (blank)
//
// NAME is [A-Za-z0-9_]+; SING is point|circle|sphere|torus|rp2; RATIONAL is
// an optional sign, digits, and an optional /digits denominator. Endpoints
// must be declared before use; redeclaring a vertex is an error. When a
// document declares at least one height, the remaining heights are completed
// downstream-monotonically.
//
// Throws ParseError (line and column), UndeclaredVertexError,
// DuplicateDeclarationError.
LabeledReebDigraph parse(const std::string& text);

// Canonical document: vertices sorted by id, then edges in index order.
// parse(serialize(g)) is isomorphic to g, and byte-identical round trips hold
// on canonical documents.
std::string serialize(const LabeledReebDigraph& g);

// Graphviz text. Vertices are filled dots; sphere edges blue, torus edges
// red; vertices in `boundary_markers` (realization pendants) drawn blue.
std::string export_dot(const LabeledReebDigraph& g,
                       const std::set<std::string>& boundary_markers = {});

// {"format":"reeb3kit/1", vertices, edges, census?}. Heights serialize as
// exact rational strings. Key order is fixed, so output is deterministic.
std::string export_json(const LabeledReebDigraph& g,
                        const ManifoldCensus* census = nullptr);

std::string census_json(const ManifoldCensus& census);

}  // namespace reeb3
