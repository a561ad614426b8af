#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reeb3/types.hpp"

namespace reeb3 {

struct Isomorphism {
    std::map<std::string, std::string> vertex_map;
    std::vector<int> edge_map;  // edge i of the first graph -> edge of the second
};

// Digraph isomorphism preserving orientation, edge labels and singularity
// annotations (heights are a witness, not structure). Backtracking search
// seeded by signature classes; exhaustive and fine at this scale.
std::optional<Isomorphism> isomorphic(const LabeledReebDigraph& g1,
                                      const LabeledReebDigraph& g2);

bool check_isomorphism(const LabeledReebDigraph& g1, const LabeledReebDigraph& g2,
                       const Isomorphism& iso);

// Total invariant: two graphs get the same key iff they are isomorphic.
// Minimizes the (n, edges, annotations) encoding over signature-class
// respecting relabelings.
std::string canonical_key(const LabeledReebDigraph& g);

// The graph relabeled v0..v{n-1} realizing canonical_key. Heights dropped.
LabeledReebDigraph canonical_graph(const LabeledReebDigraph& g);

LabeledReebDigraph renamed(const LabeledReebDigraph& g,
                           const std::map<std::string, std::string>& names);

}  // namespace reeb3
