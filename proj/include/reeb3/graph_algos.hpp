#pragma once

#include <map>
#include <string>
#include <vector>

#include "reeb3/types.hpp"

namespace reeb3 {

// Component ids of the underlying undirected graph, numbered 0.. in order of
// each component's smallest vertex id. Isolated vertices count.
std::map<std::string, int> connected_components(const LabeledReebDigraph& g);

int connected_component_count(const LabeledReebDigraph& g);

bool is_connected(const LabeledReebDigraph& g);

// First Betti number of the underlying multigraph: E - V + #components.
int betti1(const LabeledReebDigraph& g);

// Every simple cycle of the underlying undirected multigraph, each as a
// sorted list of edge indices (a pair of parallel edges is a 2-cycle).
// Deterministic order. Exhaustive search; graphs here are small.
std::vector<std::vector<int>> simple_cycles(const LabeledReebDigraph& g);

// No edge lies on two simple cycles.
bool is_cactus(const LabeledReebDigraph& g);

}  // namespace reeb3
