#pragma once

#include <string>
#include <vector>

#include "reeb3/classify.hpp"
#include "reeb3/types.hpp"

namespace reeb3 {

struct EnumerationSpec {
    int max_edges = 3;           // hard cap 8
    bool require_catalog = true;
    bool require_connected = true;
};

// Every graph with 1..max_edges edges, acyclic orientation, all labelings
// and all extremum annotations the signatures admit (non-extrema stay
// unannotated), deduplicated up to isomorphism. Connected only by default;
// with require_catalog every vertex signature must sit in the catalog.
// Canonical graphs, sorted by (edge count, vertex count, canonical key).
// Throws CapExceededError above the hard cap.
std::vector<LabeledReebDigraph> enumerate_graphs(const EnumerationSpec& spec);

// Same result, single-threaded reference path; the parallel version must
// match it exactly.
std::vector<LabeledReebDigraph> enumerate_graphs_serial(const EnumerationSpec& spec);

struct CensusBucket {
    ManifoldCensus census;
    int count = 0;
};

struct OracleReport {
    int graphs_checked = 0;
    std::vector<CensusBucket> buckets;        // catalog-valid graphs only
    std::vector<std::string> discrepancies;   // serialized counterexample + reason
    bool ok() const { return discrepancies.empty(); }
};

// Cross-checks the whole enumerated suite: the main validator must agree
// with the independent checker on every graph and on every single-step
// mutation of it; every catalog graph must normalize to zero defects, be a
// fixed point of a second normalization, and replay its trace exactly; the
// census must not move under any applicable split or move at any site.
OracleReport oracle_check(const EnumerationSpec& spec);

// One row per census bucket: tb, arcs, rp3, residual, count.
std::string census_bucket_csv(const OracleReport& report);

}  // namespace reeb3
