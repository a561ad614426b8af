#pragma once

#include <set>
#include <string>

#include "reeb3/types.hpp"
#include "reeb3/validate.hpp"

namespace reeb3::oracle {

// Verdict of the from-scratch re-implementation of the realizability rules.
// Shares only the ViolationKind vocabulary with the main validator; the
// logic is written independently so the two can check each other.
struct IndependentVerdict {
    bool valid = false;
    std::set<ViolationKind> kinds;
};

IndependentVerdict check_problem1_independent(const LabeledReebDigraph& g);

// Decides DSL document validity by line-level regular expressions plus the
// declaration rules, independently of the parser. Used to judge the fuzzer:
// parse() must succeed exactly on documents this accepts.
bool document_is_valid(const std::string& text);

}  // namespace reeb3::oracle
