#pragma once

#include "greengrade/tree.hpp"

#include <string>
#include <vector>

namespace greengrade {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<Check> checks;
    bool all_pass() const;
    std::string text() const; // one line per check
};

/// Runs every cross-module consistency check on one tree: grading oracle
/// equivalence, Hom dimension table, Cartan routes and determinant, A_0
/// round-trip and Cartan/triangularity, start-edge independence, positive
/// shifts, and the structural grading invariants.
VerifyReport verify_tree(const BrauerTree& t);

} // namespace greengrade
