#pragma once

#include "greengrade/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace greengrade {

/// Edge numbering 1..e produced by Green's walk, with per-edge distance and
/// predecessor index. Index 1 is always adjacent to the exceptional vertex
/// and predecessors come earlier in the numbering.
struct GreenNumbering {
    std::string start_edge;
    std::vector<std::string> id_of;        // [0] unused; id_of[i] for i in 1..e
    std::map<std::string, int> index_of;
    std::vector<int> delta;                // by index, [0] unused
    std::vector<int> predecessor;          // by index, 0 when delta == 1

    int e() const { return static_cast<int>(id_of.size()) - 1; }
};

/// Subtree hanging off one delta=1 edge; indices form a contiguous interval.
struct Component {
    int root;                    // index of the delta=1 edge
    std::vector<int> members;    // sorted indices
    int size() const { return static_cast<int>(members.size()); }
};

/// Green's walk from `start` (must be adjacent to the exceptional vertex);
/// when absent, the lexicographically smallest adjacent edge id is used.
/// Realized as the rotation-system DFS: on arriving at a vertex via an edge,
/// the remaining incident edges are visited in counter-clockwise order after
/// the arrival edge, each numbered on first traversal.
GreenNumbering green_number(const BrauerTree& t,
                            const std::optional<std::string>& start = std::nullopt);

/// One component per delta=1 edge, in counter-clockwise order of the roots
/// around the exceptional vertex starting at the walk's start edge.
std::vector<Component> components(const GreenNumbering& n);

} // namespace greengrade
