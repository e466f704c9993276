#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace greengrade {

/// Planar Brauer tree: rotation system (counter-clockwise edge lists per
/// vertex), one exceptional vertex, multiplicity m. Immutable after
/// validation; rotation lists are cyclic, the stored start is arbitrary.
struct BrauerTree {
    int multiplicity = 1;
    std::string exceptional;
    std::map<std::string, std::vector<std::string>> rotation; // vertex -> ccw incident edges
    std::map<std::string, std::pair<std::string, std::string>> edges;

    int e() const { return static_cast<int>(edges.size()); }

    const std::string& other_end(const std::string& edge, const std::string& vertex) const;

    /// Checks every structural invariant; throws with a specific diagnostic.
    void validate() const;
};

/// Per-edge distance from the exceptional vertex (adjacent edges have
/// delta = 1) and the predecessor edge on the unique path for delta >= 2.
struct EdgeDistance {
    std::map<std::string, int> delta;
    std::map<std::string, std::string> predecessor; // only for delta >= 2
};

BrauerTree parse_tree(const std::string& json_text);
std::string serialize_tree(const BrauerTree& t);

/// Brauer star: e edges around the exceptional center, rotation order
/// edge 1..e counter-clockwise.
BrauerTree star_tree(int m, int e);

/// Brauer line with the exceptional vertex at one end; edge k joins
/// vertex k-1 to vertex k.
BrauerTree line_tree(int m, int e);

EdgeDistance distances(const BrauerTree& t);

} // namespace greengrade
