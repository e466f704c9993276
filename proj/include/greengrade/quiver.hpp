#pragma once

#include "greengrade/green_walk.hpp"
#include "greengrade/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace greengrade {

inline constexpr int kDegreeUnassigned = -1;

struct Arrow {
    int source = 0;  // Green index
    int target = 0;
    int degree = kDegreeUnassigned;
    int cycle = -1;  // owning cycle

    std::string id() const { return std::to_string(source) + "->" + std::to_string(target); }
    bool operator==(const Arrow&) const = default;
};

/// Cycle of the quiver at one tree vertex. `rotation` lists the member edge
/// indices in counter-clockwise order; the directed cycle runs against it
/// (each arrow goes from an edge to its rotation predecessor).
struct Cycle {
    std::vector<int> rotation;
    bool exceptional = false;
    std::vector<int> arrows;   // arrow indices; arrows[k] : rotation[(k+1)%r] -> rotation[k]
};

struct GradedQuiver {
    int e = 0;            // vertex set = Green indices 1..e
    int multiplicity = 1;
    std::vector<Arrow> arrows;
    std::vector<Cycle> cycles;
    std::optional<int> exceptional_cycle; // absent exactly when t = 1 and m = 1

    const Arrow* find_arrow(int source, int target) const;
    std::vector<int> cycles_at(int vertex) const;
    bool on_exceptional_cycle(int vertex) const;
    /// Arrow indices of a full turn of cycle c starting at `vertex`.
    std::vector<int> cycle_word_from(int c, int vertex) const;
    /// Sum of the arrow degrees of cycle c.
    long cycle_degree_sum(int c) const;
};

struct ZeroRelation {
    int first = -1;   // arrow index; path composes first then second
    int second = -1;
    bool operator==(const ZeroRelation&) const = default;
};

/// alpha^power_a = beta^power_b for the two full cycle words at `vertex`
/// (the exceptional word carries power m, the other power 1).
struct CycleEquality {
    int vertex = 0;
    int cycle_a = -1;
    int cycle_b = -1;
    int power_a = 1;
    int power_b = 1;
};

struct RelationSet {
    std::vector<ZeroRelation> zeros;
    std::vector<CycleEquality> equalities;
    /// e = 1, m > 1 only: the loop is nilpotent of this order (rho^{m+1} = 0).
    std::optional<int> loop_truncation;
};

std::pair<GradedQuiver, RelationSet> build_quiver(const BrauerTree& t, const GreenNumbering& n);

/// Green-walk grading in closed form: exceptional arrow i -> j gets
/// ((i-j-1) mod e) + 1; in every non-exceptional cycle the arrow from the
/// minimal to the maximal index gets m*e and the rest get 0.
GradedQuiver assign_degrees(GradedQuiver q, const GreenNumbering& n, int multiplicity);

struct DegreeCheckEntry {
    int arrow = -1;
    int degree = 0;
    int component_size = 0;
    bool ok = false;
};

struct DegreeCheckReport {
    std::vector<DegreeCheckEntry> entries;
    bool all_ok() const;
};

/// Asserts deg(exceptional arrow into S_j) = size of S_j's component.
DegreeCheckReport exceptional_degree_check(const GradedQuiver& q, const std::vector<Component>& comps);

/// Structural + degree equality (arrow identity by source/target).
bool quiver_equal(const GradedQuiver& a, const GradedQuiver& b);
bool relations_equal(const GradedQuiver& qa, const RelationSet& a,
                     const GradedQuiver& qb, const RelationSet& b);

std::string render_dot(const GradedQuiver& q, const GreenNumbering& n);
std::string render_json(const GradedQuiver& q, const GreenNumbering& n);
std::string render_latex(const GradedQuiver& q, const GreenNumbering& n);
std::string render_text(const GradedQuiver& q, const GreenNumbering& n);

} // namespace greengrade
