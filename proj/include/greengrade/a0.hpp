#pragma once

#include "greengrade/matrix.hpp"
#include "greengrade/quiver.hpp"

#include <map>
#include <vector>

namespace greengrade {

struct A0Arrow {
    int source = 0;
    int target = 0;
    int quiver_arrow = -1; // index in the originating quiver, -1 after recovery round-trips
    bool operator==(const A0Arrow& o) const { return source == o.source && target == o.target; }
};

/// One component of A_0: a directed rooted tree on Green indices with arrows
/// pointing from higher levels to lower, root at level 0.
struct A0Component {
    int root = 0;
    std::vector<int> vertices;               // level order: root, then by (level, index)
    std::vector<A0Arrow> arrows;
    std::map<int, int> level;                // vertex -> level
    std::vector<std::pair<A0Arrow, A0Arrow>> relations; // (first, second) with first.second = 0

    int max_level() const;
};

struct A0Algebra {
    int e = 0;
    int multiplicity = 1;
    std::vector<A0Component> components;     // ccw cyclic order of the roots
};

/// Degree-0 part of a Green-walk graded quiver.
A0Algebra extract_a0(const GradedQuiver& q, const RelationSet& r);

/// Level-by-level reconstruction of the full quiver and relations from A_0
/// plus the cyclic order of its components.
std::pair<GradedQuiver, RelationSet> recover_quiver(const A0Algebra& a);

/// Cartan matrix of A_0 in Green-index order (path counts of the monomial
/// components); lower triangular with unit diagonal and determinant 1.
ExactMatrix<mpz_class> a0_cartan(const A0Algebra& a);

/// Exact global dimension via iterated projective covers of the simples.
int a0_global_dimension(const A0Algebra& a);

/// The quasi-hereditary partial order: S_j < S_i iff a directed path
/// v_j -> v_i exists inside one component. Each returned pair (j, i)
/// states S_j < S_i.
std::vector<std::pair<int, int>> qh_order(const A0Algebra& a);

/// Vertices of every component in level order (the order making the Cartan
/// matrix visibly lower triangular).
std::vector<int> level_order(const A0Algebra& a);

} // namespace greengrade
