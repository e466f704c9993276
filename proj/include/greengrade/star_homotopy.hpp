#pragma once

#include "greengrade/green_walk.hpp"
#include "greengrade/matrix.hpp"
#include "greengrade/quiver.hpp"
#include "greengrade/scalar.hpp"
#include "greengrade/tree.hpp"

#include <map>
#include <vector>

namespace greengrade {

/// Basis homomorphism between star projectives: P_source -> P_target sending
/// the top to layer `drop`. Admissible iff drop == source - target (mod e)
/// and 0 <= drop <= m*e; composition adds drops and dies beyond m*e.
struct StarHom {
    int source = 0;
    int target = 0;
    int drop = 0;
};

/// One projective occurrence inside a tilting summand. Layer d of the copy
/// sits in internal degree top_degree + d.
struct SummandTerm {
    int star_index = 0;
    int position = 0;        // homological degree
    long top_degree = 0;
};

/// Tilting summand for one edge: a stalk P_x at position 0 for delta = 1,
/// else the two-term complex with P_pred at position delta-2 and P_x at
/// delta-1. The differential is the maximal-rank (minimal positive drop)
/// map P_x -> P_pred; it decreases the homological position by one.
struct TiltingSummand {
    int edge = 0;
    std::vector<SummandTerm> terms;  // [0] = P_pred (or the stalk), [1] = P_x
    int diff_drop = 0;               // valid when terms.size() == 2

    bool is_stalk() const { return terms.size() == 1; }
};

struct GradedHomSpace {
    std::map<long, int> dim_by_degree; // positive dimensions only
    int total() const;
    long min_degree() const;           // throws when empty
    long min_positive_degree() const;  // throws when no positive part
};

/// Per-degree linear-algebra breakdown of one Hom computation, exposed for
/// the Euler-characteristic consistency checks.
struct HomDetail {
    struct Layer {
        long degree = 0;
        int dim_homotopies = 0;    // maps X_p -> Y_{p+1}
        int dim_components = 0;    // maps X_p -> Y_p
        int dim_antishift = 0;     // maps X_p -> Y_{p-1}
        int dim_chain = 0;         // solutions of the chain condition
        int rank_boundary = 0;     // null-homotopic maps
        int dim_hom = 0;           // reported = dim_chain - rank_boundary
        int ker_boundary = 0;      // homotopies with vanishing boundary
        int rank_chain_op = 0;     // rank of f -> f.d - d.f
    };
    std::vector<Layer> layers;
    GradedHomSpace space() const;
};

std::vector<TiltingSummand> build_tilting(const BrauerTree& t, const GreenNumbering& n);

GradedHomSpace hom_complex(const TiltingSummand& a, const TiltingSummand& b, int m, int e,
                           const Field& f = Field::rationals());

HomDetail hom_complex_detail(const TiltingSummand& a, const TiltingSummand& b, int m, int e,
                             const Field& f = Field::rationals());

/// Re-derives the graded quiver from minimal Hom degrees in the homotopy
/// category; this is the grading oracle that must agree with assign_degrees.
GradedQuiver derive_graded_quiver(const BrauerTree& t, const GreenNumbering& n,
                                  const std::vector<TiltingSummand>& summands,
                                  const Field& f = Field::rationals());

/// e x e matrix of total Hom dimensions, entry (i,j) = dim Hom(T_i, T_j).
ExactMatrix<mpz_class> hom_dimension_table(const std::vector<TiltingSummand>& summands, int m, int e,
                                           const Field& f = Field::rationals());

/// The case-by-case expected total of the dimension table (0 / 1 / m / 2 / m+1).
int expected_hom_dimension(const BrauerTree& t, const GreenNumbering& n, int i, int j);

} // namespace greengrade
