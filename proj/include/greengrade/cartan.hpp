#pragma once

#include "greengrade/laurent.hpp"
#include "greengrade/matrix.hpp"
#include "greengrade/quiver.hpp"

namespace greengrade {

/// Entry c_ij counts the graded occurrences of S_i in P_j, equivalently the
/// degrees of the nonzero paths from i to j. Rows and columns are indexed by
/// Green indices (0-based storage for index k+1).
using GradedCartanMatrix = ExactMatrix<LaurentPoly>;

/// Closed-form entries of the graded Cartan matrix for a Green-walk graded
/// quiver:  0 off-cycle; diagonal 1+q^e+...+q^{me} (exceptional) or 1+q^{me};
/// non-exceptional off-diagonal 1 (i>j) / q^{me} (i<j); exceptional
/// off-diagonal q^{i-j}+...+q^{i-j+(m-1)e} (i>j) / q^{e-(j-i)}+...+q^{me-(j-i)} (i<j).
GradedCartanMatrix cartan_closed_form(const GradedQuiver& q);

/// Independent path-enumeration route: collect q^{degree} over the nonzero
/// paths read off the cycle structure and the assigned arrow degrees.
GradedCartanMatrix cartan_from_paths(const GradedQuiver& q, const RelationSet& r);

LaurentPoly cartan_determinant(const GradedCartanMatrix& C);

/// 1 + q^e + q^{2e} + ... + q^{m e^2}.
LaurentPoly cartan_determinant_closed_form(int m, int e);

/// Constant-term matrix C(0) as integers.
ExactMatrix<mpz_class> constant_term_matrix(const GradedCartanMatrix& C);

/// Evaluation C(1) as integers.
ExactMatrix<mpz_class> evaluate_at_one(const GradedCartanMatrix& C);

std::string render_matrix_text(const GradedCartanMatrix& C);
std::string render_matrix_latex(const GradedCartanMatrix& C);

} // namespace greengrade
