#pragma once

#include "greengrade/tree.hpp"

#include <map>
#include <string>
#include <vector>

namespace greengrade {

/// Finite-dimensional algebra on an explicit basis with integer structure
/// constants; multiplication table mult[i][j] = sparse product vector.
struct FiniteBasisAlgebra {
    std::vector<std::string> basis_names;
    std::vector<long> degree;                      // grading of each basis element
    std::vector<std::vector<std::map<int, long>>> mult;

    int dim() const { return static_cast<int>(basis_names.size()); }
    std::map<int, long> product(const std::map<int, long>& x, const std::map<int, long>& y) const;
};

/// Basic Brauer line algebra with m = 1, rescaled grading (degrees 0/1).
/// Basis: idempotents e_1..e_e, backward arrows a_i : v_{i+1} -> v_i in
/// degree 0, forward arrows b_i : v_i -> v_{i+1} in degree 1, socles s_i.
FiniteBasisAlgebra line_algebra_rescaled(int e);

/// Degree-0 subalgebra of the above: idempotents and backward arrows with
/// all consecutive products zero.
FiniteBasisAlgebra line_a0(int e);

/// Trivial extension T(B) = B + B* with (x,f)(y,g) = (xy, xg + fy),
/// graded by B in degree 0 and B* in degree 1.
FiniteBasisAlgebra trivial_extension(const FiniteBasisAlgebra& B);

struct TrivExtReport {
    bool applicable = false;   // input is a Brauer line with m = 1
    bool isomorphism = false;  // full multiplication-table comparison passed
    bool graded = false;       // the map respects the gradings
    int dim_line = 0;
    int dim_trivext = 0;
    std::string detail;
    bool ok() const { return applicable && isomorphism && graded; }
};

/// Verifies a |-> (a,0), b_i |-> (0, a_i*) as a graded algebra isomorphism
/// A_Gamma (degrees divided by e) == T(A_0) for a Brauer line with m = 1.
/// Rejects other trees.
TrivExtReport trivial_extension_check(const BrauerTree& t);

} // namespace greengrade
