#pragma once

#include "greengrade/a0.hpp"
#include "greengrade/quiver.hpp"

#include <gmpxx.h>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace greengrade {

/// Arrow id ("src->tgt" in Green indices) -> integer degree.
using DegreeFunction = std::map<std::string, long>;

/// Vertex shift n_i by Green index; acts by deg'(a) = deg(a) + n_src - n_tgt.
struct ShiftVector {
    std::vector<long> n; // [0] unused, indices 1..e
};

DegreeFunction degrees_of(const GradedQuiver& q);

DegreeFunction apply_shifts(const GradedQuiver& q, const DegreeFunction& d, const ShiftVector& s);

/// n_i = 1 + level(i); makes every radical degree strictly positive.
ShiftVector positive_shifts(const GradedQuiver& q, const A0Algebra& a);

/// Divides every degree by k; throws naming the first offending arrow.
DegreeFunction rescale(const DegreeFunction& d, long k);

DegreeFunction scale(const DegreeFunction& d, long k);

struct MoritaSolution {
    mpq_class scale = 1;         // d2 = scale * d1 shifted by n
    std::vector<long> n;         // [0] unused; normalized so n[1] = 0
};

/// Solves d2 = r * d1 + (n_src - n_tgt) over the quiver; r is found from
/// cycle-sum ratios when rescaling is allowed, else fixed to 1. Absence of
/// a solution is a value, not an error.
std::optional<MoritaSolution> morita_solve(const GradedQuiver& q, const DegreeFunction& d1,
                                           const DegreeFunction& d2, bool allow_rescale);

DegreeFunction parse_grading_json(const std::string& text);
std::string serialize_grading_json(const DegreeFunction& d);

} // namespace greengrade
