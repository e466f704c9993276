#pragma once

#include "greengrade/scalar.hpp"

#include <utility>
#include <vector>

namespace greengrade {

/// Element of the group H_m: an m-tuple (a_1,...,a_m) with a_1 != 0 under
/// the substitution product. Equivalently the automorphism
/// x |-> a_1 x + ... + a_m x^m of k[x]/(x^{m+1}).
struct HmElement {
    std::vector<Scalar> a; // a[0] = a_1

    int m() const { return static_cast<int>(a.size()); }
    Field field() const { return a.at(0).field(); }
    bool operator==(const HmElement& o) const { return a == o.a; }
    std::string str() const;
};

HmElement hm_element(std::vector<Scalar> coords);
HmElement hm_identity(int m, Field f = Field::rationals());

/// The substitution product b*a: coordinate l is
/// sum_i a_i * sum_{k_1+...+k_i = l} b_{k_1}...b_{k_i}, i.e. the tuple of
/// a(b(x)) truncated at degree m. Implemented literally over ordered
/// compositions of l; the polynomial route below is the independent oracle.
HmElement hm_mul(const HmElement& b, const HmElement& a);

HmElement hm_inv(const HmElement& a);

using TruncatedPolyMap = HmElement;

/// Composition of truncated polynomial maps: (f after g)(x) = f(g(x))
/// truncated at degree m, computed by plain polynomial substitution.
/// Fixed correspondence with the tuple product: f(g(x)) = hm_mul(g, f).
TruncatedPolyMap hm_oracle_compose(const TruncatedPolyMap& f, const TruncatedPolyMap& g);

/// a = unipotent * torus with torus = (a_1, 0, ..., 0) in K and the
/// unipotent factor in L (first coordinate 1); both factors are unique.
struct HmDecomposition {
    HmElement torus;
    HmElement unipotent;
};

HmDecomposition hm_decompose(const HmElement& a);

/// The complementary order a = torus * unipotent.
HmDecomposition hm_decompose_torus_first(const HmElement& a);

} // namespace greengrade
