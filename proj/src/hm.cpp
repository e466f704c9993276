#include "greengrade/hm.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace greengrade {

namespace {

void require_same_m(const HmElement& x, const HmElement& y) {
    if (x.m() != y.m())
        throw std::invalid_argument("H_m elements of different m");
}

// truncated polynomial product of coefficient vectors indexed 1..m
std::vector<Scalar> poly_mul(const std::vector<Scalar>& f, const std::vector<Scalar>& g, int m,
                             Field fld) {
    std::vector<Scalar> out(m, Scalar::zero(fld));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; i + j <= m; ++j)
            out[i + j - 1] += f[i - 1] * g[j - 1];
    // degree-(i+j) terms beyond m vanish in k[x]/(x^{m+1})
    return out;
}

void enumerate_compositions(int l, int parts, std::vector<int>& current,
                            const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        if (l >= 1) {
            current.push_back(l);
            emit(current);
            current.pop_back();
        }
        return;
    }
    for (int k = 1; l - k >= parts - 1; ++k) {
        current.push_back(k);
        enumerate_compositions(l - k, parts - 1, current, emit);
        current.pop_back();
    }
}

} // namespace

std::string HmElement::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < m(); ++i)
        os << (i ? "," : "") << a[i].str();
    os << ")";
    return os.str();
}

HmElement hm_element(std::vector<Scalar> coords) {
    if (coords.empty())
        throw std::invalid_argument("H_m element needs m >= 1 coordinates");
    if (coords[0].is_zero())
        throw std::invalid_argument("first coordinate of an H_m element must be nonzero");
    return HmElement{std::move(coords)};
}

HmElement hm_identity(int m, Field f) {
    if (m < 1)
        throw std::invalid_argument("H_m needs m >= 1");
    std::vector<Scalar> c(m, Scalar::zero(f));
    c[0] = Scalar::one(f);
    return HmElement{std::move(c)};
}

HmElement hm_mul(const HmElement& b, const HmElement& a) {
    require_same_m(a, b);
    const int m = a.m();
    const Field fld = a.field();
    std::vector<Scalar> out(m, Scalar::zero(fld));
    for (int l = 1; l <= m; ++l) {
        Scalar coord = Scalar::zero(fld);
        for (int i = 1; i <= l; ++i) {
            Scalar inner = Scalar::zero(fld);
            std::vector<int> current;
            enumerate_compositions(l, i, current, [&](const std::vector<int>& ks) {
                Scalar prod = Scalar::one(fld);
                for (int k : ks)
                    prod *= b.a[k - 1];
                inner += prod;
            });
            coord += a.a[i - 1] * inner;
        }
        out[l - 1] = coord;
    }
    return hm_element(std::move(out));
}

HmElement hm_inv(const HmElement& a) {
    const int m = a.m();
    const Field fld = a.field();
    // compositional inverse g with a(g(x)) = x, solved degree by degree
    std::vector<Scalar> g(m, Scalar::zero(fld));
    g[0] = a.a[0].inverse();
    for (int l = 2; l <= m; ++l) {
        // coefficient of x^l in a(g(x)) with the partial g (g_l still 0);
        // the full coefficient is it plus a_1 g_l, and must vanish
        std::vector<Scalar> powers = g; // g^1
        Scalar coef = Scalar::zero(fld);
        for (int i = 2; i <= l; ++i) {
            powers = poly_mul(powers, g, m, fld);
            coef += a.a[i - 1] * powers[l - 1];
        }
        g[l - 1] = -(coef * a.a[0].inverse());
    }
    return hm_element(std::move(g));
}

TruncatedPolyMap hm_oracle_compose(const TruncatedPolyMap& f, const TruncatedPolyMap& g) {
    require_same_m(f, g);
    const int m = f.m();
    const Field fld = f.field();
    // f(g(x)) by Horner-free substitution: sum f_j g(x)^j
    std::vector<Scalar> out(m, Scalar::zero(fld));
    std::vector<Scalar> gpow = g.a; // g^1
    for (int j = 1; j <= m; ++j) {
        for (int d = 1; d <= m; ++d)
            out[d - 1] += f.a[j - 1] * gpow[d - 1];
        if (j < m)
            gpow = poly_mul(gpow, g.a, m, fld);
    }
    return hm_element(std::move(out));
}

HmDecomposition hm_decompose(const HmElement& a) {
    const int m = a.m();
    const Field fld = a.field();
    // a = u * t with t = (a_1, 0, ..): (u*t)(x) = t(u(x)) = a_1 * u(x)
    std::vector<Scalar> t(m, Scalar::zero(fld));
    t[0] = a.a[0];
    std::vector<Scalar> u(m, Scalar::zero(fld));
    u[0] = Scalar::one(fld);
    const Scalar inv = a.a[0].inverse();
    for (int i = 2; i <= m; ++i)
        u[i - 1] = a.a[i - 1] * inv;
    return HmDecomposition{hm_element(std::move(t)), hm_element(std::move(u))};
}

HmDecomposition hm_decompose_torus_first(const HmElement& a) {
    const int m = a.m();
    const Field fld = a.field();
    // a = t * u: (t*u)(x) = u(t(x)) = u(a_1 x): coordinate i is u_i a_1^i
    std::vector<Scalar> t(m, Scalar::zero(fld));
    t[0] = a.a[0];
    std::vector<Scalar> u(m, Scalar::zero(fld));
    u[0] = Scalar::one(fld);
    Scalar p = a.a[0]; // a_1^i
    for (int i = 2; i <= m; ++i) {
        p *= a.a[0];
        u[i - 1] = a.a[i - 1] * p.inverse();
    }
    return HmDecomposition{hm_element(std::move(t)), hm_element(std::move(u))};
}

} // namespace greengrade
