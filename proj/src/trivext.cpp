#include "greengrade/trivext.hpp"

#include "greengrade/green_walk.hpp"

#include <stdexcept>

namespace greengrade {

std::map<int, long> FiniteBasisAlgebra::product(const std::map<int, long>& x,
                                                const std::map<int, long>& y) const {
    std::map<int, long> out;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y)
            for (const auto& [k, ck] : mult[i][j]) {
                out[k] += ci * cj * ck;
                if (out[k] == 0)
                    out.erase(k);
            }
    return out;
}

namespace {

struct LineIndex {
    int e;
    int idem(int i) const { return i - 1; }                    // e_i, 1..e
    int back(int i) const { return e + (i - 1); }              // a_i : v_{i+1} -> v_i, 1..e-1
    int fwd(int i) const { return e + (e - 1) + (i - 1); }     // b_i : v_i -> v_{i+1}, 1..e-1
    int socle(int i) const { return e + 2 * (e - 1) + (i - 1); } // s_i, 1..e
    int dim() const { return 2 * e + 2 * (e - 1); }
};

// source/target vertices of each basis path of the line algebra
struct PathEnds {
    int src, tgt;
};

PathEnds ends_of(const LineIndex& L, int k) {
    if (k < L.e)
        return {k + 1, k + 1};
    if (k < L.e + (L.e - 1)) {
        int i = k - L.e + 1;
        return {i + 1, i}; // a_i
    }
    if (k < L.e + 2 * (L.e - 1)) {
        int i = k - L.e - (L.e - 1) + 1;
        return {i, i + 1}; // b_i
    }
    int i = k - L.e - 2 * (L.e - 1) + 1;
    return {i, i}; // s_i
}

} // namespace

FiniteBasisAlgebra line_algebra_rescaled(int e) {
    if (e < 1)
        throw std::invalid_argument("line algebra needs e >= 1");
    LineIndex L{e};
    FiniteBasisAlgebra A;
    A.basis_names.resize(L.dim());
    A.degree.resize(L.dim());
    for (int i = 1; i <= e; ++i) {
        A.basis_names[L.idem(i)] = "e" + std::to_string(i);
        A.degree[L.idem(i)] = 0;
        A.basis_names[L.socle(i)] = "s" + std::to_string(i);
        A.degree[L.socle(i)] = 1;
    }
    for (int i = 1; i < e; ++i) {
        A.basis_names[L.back(i)] = "a" + std::to_string(i);
        A.degree[L.back(i)] = 0;
        A.basis_names[L.fwd(i)] = "b" + std::to_string(i);
        A.degree[L.fwd(i)] = 1;
    }

    A.mult.assign(L.dim(), std::vector<std::map<int, long>>(L.dim()));
    auto set = [&](int x, int y, int z) { A.mult[x][y][z] = 1; };

    for (int x = 0; x < L.dim(); ++x) {
        PathEnds px = ends_of(L, x);
        // idempotent actions
        set(L.idem(px.src), x, x);
        if (x != L.idem(px.src) || px.src != px.tgt)
            set(x, L.idem(px.tgt), x);
    }
    // undo the double-set for idempotents e_i * e_i = e_i
    for (int i = 1; i <= e; ++i)
        A.mult[L.idem(i)][L.idem(i)] = {{L.idem(i), 1}};

    // arrow products: a_i b_i = s_{i+1}, b_i a_i = s_i; everything else
    // composable is a zero relation or falls into the socle annihilator
    for (int i = 1; i < e; ++i) {
        A.mult[L.back(i)][L.fwd(i)][L.socle(i + 1)] = 1;
        A.mult[L.fwd(i)][L.back(i)][L.socle(i)] = 1;
    }
    return A;
}

FiniteBasisAlgebra line_a0(int e) {
    if (e < 1)
        throw std::invalid_argument("line A0 needs e >= 1");
    FiniteBasisAlgebra A;
    const int dim = e + (e - 1);
    A.basis_names.resize(dim);
    A.degree.assign(dim, 0);
    for (int i = 1; i <= e; ++i)
        A.basis_names[i - 1] = "v" + std::to_string(i);
    for (int i = 1; i < e; ++i)
        A.basis_names[e + i - 1] = "a" + std::to_string(i);

    A.mult.assign(dim, std::vector<std::map<int, long>>(dim));
    for (int i = 1; i <= e; ++i)
        A.mult[i - 1][i - 1] = {{i - 1, 1}};
    for (int i = 1; i < e; ++i) {
        const int a = e + i - 1;
        // a_i : v_{i+1} -> v_i ; e_{i+1} a_i = a_i = a_i e_i ; a's compose to zero
        A.mult[i][a] = {{a, 1}};      // e_{i+1} * a_i
        A.mult[a][i - 1] = {{a, 1}};  // a_i * e_i
    }
    return A;
}

FiniteBasisAlgebra trivial_extension(const FiniteBasisAlgebra& B) {
    const int n = B.dim();
    FiniteBasisAlgebra T;
    T.basis_names.resize(2 * n);
    T.degree.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        T.basis_names[i] = B.basis_names[i];
        T.degree[i] = 0;
        T.basis_names[n + i] = B.basis_names[i] + "*";
        T.degree[n + i] = 1;
    }
    T.mult.assign(2 * n, std::vector<std::map<int, long>>(2 * n));
    // (x,0)(y,0) = (xy, 0)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (const auto& [k, c] : B.mult[x][y])
                T.mult[x][y][k] = c;
    // (x,0)(0,u*) = (0, x.u*) with (x.u*)(z) = u*(z x): coefficient of u in z*x
    for (int x = 0; x < n; ++x)
        for (int u = 0; u < n; ++u)
            for (int z = 0; z < n; ++z) {
                auto it = B.mult[z][x].find(u);
                if (it != B.mult[z][x].end() && it->second != 0)
                    T.mult[x][n + u][n + z] += it->second;
            }
    // (0,u*)(y,0) = (0, u*.y) with (u*.y)(z) = u*(y z)
    for (int u = 0; u < n; ++u)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto it = B.mult[y][z].find(u);
                if (it != B.mult[y][z].end() && it->second != 0)
                    T.mult[n + u][y][n + z] += it->second;
            }
    // (0,f)(0,g) = 0
    return T;
}

TrivExtReport trivial_extension_check(const BrauerTree& t) {
    TrivExtReport rep;
    // a line with the exceptional vertex at an end: every vertex has <= 2
    // edges and the exceptional one exactly 1
    bool is_line = true;
    for (const auto& [v, rot] : t.rotation)
        if (rot.size() > 2)
            is_line = false;
    if (!is_line || t.multiplicity != 1 || t.rotation.at(t.exceptional).size() != 1) {
        rep.detail = "input is not a Brauer line with m = 1 and exceptional end vertex";
        return rep;
    }
    rep.applicable = true;

    const int e = t.e();
    FiniteBasisAlgebra A = line_algebra_rescaled(e);
    FiniteBasisAlgebra B = line_a0(e);
    FiniteBasisAlgebra T = trivial_extension(B);
    rep.dim_line = A.dim();
    rep.dim_trivext = T.dim();
    if (A.dim() != T.dim()) {
        rep.detail = "dimension mismatch";
        return rep;
    }

    // phi: e_i -> (v_i, 0); a_i -> (a_i, 0); b_i -> (0, a_i*); s_i -> images of b a / a b
    LineIndex L{e};
    const int n = B.dim();
    std::vector<int> phi(A.dim(), -1);
    for (int i = 1; i <= e; ++i)
        phi[L.idem(i)] = i - 1;
    for (int i = 1; i < e; ++i) {
        phi[L.back(i)] = e + i - 1;
        phi[L.fwd(i)] = n + (e + i - 1); // (0, a_i*)
    }
    // socle images: s_i = b_i a_i for i < e, s_e = a_{e-1} b_{e-1};
    // under phi these come out as dual idempotents (0, v_i*)
    for (int i = 1; i <= e; ++i)
        phi[L.socle(i)] = n + (i - 1);

    rep.graded = true;
    for (int x = 0; x < A.dim(); ++x)
        if (A.degree[x] != T.degree[phi[x]])
            rep.graded = false;

    // full multiplication table comparison
    rep.isomorphism = true;
    for (int x = 0; x < A.dim() && rep.isomorphism; ++x)
        for (int y = 0; y < A.dim() && rep.isomorphism; ++y) {
            std::map<int, long> lhs; // phi(x*y)
            for (const auto& [k, c] : A.mult[x][y])
                lhs[phi[k]] += c;
            std::map<int, long> rhs = T.product({{phi[x], 1}}, {{phi[y], 1}});
            if (lhs != rhs) {
                rep.isomorphism = false;
                rep.detail = "product mismatch at " + A.basis_names[x] + " * " + A.basis_names[y];
            }
        }

    // phi must be a bijection on basis elements
    std::vector<bool> hit(T.dim(), false);
    for (int x = 0; x < A.dim(); ++x) {
        if (phi[x] < 0 || hit[phi[x]]) {
            rep.isomorphism = false;
            rep.detail = "phi is not a basis bijection";
        } else {
            hit[phi[x]] = true;
        }
    }
    if (rep.detail.empty())
        rep.detail = "T(A0) = A0 + A0* matches the rescaled line algebra";
    return rep;
}

} // namespace greengrade
