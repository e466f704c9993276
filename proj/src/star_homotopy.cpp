#include "greengrade/star_homotopy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace greengrade {

namespace {

int mod_e(int x, int e) { return ((x % e) + e) % e; }

// minimal positive drop of a map P_src -> P_tgt (src != tgt allowed to
// coincide only through a full turn)
int minimal_positive_drop(int src, int tgt, int e) { return mod_e(src - tgt - 1, e) + 1; }

std::vector<int> admissible_drops(int src, int tgt, int m, int e) {
    std::vector<int> drops;
    for (int d = mod_e(src - tgt, e); d <= m * e; d += e)
        drops.push_back(d);
    return drops;
}

// basis map between two placed projective copies
struct BasisMap {
    int from_term;  // index into X.terms
    int to_term;    // index into Y.terms
    int drop;
    long degree;
};

std::vector<BasisMap> maps_with_shift(const TiltingSummand& X, const TiltingSummand& Y, int shift,
                                      int m, int e) {
    // all basis maps X_p -> Y_{p+shift}
    std::vector<BasisMap> out;
    for (size_t i = 0; i < X.terms.size(); ++i)
        for (size_t j = 0; j < Y.terms.size(); ++j) {
            if (Y.terms[j].position != X.terms[i].position + shift)
                continue;
            for (int d : admissible_drops(X.terms[i].star_index, Y.terms[j].star_index, m, e))
                out.push_back(BasisMap{static_cast<int>(i), static_cast<int>(j), d,
                                       Y.terms[j].top_degree + d - X.terms[i].top_degree});
        }
    return out;
}

// index of the basis map matching (from, to, drop), or -1
int find_map(const std::vector<BasisMap>& basis, int from, int to, int drop) {
    for (size_t k = 0; k < basis.size(); ++k)
        if (basis[k].from_term == from && basis[k].to_term == to && basis[k].drop == drop)
            return static_cast<int>(k);
    return -1;
}

struct PairContext {
    const TiltingSummand& X;
    const TiltingSummand& Y;
    int m, e;
    std::vector<BasisMap> S; // homotopies: X_p -> Y_{p+1}
    std::vector<BasisMap> C; // components: X_p -> Y_p
    std::vector<BasisMap> D; // X_p -> Y_{p-1}

    PairContext(const TiltingSummand& x, const TiltingSummand& y, int m_, int e_)
        : X(x), Y(y), m(m_), e(e_) {
        S = maps_with_shift(X, Y, +1, m, e);
        C = maps_with_shift(X, Y, 0, m, e);
        D = maps_with_shift(X, Y, -1, m, e);
    }

    // boundary S -> C: s |-> d_Y . s + s . d_X  (all differentials drop the
    // position by one and compose by adding drops)
    ExactMatrix<Scalar> boundary_matrix(const Field& f) const {
        ExactMatrix<Scalar> B(static_cast<int>(C.size()), static_cast<int>(S.size()),
                              Scalar::zero(f));
        for (size_t k = 0; k < S.size(); ++k) {
            const BasisMap& s = S[k];
            // d_Y . s : X_p -> Y_{p+1} -> Y_p
            if (!Y.is_stalk() && s.to_term == 1) {
                int total = s.drop + Y.diff_drop;
                if (total <= m * e) {
                    int c = find_map(C, s.from_term, 0, total);
                    if (c >= 0)
                        B.at(c, static_cast<int>(k)) += Scalar::one(f);
                }
            }
            // s . d_X : X_{p+1} -> X_p -> Y_{p+1}
            if (!X.is_stalk() && s.from_term == 0) {
                int total = X.diff_drop + s.drop;
                if (total <= m * e) {
                    int c = find_map(C, 1, s.to_term, total);
                    if (c >= 0)
                        B.at(c, static_cast<int>(k)) += Scalar::one(f);
                }
            }
        }
        return B;
    }

    // chain operator C -> D: f |-> f . d_X - d_Y . f
    ExactMatrix<Scalar> chain_matrix(const Field& f) const {
        ExactMatrix<Scalar> M(static_cast<int>(D.size()), static_cast<int>(C.size()),
                              Scalar::zero(f));
        for (size_t k = 0; k < C.size(); ++k) {
            const BasisMap& c = C[k];
            // f . d_X : X_{p+1} -> X_p -> Y_p
            if (!X.is_stalk() && c.from_term == 0) {
                int total = X.diff_drop + c.drop;
                if (total <= m * e) {
                    int dpos = find_map(D, 1, c.to_term, total);
                    if (dpos >= 0)
                        M.at(dpos, static_cast<int>(k)) += Scalar::one(f);
                }
            }
            // d_Y . f : X_p -> Y_p -> Y_{p-1}
            if (!Y.is_stalk() && c.to_term == 1) {
                int total = c.drop + Y.diff_drop;
                if (total <= m * e) {
                    int dpos = find_map(D, c.from_term, 0, total);
                    if (dpos >= 0)
                        M.at(dpos, static_cast<int>(k)) -= Scalar::one(f);
                }
            }
        }
        return M;
    }
};

// restrict a matrix to the columns/rows whose basis elements carry `degree`
template <typename Pred>
std::vector<int> select(const std::vector<BasisMap>& basis, Pred pred) {
    std::vector<int> idx;
    for (size_t k = 0; k < basis.size(); ++k)
        if (pred(basis[k]))
            idx.push_back(static_cast<int>(k));
    return idx;
}

ExactMatrix<Scalar> submatrix(const ExactMatrix<Scalar>& M, const std::vector<int>& rows,
                              const std::vector<int>& cols, const Field& f) {
    ExactMatrix<Scalar> R(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                          Scalar::zero(f));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            R.at(static_cast<int>(i), static_cast<int>(j)) = M.at(rows[i], cols[j]);
    return R;
}

int kernel_dim(const ExactMatrix<Scalar>& M, const Field& f) {
    std::vector<Scalar> zero(M.rows(), Scalar::zero(f));
    auto sol = solve_linear(M, zero);
    return static_cast<int>(sol.kernel.size());
}

} // namespace

int GradedHomSpace::total() const {
    int t = 0;
    for (const auto& [d, n] : dim_by_degree)
        t += n;
    return t;
}

long GradedHomSpace::min_degree() const {
    if (dim_by_degree.empty())
        throw std::logic_error("min degree of zero Hom space");
    return dim_by_degree.begin()->first;
}

long GradedHomSpace::min_positive_degree() const {
    for (const auto& [d, n] : dim_by_degree)
        if (d > 0)
            return d;
    throw std::logic_error("Hom space has no positive degree");
}

GradedHomSpace HomDetail::space() const {
    GradedHomSpace s;
    for (const auto& l : layers)
        if (l.dim_hom > 0)
            s.dim_by_degree[l.degree] = l.dim_hom;
    return s;
}

std::vector<TiltingSummand> build_tilting(const BrauerTree& t, const GreenNumbering& n) {
    const int e = n.e();
    const int m = t.multiplicity;
    std::vector<TiltingSummand> summands(e + 1);
    std::vector<long> sigma(e + 1, 0); // top degree of P_x inside T_x

    for (int x = 1; x <= e; ++x) {
        TiltingSummand& T = summands[x];
        T.edge = x;
        if (n.delta[x] == 1) {
            sigma[x] = 0;
            T.terms.push_back(SummandTerm{x, 0, 0});
        } else {
            const int pred = n.predecessor[x];
            const int drop = minimal_positive_drop(x, pred, e);
            const long pred_top = sigma[pred] + static_cast<long>(m) * e;
            sigma[x] = pred_top + drop;
            T.terms.push_back(SummandTerm{pred, n.delta[x] - 2, pred_top});
            T.terms.push_back(SummandTerm{x, n.delta[x] - 1, sigma[x]});
            T.diff_drop = drop;
        }
    }
    summands.erase(summands.begin()); // drop the unused slot 0
    return summands;
}

HomDetail hom_complex_detail(const TiltingSummand& a, const TiltingSummand& b, int m, int e,
                             const Field& f) {
    PairContext ctx(a, b, m, e);
    const auto B = ctx.boundary_matrix(f);
    const auto Ch = ctx.chain_matrix(f);

    std::set<long> degrees;
    for (const auto& bm : ctx.S)
        degrees.insert(bm.degree);
    for (const auto& bm : ctx.C)
        degrees.insert(bm.degree);
    for (const auto& bm : ctx.D)
        degrees.insert(bm.degree);

    HomDetail detail;
    for (long deg : degrees) {
        auto by_degree = [deg](const BasisMap& bm) { return bm.degree == deg; };
        const auto si = select(ctx.S, by_degree);
        const auto ci = select(ctx.C, by_degree);
        const auto di = select(ctx.D, by_degree);

        HomDetail::Layer layer;
        layer.degree = deg;
        layer.dim_homotopies = static_cast<int>(si.size());
        layer.dim_components = static_cast<int>(ci.size());
        layer.dim_antishift = static_cast<int>(di.size());

        const auto Bd = submatrix(B, ci, si, f);
        const auto Cd = submatrix(Ch, di, ci, f);
        layer.rank_boundary = static_cast<int>(si.size()) - kernel_dim(Bd, f);
        layer.ker_boundary = kernel_dim(Bd, f);
        layer.dim_chain = kernel_dim(Cd, f);
        layer.rank_chain_op = static_cast<int>(ci.size()) - layer.dim_chain;
        layer.dim_hom = layer.dim_chain - layer.rank_boundary;
        if (layer.dim_hom < 0)
            throw std::logic_error("null-homotopic maps escaped the chain space");
        detail.layers.push_back(layer);
    }
    return detail;
}

GradedHomSpace hom_complex(const TiltingSummand& a, const TiltingSummand& b, int m, int e,
                           const Field& f) {
    return hom_complex_detail(a, b, m, e, f).space();
}

GradedQuiver derive_graded_quiver(const BrauerTree& t, const GreenNumbering& n,
                                  const std::vector<TiltingSummand>& summands, const Field& f) {
    auto [q, rel] = build_quiver(t, n);
    (void)rel;
    const int m = t.multiplicity;
    const int e = n.e();
    for (auto& a : q.arrows) {
        const GradedHomSpace hom = hom_complex(summands[a.source - 1], summands[a.target - 1], m, e, f);
        a.degree = static_cast<int>(a.source == a.target ? hom.min_positive_degree()
                                                         : hom.min_degree());
    }
    return q;
}

ExactMatrix<mpz_class> hom_dimension_table(const std::vector<TiltingSummand>& summands, int m, int e,
                                           const Field& f) {
    ExactMatrix<mpz_class> table(e, e, 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
            table.at(i, j) = hom_complex(summands[i], summands[j], m, e, f).total();
    return table;
}

int expected_hom_dimension(const BrauerTree& t, const GreenNumbering& n, int i, int j) {
    const int m = t.multiplicity;
    if (i == j)
        return n.delta[i] == 1 ? m + 1 : 2;
    // shared tree vertex?
    const auto& [a1, a2] = t.edges.at(n.id_of[i]);
    const auto& [b1, b2] = t.edges.at(n.id_of[j]);
    std::string shared;
    for (const auto& u : {a1, a2})
        for (const auto& v : {b1, b2})
            if (u == v)
                shared = u;
    if (shared.empty())
        return 0;
    return shared == t.exceptional ? m : 1;
}

} // namespace greengrade
