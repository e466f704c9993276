#include "greengrade/cartan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace greengrade {

namespace {

// sum q^{start} + q^{start+step} + ... with `count` terms
LaurentPoly geometric(long start, long step, int count) {
    LaurentPoly f;
    for (int k = 0; k < count; ++k)
        f += LaurentPoly::q_power(start + static_cast<long>(k) * step);
    return f;
}

// the unique cycle containing both i and j, or -1
int common_cycle(const GradedQuiver& q, int i, int j) {
    for (size_t c = 0; c < q.cycles.size(); ++c) {
        const auto& rot = q.cycles[c].rotation;
        if (std::count(rot.begin(), rot.end(), i) && std::count(rot.begin(), rot.end(), j))
            return static_cast<int>(c);
    }
    return -1;
}

// degree of the partial path from i to j along cycle c (following arrows)
long partial_path_degree(const GradedQuiver& q, int c, int i, int j) {
    long deg = 0;
    int at = i;
    const auto word = q.cycle_word_from(c, i);
    for (int ai : word) {
        if (at == j)
            return deg;
        deg += q.arrows[ai].degree;
        at = q.arrows[ai].target;
    }
    if (at == j)
        throw std::logic_error("partial path closed a full turn");
    throw std::logic_error("cycle does not reach target vertex");
}

} // namespace

GradedCartanMatrix cartan_closed_form(const GradedQuiver& q) {
    const int e = q.e;
    const long m = q.multiplicity;
    GradedCartanMatrix C(e, e);
    for (int i = 1; i <= e; ++i)
        for (int j = 1; j <= e; ++j) {
            LaurentPoly& entry = C.at(i - 1, j - 1);
            if (i == j) {
                entry = q.on_exceptional_cycle(i)
                            ? geometric(0, e, static_cast<int>(m) + 1)
                            : LaurentPoly(1) + LaurentPoly::q_power(m * e);
                continue;
            }
            const int c = common_cycle(q, i, j);
            if (c < 0)
                continue; // zero
            if (q.cycles[c].exceptional)
                entry = (i > j) ? geometric(i - j, e, static_cast<int>(m))
                                : geometric(e - (j - i), e, static_cast<int>(m));
            else
                entry = (i > j) ? LaurentPoly(1) : LaurentPoly::q_power(m * e);
        }
    return C;
}

GradedCartanMatrix cartan_from_paths(const GradedQuiver& q, const RelationSet& r) {
    (void)r; // nonzero paths never cross cycles; the cycle structure carries everything
    const int e = q.e;
    const long m = q.multiplicity;
    GradedCartanMatrix C(e, e);
    const long exc_sum = q.exceptional_cycle ? q.cycle_degree_sum(*q.exceptional_cycle) : 0;
    for (int i = 1; i <= e; ++i)
        for (int j = 1; j <= e; ++j) {
            LaurentPoly& entry = C.at(i - 1, j - 1);
            if (i == j) {
                entry += LaurentPoly(1); // empty path
                if (q.on_exceptional_cycle(i))
                    for (long k = 1; k < m; ++k)
                        entry += LaurentPoly::q_power(k * exc_sum); // k full exceptional turns
                // the socle, one basis element: a full cycle word (exceptional
                // one to the m-th power); m*e only for the cycle-free e=1 case
                const auto cs = q.cycles_at(i);
                long socle_degree = m * static_cast<long>(e);
                if (!cs.empty())
                    socle_degree = q.cycles[cs[0]].exceptional ? m * q.cycle_degree_sum(cs[0])
                                                               : q.cycle_degree_sum(cs[0]);
                entry += LaurentPoly::q_power(socle_degree);
                continue;
            }
            const int c = common_cycle(q, i, j);
            if (c < 0)
                continue;
            const long base = partial_path_degree(q, c, i, j);
            if (q.cycles[c].exceptional)
                for (long k = 0; k < m; ++k)
                    entry += LaurentPoly::q_power(base + k * exc_sum);
            else
                entry += LaurentPoly::q_power(base);
        }
    return C;
}

LaurentPoly cartan_determinant(const GradedCartanMatrix& C) {
    return laurent_det(C);
}

LaurentPoly cartan_determinant_closed_form(int m, int e) {
    LaurentPoly f;
    for (long k = 0; k <= static_cast<long>(m) * e; k += e)
        f += LaurentPoly::q_power(k);
    return f;
}

ExactMatrix<mpz_class> constant_term_matrix(const GradedCartanMatrix& C) {
    ExactMatrix<mpz_class> M(C.rows(), C.cols(), 0);
    for (int i = 0; i < C.rows(); ++i)
        for (int j = 0; j < C.cols(); ++j)
            M.at(i, j) = C.at(i, j).coeff(0);
    return M;
}

ExactMatrix<mpz_class> evaluate_at_one(const GradedCartanMatrix& C) {
    ExactMatrix<mpz_class> M(C.rows(), C.cols(), 0);
    for (int i = 0; i < C.rows(); ++i)
        for (int j = 0; j < C.cols(); ++j)
            M.at(i, j) = C.at(i, j).eval_one();
    return M;
}

std::string render_matrix_text(const GradedCartanMatrix& C) {
    std::ostringstream os;
    for (int i = 0; i < C.rows(); ++i) {
        os << "[";
        for (int j = 0; j < C.cols(); ++j)
            os << (j ? ", " : " ") << C.at(i, j).str();
        os << " ]\n";
    }
    return os.str();
}

std::string render_matrix_latex(const GradedCartanMatrix& C) {
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (int i = 0; i < C.rows(); ++i) {
        for (int j = 0; j < C.cols(); ++j)
            os << C.at(i, j).str() << (j + 1 < C.cols() ? " & " : "");
        os << (i + 1 < C.rows() ? " \\\\" : "") << "\n";
    }
    os << "\\end{pmatrix}\n";
    return os.str();
}

} // namespace greengrade
