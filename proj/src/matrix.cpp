#include "greengrade/matrix.hpp"

namespace greengrade {

namespace {

LaurentPoly cofactor_det(const ExactMatrix<LaurentPoly>& M, std::vector<int>& cols, int row) {
    const int n = M.rows();
    if (row == n)
        return LaurentPoly(1);
    LaurentPoly det;
    int sign = 1;
    for (size_t k = 0; k < cols.size(); ++k) {
        int j = cols[k];
        if (!M.at(row, j).is_zero()) {
            cols.erase(cols.begin() + k);
            LaurentPoly minor = cofactor_det(M, cols, row + 1);
            cols.insert(cols.begin() + k, j);
            LaurentPoly term = M.at(row, j) * minor;
            det = (sign > 0) ? det + term : det - term;
        }
        sign = -sign;
    }
    return det;
}

// Fraction-free elimination over an integral domain. Divisions are exact.
template <typename T>
T bareiss_det(ExactMatrix<T> M, const T& one) {
    const int n = M.rows();
    if (n == 0)
        return one;
    T prev = one;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == T()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!(M.at(i, k) == T())) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0)
                return T(); // singular
            for (int j = 0; j < n; ++j)
                std::swap(M.at(k, j), M.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                T num = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                if constexpr (std::is_same_v<T, LaurentPoly>)
                    M.at(i, j) = num.divide_exact(prev);
                else
                    M.at(i, j) = num / prev;
            }
        prev = M.at(k, k);
    }
    T det = M.at(n - 1, n - 1);
    if (sign < 0)
        det = T() - det;
    return det;
}

} // namespace

LaurentPoly laurent_det_cofactor(const ExactMatrix<LaurentPoly>& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    std::vector<int> cols(M.cols());
    for (int j = 0; j < M.cols(); ++j)
        cols[j] = j;
    return cofactor_det(M, cols, 0);
}

LaurentPoly laurent_det(const ExactMatrix<LaurentPoly>& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    if (M.rows() <= 6)
        return laurent_det_cofactor(M);
    return bareiss_det<LaurentPoly>(M, LaurentPoly(1));
}

mpz_class int_det(const ExactMatrix<mpz_class>& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    return bareiss_det<mpz_class>(M, mpz_class(1));
}

LinearSolution solve_linear(const ExactMatrix<Scalar>& A, const std::vector<Scalar>& b) {
    const int m = A.rows(), n = A.cols();
    if (static_cast<int>(b.size()) != m)
        throw std::invalid_argument("solve_linear: rhs size mismatch");
    Field f = (m > 0 && n > 0) ? A.at(0, 0).field()
                               : (b.empty() ? Field::rationals() : b[0].field());

    // row-reduce the augmented matrix [A | b]
    ExactMatrix<Scalar> R(m, n + 1, Scalar::zero(f));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j)
            R.at(i, j) = A.at(i, j);
        R.at(i, n) = b[i];
    }

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (!R.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != r)
            for (int j = 0; j <= n; ++j)
                std::swap(R.at(p, j), R.at(r, j));
        Scalar inv = R.at(r, c).inverse();
        for (int j = c; j <= n; ++j)
            R.at(r, j) *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || R.at(i, c).is_zero())
                continue;
            Scalar factor = R.at(i, c);
            for (int j = c; j <= n; ++j)
                R.at(i, j) -= factor * R.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }

    LinearSolution sol;
    sol.rank = r;
    for (int i = r; i < m; ++i)
        if (!R.at(i, n).is_zero())
            return sol; // inconsistent
    sol.consistent = true;

    sol.particular.assign(n, Scalar::zero(f));
    for (int k = 0; k < r; ++k)
        sol.particular[pivot_col[k]] = R.at(k, n);

    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col)
        is_pivot[c] = true;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c])
            continue;
        std::vector<Scalar> v(n, Scalar::zero(f));
        v[c] = Scalar::one(f);
        for (int k = 0; k < r; ++k)
            v[pivot_col[k]] = -R.at(k, c);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

int matrix_rank(const ExactMatrix<Scalar>& A) {
    Field f = (A.rows() > 0 && A.cols() > 0) ? A.at(0, 0).field() : Field::rationals();
    std::vector<Scalar> zero(A.rows(), Scalar::zero(f));
    return solve_linear(A, zero).rank;
}

} // namespace greengrade
