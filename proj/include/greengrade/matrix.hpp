#pragma once

#include "greengrade/laurent.hpp"
#include "greengrade/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace greengrade {

/// Dense matrix over an exact entry type (Scalar, LaurentPoly, mpz_class).
template <typename T>
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols, T fill = T())
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return a_[index(i, j)]; }
    const T& at(int i, int j) const { return a_[index(i, j)]; }

    bool operator==(const ExactMatrix&) const = default;

private:
    size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("matrix index");
        return static_cast<size_t>(i) * cols_ + j;
    }
    int rows_, cols_;
    std::vector<T> a_;
};

/// Exact determinant of a Laurent-polynomial matrix. Cofactor expansion for
/// small sizes, fraction-free elimination (Bareiss) above.
LaurentPoly laurent_det(const ExactMatrix<LaurentPoly>& M);

/// Plain cofactor expansion, kept as an independent oracle for laurent_det.
LaurentPoly laurent_det_cofactor(const ExactMatrix<LaurentPoly>& M);

/// Exact integer determinant (Bareiss).
mpz_class int_det(const ExactMatrix<mpz_class>& M);

/// Full description of the solution set of A x = b over an exact field.
struct LinearSolution {
    bool consistent = false;
    std::vector<Scalar> particular;             // one solution, when consistent
    std::vector<std::vector<Scalar>> kernel;    // basis of the null space
    int rank = 0;
};

LinearSolution solve_linear(const ExactMatrix<Scalar>& A, const std::vector<Scalar>& b);

/// Rank over the entry field.
int matrix_rank(const ExactMatrix<Scalar>& A);

} // namespace greengrade
