#ifndef SRMDP_MATRIX_HPP
#define SRMDP_MATRIX_HPP

#include <cassert>
#include <cstdint>
#include <vector>

#include "srmdp/field.hpp"

namespace srmdp {

// Dense matrix over one field; exact arithmetic throughout.
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);  // zero-filled
    static Matrix identity(const FieldPtr& field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return e_[r * cols_ + c];
    }
    const FieldElement& at(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return e_[r * cols_ + c];
    }

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

  private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> e_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_neg(const Matrix& a);
Matrix transpose(const Matrix& a);
bool is_zero(const Matrix& a);

// 0-based row/column selections, strictly increasing.
Matrix submatrix(const Matrix& a, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols);

FieldElement det(const Matrix& a);            // Gaussian elimination
std::size_t rank(const Matrix& a);
Matrix inverse(const Matrix& a);              // Singular if not invertible

// Least-structured solution of X * M = R: Gauss-Jordan on the transposed
// system, pivots chosen in increasing unknown order, free unknowns set to
// zero.  Throws Inconsistent when no solution exists.
Matrix solve_left(const Matrix& M, const Matrix& R);

// Exhaustive Leibniz expansion, for cross-checking det and classifying
// trivial minors.  A term is listed iff every factor is nonzero.
struct PermTerm {
    std::vector<std::size_t> perm;  // column of each row
    int sign;                       // +1 / -1
    FieldElement product;
};
struct PermExpansion {
    FieldElement value;             // equals det() by construction
    std::vector<PermTerm> nonzero_terms;
    std::uint64_t total_terms = 0;
};
PermExpansion det_permutation_expansion(const Matrix& a, std::size_t order_limit = 7);

// Polynomial matrix sum_i C_i z^i with constant shape.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::vector<Matrix> coeffs);  // at least one coefficient

    const FieldPtr& field() const { return coeffs_.front().field(); }
    std::size_t rows() const { return coeffs_.front().rows(); }
    std::size_t cols() const { return coeffs_.front().cols(); }
    std::size_t degree() const { return coeffs_.size() - 1; }
    // coefficient of z^i; zero matrix beyond the degree
    const Matrix& coeff(std::size_t i) const;
    const std::vector<Matrix>& coeffs() const { return coeffs_; }

    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

  private:
    std::vector<Matrix> coeffs_;
    Matrix zero_;
};

PolyMatrix poly_mat_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace srmdp

#endif
