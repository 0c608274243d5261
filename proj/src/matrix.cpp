#include "srmdp/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace srmdp {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    e_.assign(rows_ * cols_, field_->zero());
}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] != o.e_[i]) return false;
    }
    return true;
}

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
    if (a.field().get() != b.field().get()) {
        throw MixedFields(std::string(op) + ": matrices over different fields");
    }
}

void require_shape(bool ok, const char* what) {
    if (!ok) throw ShapeMismatch(what);
}

}  // namespace

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "mat_add");
    require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "mat_add: shape mismatch");
    Matrix r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = add(a.at(i, j), b.at(i, j));
    }
    return r;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "mat_sub");
    require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "mat_sub: shape mismatch");
    Matrix r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = sub(a.at(i, j), b.at(i, j));
    }
    return r;
}

Matrix mat_neg(const Matrix& a) {
    Matrix r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = neg(a.at(i, j));
    }
    return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "mat_mul");
    require_shape(a.cols() == b.rows(), "mat_mul: inner dimensions differ");
    Matrix r(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldElement& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) = add(r.at(i, j), mul(aik, b.at(k, j)));
            }
        }
    }
    return r;
}

Matrix transpose(const Matrix& a) {
    Matrix r(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
    }
    return r;
}

bool is_zero(const Matrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.at(i, j).is_zero()) return false;
        }
    }
    return true;
}

Matrix submatrix(const Matrix& a, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
    for (std::size_t t = 0; t < rows.size(); ++t) {
        require_shape(rows[t] < a.rows() && (t == 0 || rows[t] > rows[t - 1]),
                      "submatrix: bad row selection");
    }
    for (std::size_t t = 0; t < cols.size(); ++t) {
        require_shape(cols[t] < a.cols() && (t == 0 || cols[t] > cols[t - 1]),
                      "submatrix: bad column selection");
    }
    Matrix r(a.field(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = a.at(rows[i], cols[j]);
    }
    return r;
}

FieldElement det(const Matrix& a) {
    require_shape(a.rows() == a.cols(), "det: matrix not square");
    const FieldPtr& f = a.field();
    const std::size_t n = a.rows();
    if (n == 0) return f->one();
    Matrix m = a;
    FieldElement d = f->one();
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m.at(piv, col).is_zero()) ++piv;
        if (piv == n) return f->zero();
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            negate = !negate;
        }
        const FieldElement& pivot = m.at(col, col);
        d = mul(d, pivot);
        if (col + 1 == n) break;
        const FieldElement pinv = inv(pivot);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            const FieldElement factor = mul(m.at(r, col), pinv);
            for (std::size_t j = col + 1; j < n; ++j) {
                if (m.at(col, j).is_zero()) continue;
                m.at(r, j) = sub(m.at(r, j), mul(factor, m.at(col, j)));
            }
        }
    }
    return negate ? neg(d) : d;
}

std::size_t rank(const Matrix& a) {
    Matrix m = a;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t pivrow = 0;
    for (std::size_t col = 0; col < nc && pivrow < nr; ++col) {
        std::size_t piv = pivrow;
        while (piv < nr && m.at(piv, col).is_zero()) ++piv;
        if (piv == nr) continue;
        if (piv != pivrow) {
            for (std::size_t j = col; j < nc; ++j) std::swap(m.at(piv, j), m.at(pivrow, j));
        }
        const FieldElement pinv = inv(m.at(pivrow, col));
        for (std::size_t r = pivrow + 1; r < nr; ++r) {
            if (m.at(r, col).is_zero()) continue;
            const FieldElement factor = mul(m.at(r, col), pinv);
            for (std::size_t j = col; j < nc; ++j) {
                if (m.at(pivrow, j).is_zero()) continue;
                m.at(r, j) = sub(m.at(r, j), mul(factor, m.at(pivrow, j)));
            }
        }
        ++pivrow;
    }
    return pivrow;
}

Matrix solve_left(const Matrix& M, const Matrix& R) {
    require_same_field(M, R, "solve_left");
    require_shape(M.cols() == R.cols(), "solve_left: M and R must have the same column count");
    const FieldPtr& f = M.field();
    const std::size_t q = M.rows();   // unknowns per row of X
    const std::size_t c = M.cols();   // equations per row of X
    const std::size_t rr = R.rows();  // rows of X

    // Transposed system: M^T X^T = R^T, Gauss-Jordan with multi-RHS.
    Matrix A = transpose(M);  // c x q
    Matrix B = transpose(R);  // c x rr
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, unknown)
    std::size_t pivrow = 0;
    for (std::size_t col = 0; col < q && pivrow < c; ++col) {
        std::size_t pr = pivrow;
        while (pr < c && A.at(pr, col).is_zero()) ++pr;
        if (pr == c) continue;
        if (pr != pivrow) {
            for (std::size_t j = 0; j < q; ++j) std::swap(A.at(pr, j), A.at(pivrow, j));
            for (std::size_t j = 0; j < rr; ++j) std::swap(B.at(pr, j), B.at(pivrow, j));
        }
        const FieldElement pinv = inv(A.at(pivrow, col));
        for (std::size_t j = col; j < q; ++j) A.at(pivrow, j) = mul(A.at(pivrow, j), pinv);
        for (std::size_t j = 0; j < rr; ++j) B.at(pivrow, j) = mul(B.at(pivrow, j), pinv);
        for (std::size_t r2 = 0; r2 < c; ++r2) {
            if (r2 == pivrow || A.at(r2, col).is_zero()) continue;
            const FieldElement factor = A.at(r2, col);
            for (std::size_t j = col; j < q; ++j) {
                if (A.at(pivrow, j).is_zero()) continue;
                A.at(r2, j) = sub(A.at(r2, j), mul(factor, A.at(pivrow, j)));
            }
            for (std::size_t j = 0; j < rr; ++j) {
                if (B.at(pivrow, j).is_zero()) continue;
                B.at(r2, j) = sub(B.at(r2, j), mul(factor, B.at(pivrow, j)));
            }
        }
        pivots.emplace_back(pivrow, col);
        ++pivrow;
    }
    for (std::size_t r2 = pivrow; r2 < c; ++r2) {
        for (std::size_t j = 0; j < rr; ++j) {
            if (!B.at(r2, j).is_zero()) {
                std::ostringstream os;
                os << "solve_left: inconsistent system (equation " << r2 + 1
                   << " has zero coefficients but nonzero right-hand side, X row " << j + 1 << ")";
                throw Inconsistent(os.str());
            }
        }
    }
    Matrix Xt(f, q, rr);  // free unknowns stay zero
    for (const auto& [prow, unk] : pivots) {
        for (std::size_t j = 0; j < rr; ++j) Xt.at(unk, j) = B.at(prow, j);
    }
    return transpose(Xt);
}

Matrix inverse(const Matrix& a) {
    require_shape(a.rows() == a.cols(), "inverse: matrix not square");
    if (rank(a) != a.rows()) throw Singular("inverse: matrix is singular");
    return solve_left(a, Matrix::identity(a.field(), a.rows()));
}

PermExpansion det_permutation_expansion(const Matrix& a, std::size_t order_limit) {
    require_shape(a.rows() == a.cols(), "det_permutation_expansion: matrix not square");
    const std::size_t n = a.rows();
    if (n > order_limit) {
        throw BudgetExceeded("det_permutation_expansion: order exceeds limit", BigInt(n),
                             BigInt(order_limit));
    }
    const FieldPtr& f = a.field();
    PermExpansion out;
    out.value = f->zero();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ++out.total_terms;
        FieldElement prod = f->one();
        bool zero_factor = false;
        for (std::size_t i = 0; i < n; ++i) {
            const FieldElement& e = a.at(i, perm[i]);
            if (e.is_zero()) {
                zero_factor = true;
                break;
            }
            prod = mul(prod, e);
        }
        if (zero_factor) continue;
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (perm[i] > perm[j]) ++inversions;
            }
        }
        const int sign = (inversions % 2 == 0) ? 1 : -1;
        out.value = add(out.value, sign > 0 ? prod : neg(prod));
        out.nonzero_terms.push_back(PermTerm{perm, sign, prod});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

PolyMatrix::PolyMatrix(std::vector<Matrix> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ShapeMismatch("PolyMatrix: needs at least one coefficient");
    for (const Matrix& m : coeffs_) {
        if (m.field().get() != coeffs_.front().field().get()) {
            throw MixedFields("PolyMatrix: coefficients over different fields");
        }
        if (m.rows() != coeffs_.front().rows() || m.cols() != coeffs_.front().cols()) {
            throw ShapeMismatch("PolyMatrix: coefficient shapes differ");
        }
    }
    // canonical form: drop trailing zero coefficients, keep at least one
    while (coeffs_.size() > 1 && is_zero(coeffs_.back())) coeffs_.pop_back();
    zero_ = Matrix(coeffs_.front().field(), rows(), cols());
}

const Matrix& PolyMatrix::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : zero_;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != o.coeffs_[i]) return false;
    }
    return true;
}

PolyMatrix poly_mat_add(const PolyMatrix& a, const PolyMatrix& b) {
    std::vector<Matrix> out;
    const std::size_t deg = std::max(a.degree(), b.degree());
    for (std::size_t i = 0; i <= deg; ++i) out.push_back(mat_add(a.coeff(i), b.coeff(i)));
    return PolyMatrix(std::move(out));
}

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    require_shape(a.cols() == b.rows(), "poly_mat_mul: inner dimensions differ");
    std::vector<Matrix> out;
    const std::size_t deg = a.degree() + b.degree();
    for (std::size_t i = 0; i <= deg; ++i) {
        Matrix c(a.field(), a.rows(), b.cols());
        for (std::size_t t = 0; t <= i; ++t) {
            if (t > a.degree() || i - t > b.degree()) continue;
            c = mat_add(c, mat_mul(a.coeff(t), b.coeff(i - t)));
        }
        out.push_back(std::move(c));
    }
    return PolyMatrix(std::move(out));
}

}  // namespace srmdp
