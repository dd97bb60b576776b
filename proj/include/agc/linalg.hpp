#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agc/galois.hpp"

namespace agc {

using Vector = std::vector<FieldElement>;

/// Dense matrix over GF(q), immutable by convention once filled.
class Matrix {
public:
    Matrix(FieldPtr field, int rows, int cols);

    static Matrix identity(FieldPtr field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    FieldElement at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, const FieldElement& v);

    Vector row(int r) const;
    Vector col(int c) const;
    Matrix transposed() const;
    bool is_zero() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<FieldElement> a_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots;  // pivot column indices, ascending
};

/// Reduced row echelon form with deterministic pivoting (first nonzero
/// entry in column order).
RrefResult rref(const Matrix& a);

int rank(const Matrix& a);

/// Basis of the right null space; size cols - rank.
std::vector<Vector> kernel(const Matrix& a);

/// One solution of a x = b, or nullopt when b is outside the column span.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Columns of a selected by the index set, in ascending index order.
Matrix column_submatrix(const Matrix& a, std::span<const int> columns);

Matrix matmul(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, const Vector& x);

Vector vec_add(const Vector& a, const Vector& b);
Vector vec_sub(const Vector& a, const Vector& b);
Vector vec_scale(const FieldElement& c, const Vector& a);
bool vec_is_zero(const Vector& a);
int vec_weight(const Vector& a);  // number of nonzero positions
std::string vec_to_string(const Vector& a);

}  // namespace agc
