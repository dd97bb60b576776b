#include "agc/linalg.hpp"

#include <algorithm>

namespace agc {

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows_ < 0 || cols_ < 0) fail(errc::bad_config, "negative matrix dimension");
    a_.assign(static_cast<size_t>(rows_) * cols_, field_->zero());
}

Matrix Matrix::identity(FieldPtr field, int n) {
    Matrix m(std::move(field), n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, m.field()->one());
    return m;
}

void Matrix::set(int r, int c, const FieldElement& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        fail(errc::index_out_of_range, "matrix entry (" + std::to_string(r) + "," +
                                           std::to_string(c) + ")");
    if (v.field() != *field_) fail(errc::field_mismatch, "entry from a different field");
    a_[static_cast<size_t>(r) * cols_ + c] = v;
}

Vector Matrix::row(int r) const {
    Vector out;
    out.reserve(cols_);
    for (int c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

Vector Matrix::col(int c) const {
    Vector out;
    out.reserve(rows_);
    for (int r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

Matrix Matrix::transposed() const {
    Matrix m(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

RrefResult rref(const Matrix& a) {
    Matrix r = a;
    std::vector<int> pivots;
    int lead = 0;
    for (int c = 0; c < r.cols() && lead < r.rows(); ++c) {
        int pivot = -1;
        for (int i = lead; i < r.rows(); ++i) {
            if (!r.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead) {
            for (int j = 0; j < r.cols(); ++j) {
                FieldElement tmp = r.at(pivot, j);
                r.set(pivot, j, r.at(lead, j));
                r.set(lead, j, tmp);
            }
        }
        const FieldElement scale = r.at(lead, c).inv();
        for (int j = c; j < r.cols(); ++j) r.set(lead, j, scale * r.at(lead, j));
        for (int i = 0; i < r.rows(); ++i) {
            if (i == lead) continue;
            const FieldElement f = r.at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < r.cols(); ++j) r.set(i, j, r.at(i, j) - f * r.at(lead, j));
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

int rank(const Matrix& a) { return static_cast<int>(rref(a).pivots.size()); }

std::vector<Vector> kernel(const Matrix& a) {
    RrefResult rr = rref(a);
    const Matrix& r = rr.reduced;
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : rr.pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (int fc = 0; fc < a.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vector v(a.cols(), a.field()->zero());
        v[fc] = a.field()->one();
        for (size_t pr = 0; pr < rr.pivots.size(); ++pr) v[rr.pivots[pr]] = -r.at(static_cast<int>(pr), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (static_cast<int>(b.size()) != a.rows())
        fail(errc::length_mismatch, "rhs length != rows");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
        aug.set(r, a.cols(), b[r]);
    }
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
    Vector x(a.cols(), a.field()->zero());
    for (size_t pr = 0; pr < rr.pivots.size(); ++pr)
        x[rr.pivots[pr]] = rr.reduced.at(static_cast<int>(pr), a.cols());
    return x;
}

Matrix column_submatrix(const Matrix& a, std::span<const int> columns) {
    std::vector<int> sorted(columns.begin(), columns.end());
    std::sort(sorted.begin(), sorted.end());
    for (int c : sorted)
        if (c < 0 || c >= a.cols())
            fail(errc::index_out_of_range, "column index " + std::to_string(c));
    Matrix m(a.field(), a.rows(), static_cast<int>(sorted.size()));
    for (int j = 0; j < static_cast<int>(sorted.size()); ++j)
        for (int r = 0; r < a.rows(); ++r) m.set(r, j, a.at(r, sorted[j]));
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) fail(errc::length_mismatch, "inner dimensions differ");
    Matrix c(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            FieldElement s = a.field()->zero();
            for (int l = 0; l < a.cols(); ++l) s = s + a.at(i, l) * b.at(l, j);
            c.set(i, j, s);
        }
    }
    return c;
}

Vector matvec(const Matrix& a, const Vector& x) {
    if (static_cast<int>(x.size()) != a.cols()) fail(errc::length_mismatch, "vector length != cols");
    Vector y;
    y.reserve(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        FieldElement s = a.field()->zero();
        for (int j = 0; j < a.cols(); ++j) s = s + a.at(i, j) * x[j];
        y.push_back(s);
    }
    return y;
}

Vector vec_add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) fail(errc::length_mismatch, "vector lengths differ");
    Vector c;
    c.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) c.push_back(a[i] + b[i]);
    return c;
}

Vector vec_sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) fail(errc::length_mismatch, "vector lengths differ");
    Vector c;
    c.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) c.push_back(a[i] - b[i]);
    return c;
}

Vector vec_scale(const FieldElement& c, const Vector& a) {
    Vector out;
    out.reserve(a.size());
    for (const FieldElement& x : a) out.push_back(c * x);
    return out;
}

bool vec_is_zero(const Vector& a) {
    return std::all_of(a.begin(), a.end(), [](const FieldElement& x) { return x.is_zero(); });
}

int vec_weight(const Vector& a) {
    int w = 0;
    for (const FieldElement& x : a)
        if (!x.is_zero()) ++w;
    return w;
}

std::string vec_to_string(const Vector& a) {
    std::string s = "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i].index());
    }
    return s + "]";
}

}  // namespace agc
