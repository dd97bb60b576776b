#pragma once

#include <vector>

#include "agc/curves.hpp"
#include "agc/linalg.hpp"

namespace agc {

/// Input for building a one-point evaluation code: an ordered set D of
/// distinct affine points and the pole order m of G = m * P_inf. The
/// strong condition 2g-2 < m < n must hold.
struct CodeConfig {
    Curve curve;
    std::vector<Point> points;
    int m = 0;
};

/// Column multipliers v making the dual evaluation matrix orthogonal to
/// the primary one: sum_i f(P_i) h(P_i) v_i = 0 for every f in L(m P_inf)
/// and h in L(m* P_inf), with m* = n + 2g - 2 - m. Found as a kernel
/// vector of the stacked bilinear constraints, all entries nonzero,
/// normalized so the first entry is 1. Throws MultiplierNotFound when no
/// such vector exists.
std::vector<FieldElement> dual_multipliers(const CodeConfig& config);

/// An evaluation code C(D, G) with G = m * P_inf, together with its dual
/// description in evaluation form: the parity check matrix has entry
/// (j, i) = h_j(P_i) * v_i, so its columns are the points of D embedded
/// in projective space P^(d+g-2).
class GoppaCode {
public:
    static GoppaCode build(const CodeConfig& config);

    int n() const { return n_; }
    int k() const { return k_; }
    int kstar() const { return kstar_; }
    int m() const { return m_; }
    int mstar() const { return mstar_; }
    int genus() const { return g_; }
    int d() const { return d_; }  // designed distance n - m
    int t() const { return t_; }  // floor((d-1)/2)

    const Curve& curve() const { return curve_; }
    const FieldPtr& field() const { return curve_.field(); }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<RRFunction>& basis() const { return basis_; }
    const std::vector<RRFunction>& dual_basis() const { return dual_basis_; }

    const Matrix& generator() const { return generator_; }
    const Matrix& parity() const { return parity_; }
    const std::vector<FieldElement>& multipliers() const { return multipliers_; }

    Divisor divisor_D() const;
    Divisor divisor_G() const;

    /// message^T * generator; message has length k.
    Vector encode(const Vector& message) const;

    /// Exact minimum weight by exhausting all q^k - 1 nonzero codewords.
    /// Refuses when q^k exceeds the budget.
    int true_min_distance(long long budget = 10'000'000) const;

private:
    GoppaCode(Curve curve, std::vector<Point> points, int m, Matrix generator, Matrix parity,
              std::vector<FieldElement> multipliers, std::vector<RRFunction> basis,
              std::vector<RRFunction> dual_basis);

    Curve curve_;
    std::vector<Point> points_;
    int n_, k_, kstar_, m_, mstar_, g_, d_, t_;
    Matrix generator_;
    Matrix parity_;
    std::vector<FieldElement> multipliers_;
    std::vector<RRFunction> basis_, dual_basis_;
};

/// Evaluation matrix of the functions at the points: entry (r, i) =
/// f_r(P_i).
Matrix evaluation_matrix(const std::vector<RRFunction>& funcs, const std::vector<Point>& points,
                         const FieldPtr& field);

}  // namespace agc
