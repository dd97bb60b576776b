#include "agc/agcode.hpp"

#include <algorithm>
#include <set>

namespace agc {

namespace {

void validate_points(const CodeConfig& config) {
    const FieldPtr& field = config.curve.field();
    std::set<std::pair<int, int>> seen;
    for (const Point& p : config.points) {
        if (p.is_infinity())
            fail(errc::bad_config, "D must consist of affine points");
        if (p.x().field() != *field || p.y().field() != *field)
            fail(errc::field_mismatch, "point coordinates from a different field");
        if (!config.curve.on_curve(p))
            fail(errc::bad_config, "point (" + std::to_string(p.x().index()) + "," +
                                       std::to_string(p.y().index()) + ") is not on the curve");
        if (!seen.insert({p.x().index(), p.y().index()}).second)
            fail(errc::duplicate_points, "point (" + std::to_string(p.x().index()) + "," +
                                             std::to_string(p.y().index()) + ") repeats in D");
    }
}

void validate_sag(const CodeConfig& config) {
    const int n = static_cast<int>(config.points.size());
    const int g = config.curve.genus();
    if (config.m < 0) fail(errc::bad_config, "m must be >= 0");
    if (!(2 * g - 2 < config.m && config.m < n))
        fail(errc::not_sag, "need 2g-2 < m < n; got g = " + std::to_string(g) +
                                ", m = " + std::to_string(config.m) +
                                ", n = " + std::to_string(n));
}

}  // namespace

Matrix evaluation_matrix(const std::vector<RRFunction>& funcs, const std::vector<Point>& points,
                         const FieldPtr& field) {
    Matrix m(field, static_cast<int>(funcs.size()), static_cast<int>(points.size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.set(r, c, evaluate(funcs[r], points[c]));
    return m;
}

std::vector<FieldElement> dual_multipliers(const CodeConfig& config) {
    validate_points(config);
    validate_sag(config);
    const FieldPtr& field = config.curve.field();
    const int n = static_cast<int>(config.points.size());
    const int g = config.curve.genus();
    const int mstar = n + 2 * g - 2 - config.m;

    const std::vector<RRFunction> basis = config.curve.rr_basis(config.m);
    const std::vector<RRFunction> dual_basis =
        mstar >= 0 ? config.curve.rr_basis(mstar) : std::vector<RRFunction>{};

    // Degenerate dual (k* = 0): no constraints; any all-nonzero vector
    // works, all-ones is the canonical choice.
    if (dual_basis.empty()) return std::vector<FieldElement>(n, field->one());

    // Stacked bilinear constraints: one row per (f, h) pair.
    Matrix constraints(field, static_cast<int>(basis.size() * dual_basis.size()), n);
    int r = 0;
    for (const RRFunction& f : basis) {
        for (const RRFunction& h : dual_basis) {
            for (int i = 0; i < n; ++i)
                constraints.set(r, i,
                                evaluate(f, config.points[i]) * evaluate(h, config.points[i]));
            ++r;
        }
    }

    const std::vector<Vector> ker = kernel(constraints);
    if (ker.empty())
        fail(errc::multiplier_not_found, "constraint system has trivial kernel");

    const auto all_nonzero = [](const Vector& v) {
        return std::all_of(v.begin(), v.end(),
                           [](const FieldElement& x) { return !x.is_zero(); });
    };
    const auto normalized = [](Vector v) {
        const FieldElement s = v[0].inv();
        for (FieldElement& x : v) x = s * x;
        return v;
    };

    // Search the kernel for a vector with no zero entry. Coefficient
    // tuples are enumerated with the leading nonzero coefficient fixed to
    // one, so each projective combination is tried once.
    const int dim = static_cast<int>(ker.size());
    const int q = field->q();
    long long tried = 0;
    const long long cap = 1'000'000;
    for (int lead = 0; lead < dim; ++lead) {
        long long combos = 1;
        for (int j = lead + 1; j < dim; ++j) {
            combos *= q;
            if (combos > cap) break;
        }
        for (long long code = 0; code < combos; ++code) {
            if (++tried > cap)
                fail(errc::multiplier_not_found,
                     "no all-nonzero kernel vector found within search cap");
            Vector v = ker[lead];
            long long c = code;
            for (int j = lead + 1; j < dim; ++j) {
                const int ci = static_cast<int>(c % q);
                c /= q;
                if (ci != 0) v = vec_add(v, vec_scale(field->element(ci), ker[j]));
            }
            if (all_nonzero(v)) return normalized(std::move(v));
        }
    }
    fail(errc::multiplier_not_found, "kernel has no vector with all entries nonzero");
}

GoppaCode GoppaCode::build(const CodeConfig& config) {
    validate_points(config);
    validate_sag(config);
    const FieldPtr& field = config.curve.field();
    const int n = static_cast<int>(config.points.size());
    const int g = config.curve.genus();
    const int mstar = n + 2 * g - 2 - config.m;

    const std::vector<RRFunction> basis = config.curve.rr_basis(config.m);
    const std::vector<RRFunction> dual_basis =
        mstar >= 0 ? config.curve.rr_basis(mstar) : std::vector<RRFunction>{};

    Matrix generator = evaluation_matrix(basis, config.points, field);
    const std::vector<FieldElement> multipliers = dual_multipliers(config);

    Matrix parity(field, static_cast<int>(dual_basis.size()), n);
    for (int j = 0; j < parity.rows(); ++j)
        for (int i = 0; i < n; ++i)
            parity.set(j, i, evaluate(dual_basis[j], config.points[i]) * multipliers[i]);

    GoppaCode code(config.curve, config.points, config.m, std::move(generator), std::move(parity),
                   multipliers, basis, dual_basis);

    // Establish the structural invariants before handing the code out.
    if (code.k_ != code.m_ + 1 - code.g_ || code.kstar_ != code.n_ - code.m_ + code.g_ - 1 ||
        code.k_ + code.kstar_ != code.n_)
        throw std::logic_error("code dimension bookkeeping violated");
    if (rank(code.generator_) != code.k_) throw std::logic_error("generator rank < k");
    if (rank(code.parity_) != code.kstar_) throw std::logic_error("parity rank < k*");
    if (!matmul(code.generator_, code.parity_.transposed()).is_zero())
        fail(errc::multiplier_not_found, "multipliers do not realize duality");
    for (int i = 0; i < code.n_; ++i)
        if (vec_is_zero(code.parity_.col(i)) && code.kstar_ > 0)
            throw std::logic_error("parity has a zero column");
    return code;
}

GoppaCode::GoppaCode(Curve curve, std::vector<Point> points, int m, Matrix generator,
                     Matrix parity, std::vector<FieldElement> multipliers,
                     std::vector<RRFunction> basis, std::vector<RRFunction> dual_basis)
    : curve_(std::move(curve)),
      points_(std::move(points)),
      n_(static_cast<int>(points_.size())),
      k_(generator.rows()),
      kstar_(parity.rows()),
      m_(m),
      mstar_(n_ + 2 * curve_.genus() - 2 - m),
      g_(curve_.genus()),
      d_(n_ - m),
      t_((n_ - m - 1) / 2),
      generator_(std::move(generator)),
      parity_(std::move(parity)),
      multipliers_(std::move(multipliers)),
      basis_(std::move(basis)),
      dual_basis_(std::move(dual_basis)) {}

Divisor GoppaCode::divisor_D() const {
    Divisor div;
    for (const Point& p : points_) div.add(p, 1);
    return div;
}

Divisor GoppaCode::divisor_G() const {
    Divisor div;
    div.add(Point::infinity(), m_);
    return div;
}

Vector GoppaCode::encode(const Vector& message) const {
    if (static_cast<int>(message.size()) != k_)
        fail(errc::length_mismatch, "message length " + std::to_string(message.size()) +
                                        " != k = " + std::to_string(k_));
    for (const FieldElement& x : message)
        if (x.field() != *field()) fail(errc::field_mismatch, "message from a different field");
    Vector word(n_, field()->zero());
    for (int r = 0; r < k_; ++r) {
        if (message[r].is_zero()) continue;
        for (int i = 0; i < n_; ++i) word[i] = word[i] + message[r] * generator_.at(r, i);
    }
    return word;
}

int GoppaCode::true_min_distance(long long budget) const {
    const int q = field()->q();
    long long total = 1;
    for (int i = 0; i < k_; ++i) {
        total *= q;
        if (total > budget)
            fail(errc::too_large_to_exhaust, "q^k = " + std::to_string(q) + "^" +
                                                 std::to_string(k_) + " exceeds budget " +
                                                 std::to_string(budget));
    }

    int best = n_ + 1;
    Vector message(k_, field()->zero());
    for (long long idx = 1; idx < total; ++idx) {
        long long c = idx;
        for (int i = 0; i < k_; ++i) {
            message[i] = field()->element(static_cast<int>(c % q));
            c /= q;
        }
        best = std::min(best, vec_weight(encode(message)));
    }
    return best;
}

}  // namespace agc
