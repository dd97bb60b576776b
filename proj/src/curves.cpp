#include "agc/curves.hpp"

#include <algorithm>

namespace agc {

const char* to_string(CurveFamily f) {
    switch (f) {
        case CurveFamily::rational: return "rational";
        case CurveFamily::hermitian: return "hermitian";
    }
    return "?";
}

const FieldElement& Point::x() const {
    if (is_infinity()) fail(errc::eval_at_infinity, "point at infinity has no coordinates");
    return coords_->first;
}

const FieldElement& Point::y() const {
    if (is_infinity()) fail(errc::eval_at_infinity, "point at infinity has no coordinates");
    return coords_->second;
}

bool Point::operator==(const Point& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return x() == o.x() && y() == o.y();
}

bool PointLess::operator()(const Point& a, const Point& b) const {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    if (a.x().index() != b.x().index()) return a.x().index() < b.x().index();
    return a.y().index() < b.y().index();
}

void Divisor::add(const Point& p, int multiplicity) {
    int& m = support_[p];
    m += multiplicity;
    if (m == 0) support_.erase(p);
}

int Divisor::multiplicity(const Point& p) const {
    auto it = support_.find(p);
    return it == support_.end() ? 0 : it->second;
}

int Divisor::degree() const {
    int d = 0;
    for (const auto& [p, m] : support_) d += m;
    return d;
}

FieldElement evaluate(const RRFunction& f, const Point& p) {
    if (p.is_infinity()) fail(errc::eval_at_infinity, "monomials have a pole at infinity");
    return p.x().pow(f.x_exp) * p.y().pow(f.y_exp);
}

Curve Curve::rational(FieldPtr field) {
    return Curve(CurveFamily::rational, std::move(field), 0, 0);
}

Curve Curve::hermitian(FieldPtr field) {
    // The field must be GF(q0^2): even extension degree, q0 = p^(e/2).
    if (field->e() % 2 != 0)
        fail(errc::unsupported_family,
             "hermitian curve needs a field GF(q0^2); got e = " + std::to_string(field->e()));
    int q0 = 1;
    for (int i = 0; i < field->e() / 2; ++i) q0 *= field->p();
    const int genus = q0 * (q0 - 1) / 2;
    return Curve(CurveFamily::hermitian, std::move(field), genus, q0);
}

int Curve::q0() const {
    if (family_ != CurveFamily::hermitian)
        fail(errc::unsupported_family, "q0 is defined for the hermitian family only");
    return q0_;
}

bool Curve::on_curve(const Point& p) const {
    if (p.is_infinity()) return true;
    if (p.x().field() != *field_ || p.y().field() != *field_) return false;
    switch (family_) {
        case CurveFamily::rational:
            // affine line; the y slot is unused and kept at zero
            return p.y().is_zero();
        case CurveFamily::hermitian:
            return p.y().pow(q0_) + p.y() == p.x().pow(q0_ + 1);
    }
    return false;
}

std::vector<Point> Curve::rational_points() const {
    std::vector<Point> pts;
    switch (family_) {
        case CurveFamily::rational:
            pts.reserve(field_->q());
            for (const FieldElement& x : field_->elements())
                pts.push_back(Point::affine(x, field_->zero()));
            break;
        case CurveFamily::hermitian:
            for (const FieldElement& x : field_->elements()) {
                const FieldElement rhs = x.pow(q0_ + 1);
                for (const FieldElement& y : field_->elements())
                    if (y.pow(q0_) + y == rhs) pts.push_back(Point::affine(x, y));
            }
            break;
    }
    return pts;
}

std::vector<RRFunction> Curve::rr_basis(int m) const {
    if (m < 0) fail(errc::bad_config, "pole order bound must be >= 0");
    std::vector<RRFunction> basis;
    switch (family_) {
        case CurveFamily::rational:
            for (int a = 0; a <= m; ++a) basis.push_back({a, 0});
            break;
        case CurveFamily::hermitian:
            // x has pole order q0, y has pole order q0+1; y^q0 is reduced
            // away by the curve equation, so 0 <= b <= q0-1.
            for (int b = 0; b < q0_; ++b)
                for (int a = 0; a * q0_ + b * (q0_ + 1) <= m; ++a) basis.push_back({a, b});
            break;
    }
    std::sort(basis.begin(), basis.end(), [this](const RRFunction& f, const RRFunction& g) {
        const int pf = pole_order(f), pg = pole_order(g);
        if (pf != pg) return pf < pg;
        if (f.x_exp != g.x_exp) return f.x_exp < g.x_exp;
        return f.y_exp < g.y_exp;
    });
    return basis;
}

int Curve::pole_order(const RRFunction& f) const {
    switch (family_) {
        case CurveFamily::rational: return f.x_exp;
        case CurveFamily::hermitian: return f.x_exp * q0_ + f.y_exp * (q0_ + 1);
    }
    return 0;
}

}  // namespace agc
