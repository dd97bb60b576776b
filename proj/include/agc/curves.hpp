#pragma once

#include <map>
#include <optional>
#include <vector>

#include "agc/galois.hpp"

namespace agc {

enum class CurveFamily { rational, hermitian };

const char* to_string(CurveFamily f);

/// A degree-one place: an affine point (x, y) or the point at infinity.
/// Points on the rational curve carry a zero y coordinate by convention.
class Point {
public:
    static Point infinity() { return Point(); }
    static Point affine(const FieldElement& x, const FieldElement& y) { return Point(x, y); }

    bool is_infinity() const { return !coords_.has_value(); }
    const FieldElement& x() const;
    const FieldElement& y() const;

    bool operator==(const Point& o) const;
    bool operator!=(const Point& o) const { return !(*this == o); }

private:
    Point() = default;
    Point(const FieldElement& x, const FieldElement& y) : coords_(std::in_place, x, y) {}

    std::optional<std::pair<FieldElement, FieldElement>> coords_;
};

/// Strict ordering: affine points by (x index, y index), infinity last.
struct PointLess {
    bool operator()(const Point& a, const Point& b) const;
};

/// Formal integer combination of points.
class Divisor {
public:
    Divisor() = default;

    void add(const Point& p, int multiplicity = 1);
    int multiplicity(const Point& p) const;
    int degree() const;
    const std::map<Point, int, PointLess>& support() const { return support_; }

private:
    std::map<Point, int, PointLess> support_;
};

/// Monomial x^a y^b, regular away from the place at infinity. For the
/// rational family y_exp is always 0.
struct RRFunction {
    int x_exp = 0;
    int y_exp = 0;
    bool operator==(const RRFunction& o) const = default;
};

/// Evaluate the monomial at an affine point; throws EvalAtInfinity.
FieldElement evaluate(const RRFunction& f, const Point& p);

/// A curve with enumerable rational points and explicit monomial bases
/// for the one-point spaces L(m * P_inf).
///
/// Supported families:
///   rational            the projective line, genus 0
///   hermitian           y^q0 + y = x^(q0+1) over GF(q0^2), genus q0(q0-1)/2
class Curve {
public:
    static Curve rational(FieldPtr field);
    /// Requires q = q0^2 for q0 a power of the characteristic.
    static Curve hermitian(FieldPtr field);

    CurveFamily family() const { return family_; }
    const FieldPtr& field() const { return field_; }
    int genus() const { return genus_; }
    int q0() const;  // hermitian only

    bool on_curve(const Point& p) const;

    /// All affine rational points, ordered by x (field enumeration order)
    /// then y. The point at infinity is excluded.
    std::vector<Point> rational_points() const;

    /// Monomial basis of L(m * P_inf), ordered by pole order. For
    /// m > 2g-2 its size is m + 1 - g.
    std::vector<RRFunction> rr_basis(int m) const;

    /// Pole order of the monomial at the place at infinity.
    int pole_order(const RRFunction& f) const;

private:
    Curve(CurveFamily family, FieldPtr field, int genus, int q0)
        : family_(family), field_(std::move(field)), genus_(genus), q0_(q0) {}

    CurveFamily family_;
    FieldPtr field_;
    int genus_;
    int q0_;
};

}  // namespace agc
