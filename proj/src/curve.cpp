#include "cubecurve/curve.hpp"

#include <string>

#include "cubecurve/identities.hpp"

namespace cubecurve {

FieldElement CurveParams::discriminant() const noexcept {
    const FieldElement a3 = b_;
    return FieldElement::from_signed(-16 * 27, modulus_) * a3 * a3;
}

CurveParams new_curve(i64 p, i64 a) {
    if (p < 2) throw CurveError(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    const PrimeModulus modulus(static_cast<u64>(p));
    modulus.require_1mod6();
    const auto a_red = FieldElement::from_signed(a, modulus);
    if (a_red.is_zero()) {
        throw CurveError(ErrorKind::SingularCurve,
                         "a = " + std::to_string(a) + " vanishes mod " + std::to_string(p));
    }
    return CurveParams(modulus, a_red);
}

CurveParams CurveParams::unchecked(const identities::UncheckedCurveKey&, i64 p, i64 a) {
    if (p < 2) throw CurveError(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    const PrimeModulus modulus(static_cast<u64>(p));
    const auto a_red = FieldElement::from_signed(a, modulus);
    if (a_red.is_zero()) {
        throw CurveError(ErrorKind::SingularCurve,
                         "a = " + std::to_string(a) + " vanishes mod " + std::to_string(p));
    }
    return CurveParams(modulus, a_red);
}

std::string to_string(const Point& pt) {
    if (pt.is_infinity()) return "O";
    return "(" + std::to_string(pt.x) + "," + std::to_string(pt.y) + ")";
}

bool is_on_curve(const CurveParams& c, const Point& pt) noexcept {
    if (pt.is_infinity()) return true;
    const u64 p = c.p();
    if (pt.x >= p || pt.y >= p) return false;
    const FieldElement y(pt.y, c.modulus());
    return y * y == c.rhs(FieldElement(pt.x, c.modulus()));
}

PointSet enumerate_points(const CurveParams& c, u64 cap) {
    const u64 p = c.p();
    if (p > cap) {
        throw CurveError(ErrorKind::CapExceeded,
                         "p = " + std::to_string(p) + " above enumeration cap " + std::to_string(cap));
    }
    PointSet points;
    points.reserve(p + 2);
    points.push_back(Point::at_infinity());
    for (u64 x = 0; x < p; ++x) {
        for (const FieldElement& y : sqrt_mod(c.rhs(FieldElement(x, c.modulus())))) {
            points.push_back(Point::affine(x, y.value()));
        }
    }
    return points;
}

namespace {

void require_on_curve(const CurveParams& c, const Point& pt) {
    if (!is_on_curve(c, pt)) {
        throw CurveError(ErrorKind::NotOnCurve, to_string(pt) + " is not on the curve");
    }
}

}  // namespace

Point negate(const CurveParams& c, const Point& pt) {
    require_on_curve(c, pt);
    if (pt.is_infinity()) return pt;
    return Point::affine(pt.x, sub_mod(0, pt.y, c.p()));
}

Point add(const CurveParams& c, const Point& lhs, const Point& rhs) {
    require_on_curve(c, lhs);
    require_on_curve(c, rhs);
    if (lhs.is_infinity()) return rhs;
    if (rhs.is_infinity()) return lhs;

    const PrimeModulus& mod = c.modulus();
    const FieldElement x1(lhs.x, mod), y1(lhs.y, mod);
    const FieldElement x2(rhs.x, mod), y2(rhs.y, mod);

    // Vertical chord, including doubling a 2-torsion point.
    if (x1 == x2 && (y1 + y2).is_zero()) return Point::at_infinity();

    FieldElement slope(0, mod);
    if (x1 == x2) {
        // Tangent; A = 0 so the numerator is 3x^2.
        slope = FieldElement(3, mod) * x1 * x1 * inverse(y1 + y1);
    } else {
        slope = (y2 - y1) * inverse(x2 - x1);
    }
    const FieldElement x3 = slope * slope - x1 - x2;
    const FieldElement y3 = slope * (x1 - x3) - y1;
    return Point::affine(x3.value(), y3.value());
}

Point scalar_mul(const CurveParams& c, u64 k, const Point& pt) {
    require_on_curve(c, pt);
    Point acc = Point::at_infinity();
    Point base = pt;
    while (k != 0) {
        if (k & 1) acc = add(c, acc, base);
        base = add(c, base, base);
        k >>= 1;
    }
    return acc;
}

}  // namespace cubecurve
