#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cubecurve/modmath.hpp"

namespace cubecurve {

namespace identities {
class UncheckedCurveKey;
}

/// Largest p accepted by point enumeration unless a caller says otherwise.
inline constexpr u64 kDefaultEnumerationCap = u64{1} << 24;

/// The curve y^2 = x^3 + a^3 over F_p, with p = 1 (mod 6) and a != 0.
class CurveParams {
public:
    const PrimeModulus& modulus() const noexcept { return modulus_; }
    u64 p() const noexcept { return modulus_.value(); }
    const FieldElement& a() const noexcept { return a_; }
    /// The constant term a^3.
    const FieldElement& b() const noexcept { return b_; }

    /// Right-hand side x^3 + a^3.
    FieldElement rhs(const FieldElement& x) const noexcept { return x * x * x + b_; }

    /// Delta = -16 * 27 * a^6 reduced mod p; nonzero for every valid curve.
    FieldElement discriminant() const noexcept;

    friend CurveParams new_curve(i64 p, i64 a);

    /// Escape hatch for p != 1 (mod 6); only the identities module can mint
    /// the key. Still requires p prime and a != 0.
    static CurveParams unchecked(const identities::UncheckedCurveKey&, i64 p, i64 a);

    friend bool operator==(const CurveParams&, const CurveParams&) = default;

private:
    CurveParams(PrimeModulus modulus, FieldElement a)
        : modulus_(modulus), a_(a), b_(a * a * a) {}

    PrimeModulus modulus_;
    FieldElement a_;
    FieldElement b_;
};

/// Validates (p, a): NonPrime, WrongResidue, SingularCurve in that order.
/// a is reduced mod p, so negative values are accepted.
CurveParams new_curve(i64 p, i64 a);

/// Either the point at infinity or a reduced affine pair. The ordering puts
/// infinity first, then affine points lexicographically by (x, y).
struct Point {
    bool infinity = true;
    u64 x = 0;
    u64 y = 0;

    static constexpr Point at_infinity() noexcept { return {}; }
    static constexpr Point affine(u64 x, u64 y) noexcept { return {false, x, y}; }

    constexpr bool is_infinity() const noexcept { return infinity; }

    friend constexpr bool operator==(const Point& l, const Point& r) noexcept {
        return l.infinity == r.infinity && (l.infinity || (l.x == r.x && l.y == r.y));
    }
    friend constexpr std::strong_ordering operator<=>(const Point& l, const Point& r) noexcept {
        if (l.infinity || r.infinity) return r.infinity <=> l.infinity;
        if (auto c = l.x <=> r.x; c != 0) return c;
        return l.y <=> r.y;
    }
};

/// Infinity as "O", affine points as "(x,y)".
std::string to_string(const Point& pt);

using PointSet = std::vector<Point>;

bool is_on_curve(const CurveParams& c, const Point& pt) noexcept;

/// Every point of E(F_p), canonically ordered. Iterates x and takes square
/// roots of x^3 + a^3. Throws CapExceeded when p > cap.
PointSet enumerate_points(const CurveParams& c, u64 cap = kDefaultEnumerationCap);

// Group law. All of these throw NotOnCurve for inputs off the curve.
Point negate(const CurveParams& c, const Point& pt);
Point add(const CurveParams& c, const Point& lhs, const Point& rhs);
Point scalar_mul(const CurveParams& c, u64 k, const Point& pt);

}  // namespace cubecurve
