#include "cubecurve/counting.hpp"

#include <cassert>

namespace cubecurve {

u64 count_enumeration(const CurveParams& c, u64 cap) { return enumerate_points(c, cap).size(); }

u64 count_quadratic_sum(const CurveParams& c) {
    const u64 p = c.p();
    i64 sum = 0;
    for (u64 x = 0; x < p; ++x) {
        sum += value_of(legendre_symbol(c.rhs(FieldElement(x, c.modulus()))));
    }
    return static_cast<u64>(static_cast<i64>(p + 1) + sum);
}

u64 count_rho(const CurveParams& c) {
    const u64 p = c.p();
    c.modulus().require_1mod6();
#ifndef NDEBUG
    {
        // The constant 4 stands for the y = 0 points x = -a, -wa, -w^2 a
        // plus infinity; check those three abscissae really are distinct roots.
        const auto unity = cube_roots_of_unity(c.modulus());
        const FieldElement r0 = -c.a(), r1 = r0 * unity[1], r2 = r0 * unity[2];
        assert(r0 != r1 && r1 != r2 && r0 != r2);
        assert(c.rhs(r0).is_zero() && c.rhs(r1).is_zero() && c.rhs(r2).is_zero());
    }
#endif
    u64 total = 4;
    for (u64 x = 0; x < p; ++x) {
        const u64 v = pow_mod(c.rhs(FieldElement(x, c.modulus())).value(), (p - 1) / 2, p);
        if (v == 1) total += 2;
    }
    return total;
}

u64 count_cubic_sum(const CurveParams& c) {
    const u64 p = c.p();
    c.modulus().require_1mod6();
    u64 total = 1;
    for (u64 y = 0; y < p; ++y) {
        const FieldElement fy(y, c.modulus());
        total += static_cast<u64>(cube_solution_count(fy * fy - c.b()));
    }
    return total;
}

TraceInfo trace_and_hasse(u64 p, u64 n) {
    const __int128 delta = static_cast<__int128>(n) - static_cast<__int128>(p) - 1;
    return {static_cast<i64>(delta), delta * delta < static_cast<__int128>(4) * p};
}

TraceInfo trace_and_hasse(const CurveParams& c, u64 n) { return trace_and_hasse(c.p(), n); }

PointSet y_axis_points(const CurveParams& c) {
    if (legendre_symbol(c.a()) != QuadChar::Plus) return {};
    PointSet out;
    for (const FieldElement& y : sqrt_mod(c.b())) out.push_back(Point::affine(0, y.value()));
    return out;
}

CountReport count_report(const CurveParams& c, u64 cap) {
    CountReport r;
    r.p = c.p();
    r.a = c.a().value();
    if (c.p() <= cap) r.n_enum = count_enumeration(c, cap);
    r.n_quad = count_quadratic_sum(c);
    r.n_rho = count_rho(c);
    r.n_cubic = count_cubic_sum(c);
    const TraceInfo t = trace_and_hasse(c, r.n_quad);
    r.delta = t.delta;
    r.hasse_ok = t.hasse_ok;
    return r;
}

}  // namespace cubecurve
