#pragma once

/**
 * @file counting.hpp
 * @brief Four independent ways to count #E(F_p) for y^2 = x^3 + a^3.
 *
 *  - enumeration:   |enumerate_points(c)|, the ground truth
 *  - quadratic sum: p + 1 + sum_x chi(x^3 + a^3)
 *  - rho sum:       4 + sum_x rho(x), rho(x) = 2 when chi(x^3 + a^3) = 1
 *  - cubic sum:     1 + sum_y f(y^2 - a^3), f counting cube roots
 *
 * The methods share no intermediate state, so agreement between them is a
 * real cross-check. Every count includes the point at infinity.
 */

#include <optional>

#include "cubecurve/curve.hpp"

namespace cubecurve {

u64 count_enumeration(const CurveParams& c, u64 cap = kDefaultEnumerationCap);
u64 count_quadratic_sum(const CurveParams& c);
u64 count_rho(const CurveParams& c);
u64 count_cubic_sum(const CurveParams& c);

struct TraceInfo {
    i64 delta = 0;  // N - p - 1
    bool hasse_ok = false;  // delta^2 < 4p, integer comparison only
};

TraceInfo trace_and_hasse(const CurveParams& c, u64 n);
TraceInfo trace_and_hasse(u64 p, u64 n);

/// Points with x = 0: two when a is a quadratic residue, none otherwise.
PointSet y_axis_points(const CurveParams& c);

struct CountReport {
    u64 p = 0;
    u64 a = 0;
    std::optional<u64> n_enum;  // empty when p exceeds the enumeration cap
    u64 n_quad = 0;
    u64 n_rho = 0;
    u64 n_cubic = 0;
    i64 delta = 0;
    bool hasse_ok = false;

    bool methods_agree() const noexcept {
        return n_quad == n_rho && n_rho == n_cubic && (!n_enum || *n_enum == n_quad);
    }
    u64 n() const noexcept { return n_quad; }
};

/// Runs every method; enumeration is skipped (not an error) above the cap.
CountReport count_report(const CurveParams& c, u64 cap = kDefaultEnumerationCap);

}  // namespace cubecurve
