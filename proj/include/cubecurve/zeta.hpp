#pragma once

#include <array>
#include <string>
#include <vector>

#include "cubecurve/modmath.hpp"

namespace cubecurve {

/// Z(T) = (1 - aT + qT^2) / ((1 - T)(1 - qT)) for a curve with N_1 = q + 1 - a.
///
/// The reciprocal roots alpha, beta of the numerator are never formed; their
/// power sums come from the recurrence t_r = a t_{r-1} - q t_{r-2}.
struct ZetaData {
    i64 q = 0;
    i64 trace = 0;
    std::array<i64, 3> numerator{1, 0, 0};  // (1, -trace, q)

    i64 n1() const noexcept { return q + 1 - trace; }
};

/// Throws HasseViolation when trace^2 >= 4q, InvalidArgument when n1 < 1 or q < 2.
ZetaData zeta_from_count(i64 q, i64 n1);

/// N_1 .. N_{r_max}. Throws Overflow when q^r_max (or any N_r) leaves i64.
std::vector<i64> lift_counts(const ZetaData& z, int r_max);

/// "(1 - aT + qT^2) / ((1 - T)(1 - qT))" with the coefficients substituted.
std::string zeta_rational_render(const ZetaData& z);

/// Just the numerator polynomial, e.g. "1 + 4T + 7T^2".
std::string numerator_render(const ZetaData& z);

}  // namespace cubecurve
