#pragma once

/**
 * @file identities.hpp
 * @brief Exact checks of the arithmetic identities satisfied by the family
 * y^2 = x^3 + a^3 over F_p, p = 1 (mod 6).
 *
 * Abscissa sums are evaluated as signed integers over the representatives
 * x = 0..p-1 before any reduction, since divisibility by p is a statement
 * about those integers and not about residues.
 */

#include <cstddef>
#include <vector>

#include "cubecurve/counting.hpp"
#include "cubecurve/curve.hpp"

namespace cubecurve::identities {

/// Passkey for CurveParams::unchecked. Only code in this module mints one.
class UncheckedCurveKey {
    UncheckedCurveKey() = default;
    friend struct KeyIssuer;
};

struct AbscissaSums {
    u64 p = 0;
    u64 a = 0;
    i64 j = 0;  // sum (1 + chi(x^3 + a^3)) * x
    i64 s = 0;  // sum chi(x^3 + a^3) * x
    bool j_div_p = false;
    bool s_div_p = false;
};

/// j and s for any prime p (p = 5 mod 6 is allowed here) and 1 <= a <= p-1.
/// Throws NonPrime, InvalidArgument for a out of range, CapExceeded above cap.
AbscissaSums abscissa_sums(i64 p, i64 a, u64 cap = kDefaultEnumerationCap);

/// Sum of the cube roots of t mod p, reduced mod p. Empty sums are 0.
u64 cube_root_sum(i64 t, i64 p);

/// Sum mod p of the abscissae x with (x, y) on the curve.
u64 same_ordinate_sum(const CurveParams& c, const FieldElement& y);

struct FamilySweep {
    u64 p = 0;
    std::vector<u64> counts;  // counts[i] = N_{p, i+1}
    u64 total = 0;

    u64 expected_total() const noexcept { return p * p - 1; }
    bool total_ok() const noexcept { return total == expected_total(); }
};

struct SweepOptions {
    bool parallel = false;
    std::size_t workers = 0;  // 0 picks hardware_concurrency
    u64 cap = kDefaultEnumerationCap;
};

/// N_{p,a} for a = 1..p-1 via the quadratic character sum. With parallel
/// set, values of a are split across threads; output order is always a.
FamilySweep family_sweep(i64 p, const SweepOptions& options = {});

/// N_{p,a} - p - 1 == chi(a^3) * (N_{p,1} - p - 1), both counts computed
/// from scratch.
bool twist_relation_check(i64 p, i64 a);

/// j and s for (p, a) = (11, 1), built through the unchecked curve path.
AbscissaSums counterexample_report();

}  // namespace cubecurve::identities
