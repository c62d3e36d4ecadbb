#pragma once

/**
 * @file modmath.hpp
 * @brief Exact arithmetic in F_p for 64-bit primes.
 *
 * Moduli are restricted to p < 2^63 so that every intermediate product fits
 * in an unsigned 128-bit integer. Quadratic and cubic residue machinery,
 * square roots, cube roots and a deterministic Miller-Rabin test live here.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "cubecurve/error.hpp"

namespace cubecurve {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline constexpr u64 kMaxModulus = u64{1} << 63;

// Raw residue kernels. Arguments must already be reduced mod p.
constexpr u64 add_mod(u64 x, u64 y, u64 p) noexcept {
    const u64 s = x + y;  // p < 2^63, so no wraparound
    return s >= p ? s - p : s;
}
constexpr u64 sub_mod(u64 x, u64 y, u64 p) noexcept { return x >= y ? x - y : x + (p - y); }
constexpr u64 mul_mod(u64 x, u64 y, u64 p) noexcept {
    return static_cast<u64>(static_cast<u128>(x) * y % p);
}
constexpr u64 pow_mod(u64 base, u64 exp, u64 p) noexcept {
    u64 result = 1 % p;
    base %= p;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}
/// Reduces a signed integer into [0, p).
constexpr u64 reduce(i64 v, u64 p) noexcept {
    const i64 r = static_cast<i64>(static_cast<__int128>(v) % static_cast<__int128>(p));
    return r < 0 ? static_cast<u64>(r + static_cast<i64>(p)) : static_cast<u64>(r);
}

/// Deterministic for every n < 2^64 (witness set of Sinclair / Jaeschke).
bool is_prime(u64 n) noexcept;

/// True iff n is prime and n = 1 (mod 6).
bool is_prime_1mod6(u64 n) noexcept;

/// A validated prime modulus.
class PrimeModulus {
public:
    /// Throws NonPrime for composites, 0, 1, and values >= 2^63.
    explicit PrimeModulus(u64 p);

    u64 value() const noexcept { return p_; }
    u64 residue6() const noexcept { return p_ % 6; }
    bool is_1mod6() const noexcept { return residue6() == 1; }

    /// Throws WrongResidue unless p = 1 (mod 6).
    void require_1mod6() const;

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    u64 p_;
};

/// Residue in [0, p) tied to its modulus.
class FieldElement {
public:
    FieldElement(u64 value, PrimeModulus modulus) noexcept
        : value_(value % modulus.value()), modulus_(modulus) {}
    static FieldElement from_signed(i64 value, PrimeModulus modulus) noexcept {
        return FieldElement(reduce(value, modulus.value()), modulus);
    }

    u64 value() const noexcept { return value_; }
    const PrimeModulus& modulus() const noexcept { return modulus_; }
    u64 p() const noexcept { return modulus_.value(); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const noexcept {
        return {add_mod(value_, o.value_, p()), modulus_};
    }
    FieldElement operator-(const FieldElement& o) const noexcept {
        return {sub_mod(value_, o.value_, p()), modulus_};
    }
    FieldElement operator*(const FieldElement& o) const noexcept {
        return {mul_mod(value_, o.value_, p()), modulus_};
    }
    FieldElement operator-() const noexcept { return {sub_mod(0, value_, p()), modulus_}; }

    friend bool operator==(const FieldElement& x, const FieldElement& y) noexcept {
        return x.value_ == y.value_ && x.modulus_ == y.modulus_;
    }
    friend std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y) noexcept {
        if (auto c = x.value_ <=> y.value_; c != 0) return c;
        return x.p() <=> y.p();
    }

private:
    u64 value_;
    PrimeModulus modulus_;
};

FieldElement mod_pow(const FieldElement& base, u64 exp) noexcept;

/// Multiplicative inverse by Fermat; throws InvalidArgument for zero.
FieldElement inverse(const FieldElement& x);

/// Legendre symbol value. The numeric value is the character value.
enum class QuadChar : int { Minus = -1, Zero = 0, Plus = 1 };

constexpr int value_of(QuadChar c) noexcept { return static_cast<int>(c); }

/// Euler criterion: x^((p-1)/2) with p-1 read as -1. Requires odd p.
QuadChar legendre_symbol(const FieldElement& x);

/// All y with y^2 = t, ascending (0, 1 or 2 roots). Tonelli-Shanks.
std::vector<FieldElement> sqrt_mod(const FieldElement& t);

/// Class of x^((p-1)/3) among {1, w, w^2}, w the smaller nontrivial cube
/// root of unity. Zero is reserved for x = 0.
enum class CubicCharClass { Zero, Class0, Class1, Class2 };

/// (1, w, w^2) with w the smaller nontrivial root. Throws WrongResidue
/// unless p = 1 (mod 6).
std::array<FieldElement, 3> cube_roots_of_unity(const PrimeModulus& modulus);

CubicCharClass cubic_char_class(const FieldElement& x);

/// Number of solutions of X^3 = x: 1 for x = 0, 3 for nonzero cubes, else 0.
int cube_solution_count(const FieldElement& x);

/// Moduli below this use a linear scan to locate the first cube root.
inline constexpr u64 kDefaultCubeRootSearchThreshold = u64{1} << 20;

/// All X with X^3 = t, ascending. A single root x0 is found by direct search
/// when p < search_threshold and by Adleman-Manders-Miller otherwise; the
/// rest are x0*w and x0*w^2.
std::vector<FieldElement> cube_roots(const FieldElement& t,
                                     u64 search_threshold = kDefaultCubeRootSearchThreshold);

}  // namespace cubecurve
