#include "cubecurve/modmath.hpp"

#include <algorithm>
#include <string>

namespace cubecurve {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrime: return "NonPrime";
        case ErrorKind::WrongResidue: return "WrongResidue";
        case ErrorKind::SingularCurve: return "SingularCurve";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::NotOnCurve: return "NotOnCurve";
        case ErrorKind::HasseViolation: return "HasseViolation";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

bool miller_rabin_round(u64 n, u64 d, int s, u64 witness) noexcept {
    witness %= n;
    if (witness == 0) return true;
    u64 x = pow_mod(witness, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 witness : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        if (!miller_rabin_round(n, d, s, witness)) return false;
    }
    return true;
}

bool is_prime_1mod6(u64 n) noexcept { return n % 6 == 1 && is_prime(n); }

PrimeModulus::PrimeModulus(u64 p) : p_(p) {
    if (p >= kMaxModulus) {
        throw CurveError(ErrorKind::NonPrime, "modulus " + std::to_string(p) + " exceeds 2^63");
    }
    if (!is_prime(p)) {
        throw CurveError(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    }
}

void PrimeModulus::require_1mod6() const {
    if (!is_1mod6()) {
        throw CurveError(ErrorKind::WrongResidue,
                         "p = " + std::to_string(p_) + " is " + std::to_string(residue6()) +
                             " mod 6, expected 1");
    }
}

FieldElement mod_pow(const FieldElement& base, u64 exp) noexcept {
    return {pow_mod(base.value(), exp, base.p()), base.modulus()};
}

FieldElement inverse(const FieldElement& x) {
    if (x.is_zero()) throw CurveError(ErrorKind::InvalidArgument, "zero has no inverse");
    return mod_pow(x, x.p() - 2);
}

QuadChar legendre_symbol(const FieldElement& x) {
    const u64 p = x.p();
    if (p == 2) throw CurveError(ErrorKind::InvalidArgument, "Legendre symbol needs an odd prime");
    if (x.is_zero()) return QuadChar::Zero;
    return pow_mod(x.value(), (p - 1) / 2, p) == 1 ? QuadChar::Plus : QuadChar::Minus;
}

std::vector<FieldElement> sqrt_mod(const FieldElement& t) {
    const PrimeModulus& mod = t.modulus();
    const u64 p = mod.value();
    switch (legendre_symbol(t)) {
        case QuadChar::Minus: return {};
        case QuadChar::Zero: return {FieldElement(0, mod)};
        case QuadChar::Plus: break;
    }

    // Tonelli-Shanks with p - 1 = q * 2^s, q odd.
    u64 q = p - 1;
    u64 s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 root;
    if (s == 1) {
        root = pow_mod(t.value(), (p + 1) / 4, p);
    } else {
        u64 z = 2;
        while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
        u64 m = s;
        u64 c = pow_mod(z, q, p);
        u64 tt = pow_mod(t.value(), q, p);
        root = pow_mod(t.value(), (q + 1) / 2, p);
        while (tt != 1) {
            u64 i = 0;
            for (u64 probe = tt; probe != 1; probe = mul_mod(probe, probe, p)) ++i;
            u64 b = c;
            for (u64 k = 0; k + 1 < m - i; ++k) b = mul_mod(b, b, p);
            m = i;
            c = mul_mod(b, b, p);
            tt = mul_mod(tt, c, p);
            root = mul_mod(root, b, p);
        }
    }
    const u64 other = p - root;
    return {FieldElement(std::min(root, other), mod), FieldElement(std::max(root, other), mod)};
}

std::array<FieldElement, 3> cube_roots_of_unity(const PrimeModulus& modulus) {
    modulus.require_1mod6();
    const u64 p = modulus.value();
    const u64 e = (p - 1) / 3;
    u64 w = 1;
    for (u64 g = 2; w == 1; ++g) w = pow_mod(g, e, p);
    const u64 w2 = mul_mod(w, w, p);
    const u64 lo = std::min(w, w2);
    return {FieldElement(1, modulus), FieldElement(lo, modulus),
            FieldElement(mul_mod(lo, lo, p), modulus)};
}

CubicCharClass cubic_char_class(const FieldElement& x) {
    const auto unity = cube_roots_of_unity(x.modulus());
    if (x.is_zero()) return CubicCharClass::Zero;
    const u64 e = pow_mod(x.value(), (x.p() - 1) / 3, x.p());
    if (e == 1) return CubicCharClass::Class0;
    return e == unity[1].value() ? CubicCharClass::Class1 : CubicCharClass::Class2;
}

int cube_solution_count(const FieldElement& x) {
    x.modulus().require_1mod6();
    if (x.is_zero()) return 1;
    return pow_mod(x.value(), (x.p() - 1) / 3, x.p()) == 1 ? 3 : 0;
}

namespace {

// One cube root of a nonzero cubic residue t, p = 1 (mod 3).
//
// Write p - 1 = 3^s * m with 3 not dividing m. For u with 3u = 1 (mod m),
// x = t^u satisfies x^3 = t * b where b = t^(3u - 1) lies in the Sylow
// 3-subgroup, which is cyclic of order 3^s and generated by c = z^m for any
// cubic nonresidue z. Since t is a cube, b = c^e with 3 | e, and the
// correction c^(-e/3) turns x into an exact root.
u64 adleman_manders_miller(u64 t, u64 p) {
    u64 m = p - 1;
    u64 s = 0;
    u64 three_s = 1;
    while (m % 3 == 0) {
        m /= 3;
        ++s;
        three_s *= 3;
    }
    const u64 u = (m % 3 == 2) ? (m + 1) / 3 : (2 * m + 1) / 3;
    u64 x = pow_mod(t, u, p);
    const u64 b = mul_mod(pow_mod(x, 3, p), pow_mod(t, p - 2, p), p);
    if (b == 1) return x;

    u64 z = 2;
    while (pow_mod(z, (p - 1) / 3, p) == 1) ++z;
    const u64 c = pow_mod(z, m, p);
    const u64 c_inv = pow_mod(c, p - 2, p);
    const u64 omega = pow_mod(c, three_s / 3, p);  // order 3

    // Discrete log of b to base c, one base-3 digit at a time.
    u64 e = 0;
    u64 place = 1;
    for (u64 i = 0; i < s; ++i) {
        const u64 residual = mul_mod(b, pow_mod(c_inv, e, p), p);
        const u64 h = pow_mod(residual, three_s / (place * 3), p);
        if (h == omega) {
            e += place;
        } else if (h != 1) {
            e += 2 * place;
        }
        place *= 3;
    }
    const u64 correction = pow_mod(c_inv, e / 3, p);
    return mul_mod(x, correction, p);
}

}  // namespace

std::vector<FieldElement> cube_roots(const FieldElement& t, u64 search_threshold) {
    const PrimeModulus& mod = t.modulus();
    const u64 p = mod.value();
    if (t.is_zero()) {
        mod.require_1mod6();
        return {FieldElement(0, mod)};
    }
    if (cube_solution_count(t) == 0) return {};

    u64 x0 = 0;
    if (p < search_threshold) {
        for (u64 x = 1; x < p; ++x) {
            if (pow_mod(x, 3, p) == t.value()) {
                x0 = x;
                break;
            }
        }
    } else {
        x0 = adleman_manders_miller(t.value(), p);
    }
    const auto unity = cube_roots_of_unity(mod);
    std::vector<FieldElement> roots{FieldElement(x0, mod), FieldElement(x0, mod) * unity[1],
                                    FieldElement(x0, mod) * unity[2]};
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace cubecurve
