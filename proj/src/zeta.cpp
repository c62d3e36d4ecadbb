#include "cubecurve/zeta.hpp"

#include <string>

#include "cubecurve/error.hpp"

namespace cubecurve {

namespace {

i64 checked_mul(i64 x, i64 y) {
    i64 out;
    if (__builtin_mul_overflow(x, y, &out)) throw CurveError(ErrorKind::Overflow, "integer overflow in lift");
    return out;
}

i64 checked_sub(i64 x, i64 y) {
    i64 out;
    if (__builtin_sub_overflow(x, y, &out)) throw CurveError(ErrorKind::Overflow, "integer overflow in lift");
    return out;
}

i64 checked_add(i64 x, i64 y) {
    i64 out;
    if (__builtin_add_overflow(x, y, &out)) throw CurveError(ErrorKind::Overflow, "integer overflow in lift");
    return out;
}

// "cT" with unit coefficients elided.
std::string term(i64 magnitude, const char* var) {
    return (magnitude == 1 ? std::string() : std::to_string(magnitude)) + var;
}

}  // namespace

ZetaData zeta_from_count(i64 q, i64 n1) {
    if (q < 2) throw CurveError(ErrorKind::InvalidArgument, "q must be at least 2");
    if (n1 < 1) throw CurveError(ErrorKind::InvalidArgument, "N_1 must be positive");
    const i64 trace = checked_sub(checked_add(q, 1), n1);
    if (static_cast<__int128>(trace) * trace >= static_cast<__int128>(4) * q) {
        throw CurveError(ErrorKind::HasseViolation,
                         "trace " + std::to_string(trace) + " violates trace^2 < 4q for q = " +
                             std::to_string(q));
    }
    return {q, trace, {1, -trace, q}};
}

std::vector<i64> lift_counts(const ZetaData& z, int r_max) {
    if (r_max < 1) throw CurveError(ErrorKind::InvalidArgument, "r_max must be at least 1");
    std::vector<i64> counts;
    counts.reserve(static_cast<std::size_t>(r_max));
    i64 t_prev = 2;        // t_0 = alpha^0 + beta^0
    i64 t_cur = z.trace;   // t_1
    i64 q_pow = z.q;
    for (int r = 1; r <= r_max; ++r) {
        if (r > 1) {
            q_pow = checked_mul(q_pow, z.q);
            const i64 t_next = checked_sub(checked_mul(z.trace, t_cur), checked_mul(z.q, t_prev));
            t_prev = t_cur;
            t_cur = t_next;
        }
        counts.push_back(checked_sub(checked_add(q_pow, 1), t_cur));
    }
    return counts;
}

std::string numerator_render(const ZetaData& z) {
    std::string out = "1";
    const i64 linear = -z.trace;
    if (linear > 0) out += " + " + term(linear, "T");
    if (linear < 0) out += " - " + term(-linear, "T");
    out += " + " + term(z.q, "T^2");
    return out;
}

std::string zeta_rational_render(const ZetaData& z) {
    return "(" + numerator_render(z) + ") / ((1 - T)(1 - " + term(z.q, "T") + "))";
}

}  // namespace cubecurve
