#include "cubecurve/identities.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>

namespace cubecurve::identities {

struct KeyIssuer {
    static UncheckedCurveKey key() { return {}; }
};

AbscissaSums abscissa_sums(i64 p, i64 a, u64 cap) {
    if (p >= 2 && static_cast<u64>(p) > cap) {
        throw CurveError(ErrorKind::CapExceeded,
                         "p = " + std::to_string(p) + " above cap " + std::to_string(cap));
    }
    if (a < 1 || a >= p) {
        if (p < 2 || !is_prime(static_cast<u64>(p))) {
            throw CurveError(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
        }
        throw CurveError(ErrorKind::InvalidArgument, "a must lie in [1, p-1]");
    }
    const CurveParams c = CurveParams::unchecked(KeyIssuer::key(), p, a);

    // |s| <= p^2 / 2 and p <= cap < 2^31 keep everything inside i64.
    i64 s = 0;
    for (u64 x = 0; x < c.p(); ++x) {
        s += value_of(legendre_symbol(c.rhs(FieldElement(x, c.modulus())))) * static_cast<i64>(x);
    }
    const i64 j = s + p * (p - 1) / 2;
    return {static_cast<u64>(p), static_cast<u64>(a), j, s, j % p == 0, s % p == 0};
}

u64 cube_root_sum(i64 t, i64 p) {
    if (p < 2) throw CurveError(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    const PrimeModulus modulus(static_cast<u64>(p));
    u64 sum = 0;
    for (const FieldElement& root : cube_roots(FieldElement::from_signed(t, modulus))) {
        sum = add_mod(sum, root.value(), modulus.value());
    }
    return sum;
}

u64 same_ordinate_sum(const CurveParams& c, const FieldElement& y) {
    const FieldElement t = y * y - c.b();
    u64 sum = 0;
    for (const FieldElement& x : cube_roots(t)) sum = add_mod(sum, x.value(), c.p());
    return sum;
}

FamilySweep family_sweep(i64 p, const SweepOptions& options) {
    const CurveParams first = new_curve(p, 1);
    if (first.p() > options.cap) {
        throw CurveError(ErrorKind::CapExceeded,
                         "p = " + std::to_string(p) + " above cap " + std::to_string(options.cap));
    }

    FamilySweep sweep;
    sweep.p = first.p();
    sweep.counts.assign(sweep.p - 1, 0);

    auto count_one = [&](u64 a) {
        sweep.counts[a - 1] = count_quadratic_sum(new_curve(p, static_cast<i64>(a)));
    };

    std::size_t workers = options.workers ? options.workers : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, sweep.counts.size());
    if (!options.parallel || workers == 1) {
        for (u64 a = 1; a < sweep.p; ++a) count_one(a);
    } else {
        std::atomic<u64> next{1};
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (u64 a = next++; a < sweep.p; a = next++) count_one(a);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    for (u64 n : sweep.counts) sweep.total += n;
    return sweep;
}

bool twist_relation_check(i64 p, i64 a) {
    const CurveParams base = new_curve(p, 1);
    const CurveParams twisted = new_curve(p, a);
    const i64 lhs = static_cast<i64>(count_quadratic_sum(twisted)) - p - 1;
    const i64 rhs = static_cast<i64>(count_quadratic_sum(base)) - p - 1;
    return lhs == value_of(legendre_symbol(twisted.b())) * rhs;
}

AbscissaSums counterexample_report() { return abscissa_sums(11, 1); }

}  // namespace cubecurve::identities
