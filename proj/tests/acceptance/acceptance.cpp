// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cubecurve/cli.hpp"
#include "cubecurve/counting.hpp"
#include "cubecurve/curve.hpp"
#include "cubecurve/identities.hpp"
#include "cubecurve/zeta.hpp"
#include "oracles.hpp"

using namespace cubecurve;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

double median_seconds(const std::function<void()>& fn, int reps = 5) {
    std::vector<double> t;
    for (int i = 0; i < reps; ++i) {
        const auto start = Clock::now();
        fn();
        t.push_back(std::chrono::duration<double>(Clock::now() - start).count());
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

CurveParams curve(u64 p, u64 a) { return new_curve(static_cast<i64>(p), static_cast<i64>(a)); }

// 1. Example listing for (7, 4) and agreement of the four counts; < 1 ms.
Outcome example_listing() {
    const std::string golden = "O\n(0,1)\n(0,6)\n(1,3)\n(1,4)\n(2,3)\n(2,4)\n(3,0)\n(4,3)\n(4,4)\n(5,0)\n(6,0)\n";
    std::string listing;
    int code = -1;
    u64 counts[4] = {};
    const double secs = median_seconds([&] {
        std::ostringstream out, err;
        code = cli::run_cli({"points", "--p", "7", "--a", "4", "--format", "text"}, out, err);
        listing = out.str();
        const CurveParams c = curve(7, 4);
        counts[0] = count_enumeration(c);
        counts[1] = count_quadratic_sum(c);
        counts[2] = count_rho(c);
        counts[3] = count_cubic_sum(c);
    });
    Outcome o;
    o.ok = code == 0 && listing == golden && std::all_of(std::begin(counts), std::end(counts), [](u64 n) { return n == 12; }) &&
           secs < 1e-3;
    o.detail = "12 points, counts " + std::to_string(counts[0]) + "/" + std::to_string(counts[1]) + "/" +
               std::to_string(counts[2]) + "/" + std::to_string(counts[3]) + ", " +
               std::to_string(secs * 1e6) + " us";
    return o;
}

// 2. Zeta lift for (7, 4): trace -4, N_2 = 48, N_3 = 324; < 1 ms.
Outcome zeta_lift() {
    ZetaData z;
    std::vector<i64> counts;
    const double secs = median_seconds([&] {
        z = zeta_from_count(7, static_cast<i64>(count_quadratic_sum(curve(7, 4))));
        counts = lift_counts(z, 3);
    });
    Outcome o;
    o.ok = z.trace == -4 && counts == std::vector<i64>{12, 48, 324} && secs < 1e-3;
    o.detail = "trace " + std::to_string(z.trace) + ", N = " + std::to_string(counts[0]) + ", " +
               std::to_string(counts[1]) + ", " + std::to_string(counts[2]) + ", " +
               std::to_string(secs * 1e6) + " us";
    return o;
}

// 3. The p = 11 counterexample.
Outcome counterexample() {
    const identities::AbscissaSums s = identities::counterexample_report();
    Outcome o;
    o.ok = s.j == 56 && s.s == 1 && s.j % 11 != 0 && s.s % 11 != 0 && !s.j_div_p && !s.s_div_p;
    o.detail = "j=" + std::to_string(s.j) + " s=" + std::to_string(s.s);
    return o;
}

// 4. Method agreement plus Hasse for p <= 1000; < 5 minutes single-threaded.
Outcome method_agreement() {
    std::size_t curves = 0, failures = 0;
    std::string first;
    const auto start = Clock::now();
    for (u64 p : oracle::primes_1mod6(7, 1000)) {
        for (u64 a = 1; a < p; ++a) {
            const CountReport r = count_report(curve(p, a));
            ++curves;
            const bool ok = r.n_enum && r.methods_agree() && r.hasse_ok && r.delta * r.delta < static_cast<i64>(4 * p);
            if (!ok && failures++ == 0) first = " first failure p=" + std::to_string(p) + " a=" + std::to_string(a);
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    Outcome o;
    o.ok = failures == 0 && secs < 300.0;
    o.detail = std::to_string(curves) + " curves, " + std::to_string(failures) + " failures, " +
               std::to_string(secs) + " s" + first;
    return o;
}

// 5. p | j(p) and p | s(p) for p <= 1000.
Outcome divisibility() {
    std::size_t pairs = 0, failures = 0;
    for (u64 p : oracle::primes_1mod6(7, 1000)) {
        for (u64 a = 1; a < p; ++a) {
            const auto s = identities::abscissa_sums(static_cast<i64>(p), static_cast<i64>(a));
            ++pairs;
            if (!(s.j_div_p && s.s_div_p && s.j % static_cast<i64>(p) == 0 && s.s % static_cast<i64>(p) == 0)) ++failures;
        }
    }
    return {failures == 0, std::to_string(pairs) + " pairs, " + std::to_string(failures) + " failures"};
}

// 6. Family total p^2 - 1 for p <= 500.
Outcome family_sum() {
    std::size_t primes = 0, failures = 0;
    for (u64 p : oracle::primes_1mod6(7, 500)) {
        const auto sweep = identities::family_sweep(static_cast<i64>(p));
        ++primes;
        if (sweep.total != p * p - 1 || sweep.counts.size() != p - 1) ++failures;
    }
    return {failures == 0, std::to_string(primes) + " primes, " + std::to_string(failures) + " failures"};
}

// 7. Twist relation for p <= 1000.
Outcome twist_relation() {
    std::size_t pairs = 0, failures = 0;
    for (u64 p : oracle::primes_1mod6(7, 1000)) {
        for (u64 a = 1; a < p; ++a) {
            ++pairs;
            if (!identities::twist_relation_check(static_cast<i64>(p), static_cast<i64>(a))) ++failures;
        }
    }
    return {failures == 0, std::to_string(pairs) + " pairs, " + std::to_string(failures) + " failures"};
}

// 8. Structural checks for p <= 200.
Outcome structural() {
    std::size_t failures = 0;
    std::size_t triples = 0;
    std::string first;
    auto fail = [&](const std::string& what, u64 p, u64 a) {
        if (failures++ == 0) first = " first failure " + what + " p=" + std::to_string(p) + " a=" + std::to_string(a);
    };

    for (u64 p : oracle::primes_1mod6(7, 200)) {
        const i64 ip = static_cast<i64>(p);
        for (u64 t = 0; t < p; ++t) {
            if (identities::cube_root_sum(static_cast<i64>(t), ip) != 0) fail("cube_root_sum", p, 0);
        }
        for (u64 a = 1; a < p; ++a) {
            const CurveParams c = curve(p, a);
            const PointSet pts = enumerate_points(c);
            const std::size_t n = pts.size();

            for (u64 y = 0; y < p; ++y) {
                if (identities::same_ordinate_sum(c, FieldElement(y, c.modulus())) != 0) fail("same_ordinate", p, a);
            }

            const auto on_axis = std::count_if(pts.begin(), pts.end(),
                                               [](const Point& q) { return !q.is_infinity() && q.x == 0; });
            const std::size_t expect_axis = oracle::legendre(a, p) == 1 ? 2 : 0;
            if (static_cast<std::size_t>(on_axis) != expect_axis || y_axis_points(c).size() != expect_axis) {
                fail("y_axis", p, a);
            }

            // Addition table over point indices; the axioms are then checked on it.
            auto index_of = [&](const Point& q) {
                return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), q) - pts.begin());
            };
            std::vector<std::size_t> table(n * n);
            std::vector<std::size_t> inverse(n);
            bool closed = true;
            for (std::size_t i = 0; i < n; ++i) {
                inverse[i] = index_of(negate(c, pts[i]));
                for (std::size_t j = 0; j < n; ++j) {
                    const Point s = add(c, pts[i], pts[j]);
                    const std::size_t k = index_of(s);
                    if (k >= n || pts[k] != s) closed = false;
                    table[i * n + j] = k < n ? k : 0;
                }
            }
            if (!closed) fail("closure", p, a);
            for (std::size_t i = 0; i < n; ++i) {
                if (table[i * n] != i) fail("identity", p, a);                // pts[0] is infinity
                if (table[i * n + inverse[i]] != 0) fail("inverse", p, a);
                for (std::size_t j = 0; j < n; ++j) {
                    if (table[i * n + j] != table[j * n + i]) fail("commutativity", p, a);
                    const std::size_t ij = table[i * n + j];
                    const std::size_t* row_ij = &table[ij * n];
                    const std::size_t* row_j = &table[j * n];
                    const std::size_t* row_i = &table[i * n];
                    for (std::size_t k = 0; k < n; ++k) {
                        if (row_ij[k] != row_i[row_j[k]]) fail("associativity", p, a);
                    }
                    triples += n;
                }
                if (scalar_mul(c, n, pts[i]) != Point::at_infinity()) fail("order", p, a);
            }
        }
    }
    return {failures == 0, std::to_string(triples) + " associativity triples, " + std::to_string(failures) +
                               " failures" + first};
}

// 9. Duplication identity N_2 = N_1 (2(q + 1) - N_1) for p <= 500.
Outcome duplication() {
    std::size_t curves = 0, failures = 0;
    for (u64 p : oracle::primes_1mod6(7, 500)) {
        for (u64 a = 1; a < p; ++a) {
            const i64 n1 = static_cast<i64>(count_quadratic_sum(curve(p, a)));
            const i64 q = static_cast<i64>(p);
            const auto counts = lift_counts(zeta_from_count(q, n1), 2);
            ++curves;
            if (counts[0] != n1 || counts[1] != n1 * (2 * (q + 1) - n1)) ++failures;
        }
    }
    return {failures == 0, std::to_string(curves) + " curves, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"1 example listing (7,4) and four counts = 12, < 1 ms", example_listing},
        {"2 zeta lift (7,4): trace -4, N2 = 48, N3 = 324, < 1 ms", zeta_lift},
        {"3 counterexample (11,1): j = 56, s = 1, not divisible", counterexample},
        {"4 method agreement + Hasse, p <= 1000, < 300 s", method_agreement},
        {"5 p | j and p | s, p <= 1000", divisibility},
        {"6 family total p^2 - 1, p <= 500", family_sum},
        {"7 twist relation, p <= 1000", twist_relation},
        {"8 structural suite, p <= 200", structural},
        {"9 duplication identity, p <= 500", duplication},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s -- %s\n", o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str());
        std::fflush(stdout);
        if (!o.ok) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
