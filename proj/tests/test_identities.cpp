#include <gtest/gtest.h>

#include "cubecurve/identities.hpp"
#include "oracles.hpp"

using namespace cubecurve;
using namespace cubecurve::identities;

TEST(AbscissaSums, Counterexample11) {
    const oracle::Sums expected = oracle::abscissa_sums(11, 1);
    ASSERT_EQ(expected.j, 56);
    ASSERT_EQ(expected.s, 1);

    const AbscissaSums s = abscissa_sums(11, 1);
    EXPECT_EQ(s.j, 56);
    EXPECT_EQ(s.s, 1);
    EXPECT_FALSE(s.j_div_p);
    EXPECT_FALSE(s.s_div_p);
}

TEST(AbscissaSums, Example7_4) {
    const AbscissaSums s = abscissa_sums(7, 4);
    EXPECT_EQ(s.j, 28);
    EXPECT_EQ(s.s, 7);
    EXPECT_TRUE(s.j_div_p);
    EXPECT_TRUE(s.s_div_p);
}

TEST(AbscissaSums, SignedValuesAreKept) {
    // s(13, 1) = -26 by direct enumeration; the sum is negative before reduction.
    const AbscissaSums s = abscissa_sums(13, 1);
    EXPECT_EQ(s.s, -26);
    EXPECT_EQ(s.j, 52);
    EXPECT_TRUE(s.s_div_p);
}

TEST(AbscissaSums, Errors) {
    EXPECT_THROW(abscissa_sums(15, 1), CurveError);
    EXPECT_THROW(abscissa_sums(7, 0), CurveError);
    EXPECT_THROW(abscissa_sums(7, 7), CurveError);
    EXPECT_THROW(abscissa_sums(13, 1, 11), CurveError);
}

TEST(AbscissaSums, MatchOracleAndDivisibility) {
    for (u64 p = 5; p <= 300; ++p) {
        if (!oracle::is_prime_trial(p)) continue;
        for (u64 a = 1; a < p; ++a) {
            const AbscissaSums s = abscissa_sums(static_cast<i64>(p), static_cast<i64>(a));
            const oracle::Sums expected = oracle::abscissa_sums(p, a);
            ASSERT_EQ(s.j, expected.j);
            ASSERT_EQ(s.s, expected.s);
            ASSERT_EQ(s.j, s.s + static_cast<i64>(p * (p - 1) / 2));
            if (p % 6 == 1) {
                ASSERT_TRUE(s.j_div_p && s.s_div_p) << p << "," << a;
            }
        }
    }
}

TEST(AbscissaSums, CounterexampleReportUsesUncheckedPath) {
    const AbscissaSums s = counterexample_report();
    EXPECT_EQ(s.p, 11u);
    EXPECT_EQ(s.a, 1u);
    EXPECT_EQ(s.j, 56);
    EXPECT_EQ(s.s, 1);
    EXPECT_NE(s.j % 11, 0);
    EXPECT_NE(s.s % 11, 0);
}

TEST(CubeRootSum, Examples) {
    EXPECT_EQ(cube_root_sum(6, 7), 0u);
    EXPECT_EQ(cube_root_sum(0, 7), 0u);
    EXPECT_EQ(cube_root_sum(3, 7), 0u);
    EXPECT_EQ(cube_root_sum(-1, 7), 0u);
    EXPECT_THROW(cube_root_sum(1, 11), CurveError);
}

TEST(CubeRootSum, VanishesEverywhere) {
    for (u64 p : oracle::primes_1mod6(7, 200)) {
        for (u64 t = 0; t < p; ++t) ASSERT_EQ(cube_root_sum(static_cast<i64>(t), static_cast<i64>(p)), 0u);
    }
}

TEST(SameOrdinateSum, Examples) {
    const CurveParams c = new_curve(7, 4);
    const PrimeModulus m(7);
    // Points with y = 3 are (1,3), (2,3), (4,3).
    EXPECT_EQ(same_ordinate_sum(c, FieldElement(3, m)), 0u);
    EXPECT_EQ(same_ordinate_sum(c, FieldElement(0, m)), 0u);
    EXPECT_EQ(same_ordinate_sum(c, FieldElement(5, m)), 0u);
}

TEST(SameOrdinateSum, MatchesEnumerationAndVanishes) {
    for (u64 p : oracle::primes_1mod6(7, 200)) {
        for (u64 a = 1; a < p; ++a) {
            const auto pts = oracle::affine_points_full_scan(p, a);
            const CurveParams c = new_curve(static_cast<i64>(p), static_cast<i64>(a));
            for (u64 y = 0; y < p; ++y) {
                u64 direct = 0;
                for (const auto& [px, py] : pts) {
                    if (py == y) direct = (direct + px) % p;
                }
                ASSERT_EQ(direct, 0u);
                ASSERT_EQ(same_ordinate_sum(c, FieldElement(y, c.modulus())), direct);
            }
        }
    }
}

TEST(FamilySweep, Examples) {
    const FamilySweep s7 = family_sweep(7);
    EXPECT_EQ(s7.counts.size(), 6u);
    EXPECT_EQ(s7.total, 48u);
    EXPECT_TRUE(s7.total_ok());
    for (u64 a = 1; a < 7; ++a) EXPECT_EQ(s7.counts[a - 1], oracle::point_count(7, a));

    const FamilySweep s13 = family_sweep(13);
    EXPECT_EQ(s13.total, 168u);
    u64 oracle_total = 0;
    for (u64 a = 1; a < 13; ++a) oracle_total += oracle::point_count(13, a);
    EXPECT_EQ(oracle_total, 168u);

    EXPECT_THROW(family_sweep(11), CurveError);
    SweepOptions tight;
    tight.cap = 10;
    EXPECT_THROW(family_sweep(13, tight), CurveError);
}

TEST(FamilySweep, ParallelMatchesSerial) {
    SweepOptions par;
    par.parallel = true;
    par.workers = 4;
    for (i64 p : {7, 13, 97, 307}) {
        const FamilySweep serial = family_sweep(p);
        const FamilySweep parallel = family_sweep(p, par);
        EXPECT_EQ(serial.counts, parallel.counts);
        EXPECT_EQ(serial.total, parallel.total);
        EXPECT_TRUE(serial.total_ok());
    }
}

TEST(TwistRelation, Examples) {
    EXPECT_TRUE(twist_relation_check(7, 4));
    ASSERT_EQ(oracle::point_count(7, 3), 4u);  // delta = -4 = chi(6) * 4
    EXPECT_TRUE(twist_relation_check(7, 3));
    for (i64 p : {7, 13, 19, 31}) EXPECT_TRUE(twist_relation_check(p, 1));
}

TEST(TwistRelation, HoldsInRange) {
    for (u64 p : oracle::primes_1mod6(7, 200)) {
        for (u64 a = 1; a < p; ++a) {
            ASSERT_TRUE(twist_relation_check(static_cast<i64>(p), static_cast<i64>(a))) << p << "," << a;
        }
    }
}
