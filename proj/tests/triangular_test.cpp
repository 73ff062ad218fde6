#include <cmath>
#include <cstdint>
#include <numbers>

#include <gtest/gtest.h>

#include <qpos/families.hpp>
#include <qpos/triangular.hpp>

#include "test_oracles.hpp"

using qpos::circle_case;

TEST(Triangular, Basics)
{
    EXPECT_EQ(qpos::isqrt(0), 0u);
    EXPECT_EQ(qpos::isqrt(15), 3u);
    EXPECT_EQ(qpos::isqrt(16), 4u);
    EXPECT_EQ(qpos::isqrt(UINT64_MAX), 4294967295u);
    EXPECT_TRUE(qpos::is_triangular(0));
    EXPECT_TRUE(qpos::is_triangular(10));
    EXPECT_FALSE(qpos::is_triangular(11));
}

TEST(T2Direct, Examples)
{
    EXPECT_EQ(qpos::t2_direct(0).t2, 1u);
    EXPECT_EQ(qpos::t2_direct(3).t2, 2u);
    EXPECT_EQ(qpos::t2_direct(2).t2, 1u);
    EXPECT_EQ(qpos::t2_direct(6).t2, 3u);
}

TEST(T2Direct, MatchesBruteForceAndSeries)
{
    const auto series = qpos::t2_series(2000);
    const auto table = qpos::t2_table(2000);
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        ASSERT_EQ(series[n], table[n]) << n;
        if (n <= 300) {
            ASSERT_EQ(table[n], qpos::testing::t2_brute(n)) << n;
        }
    }
}

TEST(Keysum, Examples)
{
    const auto r0 = qpos::keysum_check(0);
    EXPECT_EQ(r0.sum, 1u);
    EXPECT_EQ(r0.bound, 1u);
    EXPECT_TRUE(r0.holds());
    const auto r2 = qpos::keysum_check(2);
    EXPECT_EQ(r2.sum, 2u);
    EXPECT_EQ(r2.bound, 3u);
}

TEST(Keysum, HoldsTo5000)
{
    const auto scan = qpos::keysum_scan(5000);
    ASSERT_EQ(scan.size(), 5001u);
    for (const auto &r : scan) {
        ASSERT_TRUE(r.holds()) << r.N;
    }
    EXPECT_EQ(scan[777].sum, qpos::keysum_check(777).sum);
}

TEST(Keysum, MarginIsD21Coefficient)
{
    const auto d = qpos::dprime_definitional({2, 1}, 600);
    const auto scan = qpos::keysum_scan(600);
    for (std::uint64_t N = 0; N <= 600; ++N) {
        ASSERT_EQ(d[N], scan[N].margin()) << N;
    }
}

TEST(Keysum, StrictForLargeEvenN)
{
    const auto scan = qpos::keysum_scan(4000);
    for (std::uint64_t N = 92; N <= 4000; N += 2) {
        ASSERT_GT(scan[N].margin(), 0) << N;
    }
}

TEST(Circle, Examples)
{
    EXPECT_EQ(qpos::circle_count(0, circle_case::even), 1u);
    EXPECT_EQ(qpos::circle_count(1, circle_case::even), 2u);
    EXPECT_EQ(qpos::circle_count(2, circle_case::odd),
              qpos::t2_direct(5).t2 + qpos::t2_direct(3).t2 + qpos::t2_direct(1).t2);
}

TEST(Circle, CountEqualsKeysum)
{
    const auto scan = qpos::keysum_scan(1001);
    for (std::uint64_t N = 0; N <= 500; ++N) {
        ASSERT_EQ(qpos::circle_count(N, circle_case::even), scan[2 * N].sum) << N;
        ASSERT_EQ(qpos::circle_count(N, circle_case::odd), scan[2 * N + 1].sum) << N;
    }
}

TEST(Circle, BoundHolds)
{
    EXPECT_TRUE(qpos::circle_bound_check(0).ok);
    EXPECT_TRUE(qpos::circle_bound_check(10).ok);
    EXPECT_TRUE(qpos::circle_bound_check(1000).ok);
    EXPECT_NEAR(qpos::circle_bound(0), 65.0 * std::numbers::pi / 16.0 + 1.0, 1e-12);
}

TEST(Calculus, Checks)
{
    const auto r = qpos::f_checks();
    EXPECT_TRUE(r.ok());
    EXPECT_NEAR(r.f_at_90, 0.0141, 0.0005);
    EXPECT_NEAR(r.slope_constant, 0.065568, 1e-5);
    EXPECT_NEAR(qpos::keysum_f_prime(15.0), r.slope_constant, 1e-12);
    EXPECT_EQ(r.samples.size(), 201u);
    EXPECT_GT(qpos::keysum_f(90.0), 0.0);
    EXPECT_LT(qpos::keysum_f(89.0), qpos::keysum_f(90.0));
}

TEST(Calculus, DerivativesMatchFiniteDifferences)
{
    const double h = 1e-4;
    for (double x = 1.0; x <= 200.0; x += 7.5) {
        const double d1 = (qpos::keysum_f(x + h) - qpos::keysum_f(x - h)) / (2 * h);
        const double d2 = (qpos::keysum_f_prime(x + h) - qpos::keysum_f_prime(x - h)) / (2 * h);
        EXPECT_NEAR(qpos::keysum_f_prime(x), d1, 1e-6) << x;
        EXPECT_NEAR(qpos::keysum_f_second(x), d2, 1e-6) << x;
    }
}
