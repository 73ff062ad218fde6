#include <cstddef>
#include <stdexcept>

#include <gtest/gtest.h>

#include <qpos/families.hpp>

#include "test_oracles.hpp"

using qpos::family_params;
using qpos::series;
using qpos::series_kind;

TEST(FamilyParams, RejectsNonPositive)
{
    EXPECT_THROW(family_params(0, 1), std::invalid_argument);
    EXPECT_THROW(family_params(1, 0), std::invalid_argument);
    EXPECT_NO_THROW(family_params(1, 1));
}

TEST(CprimeDefinitional, C21IsQOverOneMinusQSquared)
{
    const auto s = qpos::cprime_definitional({2, 1}, 300);
    EXPECT_EQ(s[0], 0);
    for (std::size_t n = 1; n <= 300; ++n) {
        ASSERT_EQ(s[n], n) << n;
    }
}

TEST(CprimeDefinitional, C11LowCoefficients)
{
    // Count solutions of n + 1 + j(2n + 1) = N.
    const auto s = qpos::cprime_definitional({1, 1}, 40);
    for (std::size_t N = 0; N <= 40; ++N) {
        int count = 0;
        for (std::size_t n = 0; n + 1 <= N; ++n) {
            if ((N - n - 1) % (2 * n + 1) == 0) {
                ++count;
            }
        }
        EXPECT_EQ(s[N], count) << N;
    }
    EXPECT_EQ(s[1], 1);
    EXPECT_EQ(s[2], 2);
    EXPECT_EQ(s[3], 2);
}

TEST(CprimeDefinitional, ZeroConstantTerm)
{
    for (std::size_t k = 1; k <= 4; ++k) {
        for (std::size_t m = 1; m <= 4; ++m) {
            EXPECT_EQ(qpos::cprime_definitional({k, m}, 10)[0], 0);
            EXPECT_EQ(qpos::dprime_definitional({k, m}, 10)[0], 0);
        }
    }
}

TEST(CprimeDefinitional, MatchesDirectTermByTermSum)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t m = 1; m <= 3; ++m) {
            const std::size_t N = 40;
            EXPECT_EQ(qpos::cprime_definitional({k, m}, N), qpos::testing::direct_family_sum(k, m, false, 1, N));
            EXPECT_EQ(qpos::dprime_definitional({k, m}, N), qpos::testing::direct_family_sum(k, m, true, 1, N));
            EXPECT_EQ(qpos::unsigned_series(series_kind::c_unsigned, {k, m}, N),
                      qpos::testing::direct_family_sum(k, m, false, -1, N));
            EXPECT_EQ(qpos::unsigned_series(series_kind::d_unsigned, {k, m}, N),
                      qpos::testing::direct_family_sum(k, m, true, -1, N));
        }
    }
}

TEST(CprimeDefinitional, OrderZeroAndTiny)
{
    EXPECT_EQ(qpos::cprime_definitional({1, 1}, 0), series::zero(0));
    EXPECT_EQ(qpos::cprime_definitional({1, 5}, 4), series::zero(4));
    EXPECT_EQ(qpos::cprime_closed({1, 5}, 4), series::zero(4));
    EXPECT_EQ(qpos::dprime_definitional({3, 2}, 3), series::zero(3));
}

TEST(CprimeClosed, EqualsDefinitionalBothBranches)
{
    for (std::size_t k = 1; k <= 6; ++k) {
        for (std::size_t m = 1; m <= 6; ++m) {
            const family_params p(k, m);
            EXPECT_EQ(qpos::cprime_definitional(p, 120), qpos::cprime_closed(p, 120)) << "k=" << k << " m=" << m;
        }
    }
}

TEST(CprimeClosed, C31RationalForm)
{
    // q(1 + q + q^2 - q^3) / ((1 - q)(1 - q^3)^2) through invert() of the
    // expanded denominator 1 - q - 2q^3 + 2q^4 + q^6 - q^7.
    const std::size_t N = 100;
    std::vector<qpos::integer> num(N + 1, 0), den(N + 1, 0);
    num[1] = 1, num[2] = 1, num[3] = 1, num[4] = -1;
    den[0] = 1, den[1] = -1, den[3] = -2, den[4] = 2, den[6] = 1, den[7] = -1;
    EXPECT_EQ(qpos::cprime_closed({3, 1}, N), series(num) * qpos::invert(series(den)));
}

TEST(CprimeClosed, C22DifferenceForm)
{
    const std::size_t N = 100;
    auto expected = qpos::shift(qpos::geometric(1, N) * qpos::geometric(1, N), 2);
    for (std::size_t n = 0; 3 * n + 4 <= N; ++n) {
        expected -= qpos::shift(qpos::geometric(2 * n + 3, N), 3 * n + 4);
    }
    EXPECT_EQ(qpos::cprime_closed({2, 2}, N), expected);
}

TEST(CprimeClosed, C23LowestTerm)
{
    const auto s = qpos::cprime_closed({2, 3}, 10);
    EXPECT_EQ(s[0], 0);
    EXPECT_EQ(s[1], 0);
    EXPECT_EQ(s[2], 0);
    EXPECT_EQ(s[3], 1);
    EXPECT_EQ(s, qpos::cprime_definitional({2, 3}, 10));
}

TEST(DprimeDefinitional, D21LowCoefficients)
{
    const auto s = qpos::dprime_definitional({2, 1}, 10);
    EXPECT_EQ(s[0], 0);
    EXPECT_EQ(s[1], 0);
    // 3 - (t2(2) + t2(0)) = 3 - 2
    EXPECT_EQ(s[2], 1);
}

TEST(DprimeDefinitional, D23NegativesAtTenAndTwentyTwo)
{
    const auto s = qpos::dprime_definitional({2, 3}, 99);
    std::vector<std::size_t> neg;
    for (std::size_t n = 0; n <= 99; ++n) {
        if (s[n] < 0) {
            neg.push_back(n);
        }
    }
    EXPECT_EQ(neg, (std::vector<std::size_t>{10, 22}));
}

TEST(DprimeViaRelation, MatchesDefinitional)
{
    EXPECT_EQ(qpos::dprime_via_relation({2, 1}, 500), qpos::dprime_definitional({2, 1}, 500));
    EXPECT_EQ(qpos::dprime_via_relation({1, 1}, 200), qpos::dprime_definitional({1, 1}, 200));
    for (std::size_t k = 1; k <= 4; ++k) {
        for (std::size_t m = 1; m <= 4; ++m) {
            const auto r = qpos::dprime_via_relation({k, m}, 80);
            EXPECT_EQ(r, qpos::dprime_definitional({k, m}, 80)) << "k=" << k << " m=" << m;
            EXPECT_EQ(r[0], 0);
        }
    }
}

TEST(UnsignedSeries, SmallCounts)
{
    const auto s = qpos::unsigned_series(series_kind::c_unsigned, {2, 1}, 300);
    EXPECT_EQ(s[1], 1);
    EXPECT_EQ(s[2], 2);
    for (std::size_t n = 0; n <= 300; ++n) {
        ASSERT_GE(s[n], 0) << n;
    }
    const auto d = qpos::unsigned_series(series_kind::d_unsigned, {3, 2}, 300);
    for (std::size_t n = 0; n <= 300; ++n) {
        ASSERT_GE(d[n], 0) << n;
    }
}

TEST(UnsignedSeries, RejectsSignedKind)
{
    EXPECT_THROW(qpos::unsigned_series(series_kind::c_signed, {1, 1}, 5), std::invalid_argument);
    EXPECT_THROW(qpos::unsigned_series(series_kind::d_signed, {1, 1}, 5), std::invalid_argument);
}

TEST(UnsignedSeries, BoundsSignedCoefficients)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t m = 1; m <= 3; ++m) {
            const family_params p(k, m);
            const auto c = qpos::cprime_definitional(p, 150);
            const auto cu = qpos::unsigned_series(series_kind::c_unsigned, p, 150);
            const auto d = qpos::dprime_definitional(p, 150);
            const auto du = qpos::unsigned_series(series_kind::d_unsigned, p, 150);
            for (std::size_t n = 0; n <= 150; ++n) {
                ASSERT_LE(abs(c[n]), cu[n]) << "C k=" << k << " m=" << m << " n=" << n;
                ASSERT_LE(abs(d[n]), du[n]) << "D k=" << k << " m=" << m << " n=" << n;
                // Same parity: C0 - C1 and C0 + C1 differ by 2 C1.
                ASSERT_EQ((cu[n] - c[n]) % 2, 0);
                ASSERT_EQ((du[n] - d[n]) % 2, 0);
            }
        }
    }
}

TEST(SpecialForms, AllEqualDefinitional)
{
    for (auto [k, m] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
        const family_params p(k, m);
        const auto forms = qpos::special_forms(p, 300);
        ASSERT_FALSE(forms.empty());
        const auto def = qpos::cprime_definitional(p, 300);
        for (const auto &f : forms) {
            EXPECT_EQ(f.value, def) << f.label;
        }
    }
    EXPECT_TRUE(qpos::special_forms({2, 3}, 10).empty());
}

TEST(T2Series, SmallValues)
{
    const auto t = qpos::t2_series(10);
    EXPECT_EQ(t[0], 1);
    EXPECT_EQ(t[1], 2);
    EXPECT_EQ(t[2], 1);
    EXPECT_EQ(t[3], 2);
    for (std::size_t n = 0; n <= 10; ++n) {
        EXPECT_EQ(t[n], qpos::testing::t2_brute(n)) << n;
    }
}

TEST(T2Series, GaussSquare)
{
    const auto tri = qpos::triangular_indicator(400);
    EXPECT_EQ(qpos::gauss_product(400), tri);
    EXPECT_EQ(qpos::t2_series(400), tri * tri);
}

TEST(Kinds, Helpers)
{
    EXPECT_EQ(qpos::family_of(series_kind::d_unsigned), qpos::family::d);
    EXPECT_TRUE(qpos::is_signed(series_kind::c_signed));
    EXPECT_FALSE(qpos::is_signed(series_kind::c_unsigned));
    EXPECT_EQ(qpos::make_kind(qpos::family::d, true), series_kind::d_signed);
    EXPECT_EQ(qpos::to_string(series_kind::c_unsigned), "C-unsigned");
}
