#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <qpos/oracle.hpp>

using qpos::color;
using qpos::family_params;
using qpos::series_kind;
using qpos::two_color_partition;

namespace
{

std::set<std::string> as_strings(const std::vector<two_color_partition> &v)
{
    std::set<std::string> s;
    for (const auto &p : v) {
        s.insert(p.to_string());
    }
    return s;
}

} // namespace

TEST(TwoColorPartition, CanonicalOrder)
{
    const two_color_partition p({{1, color::green, 1}, {3, color::blue, 2}, {1, color::blue, 1}, {4, color::green, 1}});
    EXPECT_EQ(p.to_string(), "{4g,3b,3b,1b,1g}");
    EXPECT_EQ(p.total(), 12u);
    EXPECT_EQ(p.smallest(), 1u);
    EXPECT_EQ(p.even_part_count(), 1u);
    EXPECT_EQ(p.multiplicity(3, color::blue), 2u);
    EXPECT_THROW(two_color_partition({{2, color::blue, 1}, {2, color::blue, 1}}), std::invalid_argument);
    EXPECT_THROW(two_color_partition({{0, color::blue, 1}}), std::invalid_argument);
}

TEST(EnumerateC, SmallCases)
{
    EXPECT_EQ(as_strings(qpos::enumerate_c({2, 1}, 1)), (std::set<std::string>{"{1b}"}));
    EXPECT_EQ(as_strings(qpos::enumerate_c({2, 1}, 2)), (std::set<std::string>{"{1b,1b}", "{1b,1g}"}));
    EXPECT_TRUE(qpos::enumerate_c({1, 1}, 0).empty());
}

TEST(EnumerateD, SmallCases)
{
    EXPECT_EQ(as_strings(qpos::enumerate_d({2, 1}, 2)), (std::set<std::string>{"{2b}"}));
    EXPECT_TRUE(qpos::enumerate_d({2, 1}, 3).empty());
    EXPECT_TRUE(qpos::enumerate_d({2, 2}, 2).empty());
    EXPECT_TRUE(qpos::enumerate_d({1, 1}, 0).empty());
}

TEST(EnumerateC, HandCountForK1M1N4)
{
    // Only s = 1 fits. Beyond the mandatory 1b the remaining 3 comes from
    // 1b/1g with any multiplicity, 3b/3g, or one of the distinct evens 2b/2g.
    const auto parts = qpos::enumerate_c({1, 1}, 4);
    const std::set<std::string> expected{"{1b,1b,1b,1b}", "{1b,1b,1b,1g}", "{1b,1b,1g,1g}", "{1b,1g,1g,1g}",
                                         "{3b,1b}",       "{3g,1b}",       "{2b,1b,1b}",    "{2b,1b,1g}",
                                         "{2g,1b,1b}",    "{2g,1b,1g}"};
    EXPECT_EQ(as_strings(parts), expected);
}

TEST(WeightedCounts, SmallValues)
{
    EXPECT_EQ(qpos::weighted_counts_c({2, 1}, 2), (qpos::weighted_counts{2, 0}));
    EXPECT_EQ(qpos::weighted_counts_c({2, 1}, 5).difference(), 5);
    EXPECT_EQ(qpos::weighted_counts_c({1, 1}, 3).difference(), 2);
    EXPECT_EQ(qpos::weighted_counts_d({2, 1}, 2), (qpos::weighted_counts{1, 0}));
    EXPECT_EQ(qpos::weighted_counts_d({2, 1}, 4).difference(), qpos::dprime_definitional({2, 1}, 4)[4]);
    EXPECT_LT(qpos::weighted_counts_d({2, 3}, 10).difference(), 0);
}

TEST(WeightedCounts, DParityIgnoresMandatoryCopies)
{
    // D(1,2,8): s = 2 twice plus 4 more. {4b,2b,2b} has one even part above s.
    const family_params p(1, 2);
    int found = 0;
    qpos::for_each_d(p, 8, [&](const two_color_partition &pi) {
        if (pi.to_string() == "{4b,2b,2b}") {
            ++found;
            EXPECT_EQ(pi.even_parts_above(pi.smallest()), 1u);
            EXPECT_EQ(pi.even_part_count(), 3u);
        }
    });
    EXPECT_EQ(found, 1);
}

TEST(Enumerate, EveryMemberSatisfiesDefinitionAndIsUnique)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t m = 1; m <= 3; ++m) {
            const family_params p(k, m);
            for (std::size_t n = 0; n <= 18; ++n) {
                const auto cs = qpos::enumerate_c(p, n);
                EXPECT_EQ(as_strings(cs).size(), cs.size());
                for (const auto &pi : cs) {
                    ASSERT_EQ(pi.total(), n);
                    ASSERT_TRUE(qpos::is_member_c(p, pi)) << pi.to_string();
                    ASSERT_FALSE(qpos::is_member_d(p, pi)) << pi.to_string();
                }
                const auto ds = qpos::enumerate_d(p, n);
                EXPECT_EQ(as_strings(ds).size(), ds.size());
                for (const auto &pi : ds) {
                    ASSERT_EQ(pi.total(), n);
                    ASSERT_TRUE(qpos::is_member_d(p, pi)) << pi.to_string();
                }
            }
        }
    }
}

TEST(Enumerate, NothingBelowMinimalDegree)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t m = 1; m <= 3; ++m) {
            for (std::size_t n = 0; n < m; ++n) {
                EXPECT_TRUE(qpos::enumerate_c({k, m}, n).empty());
            }
            for (std::size_t n = 0; n < 2 * m; ++n) {
                EXPECT_TRUE(qpos::enumerate_d({k, m}, n).empty());
            }
        }
    }
}

TEST(OracleVsSeries, SmallRanges)
{
    EXPECT_TRUE(qpos::oracle_vs_series(series_kind::c_signed, {1, 1}, 25).ok);
    EXPECT_TRUE(qpos::oracle_vs_series(series_kind::d_signed, {2, 1}, 25).ok);
    EXPECT_TRUE(qpos::oracle_vs_series(series_kind::c_unsigned, {3, 2}, 20).ok);
}

TEST(OracleVsSeries, DetectsWrongFamily)
{
    // Feeding the D counts against the C series must fail somewhere.
    const auto c = qpos::cprime_definitional({2, 1}, 12);
    bool differs = false;
    for (std::size_t n = 0; n <= 12; ++n) {
        differs = differs || qpos::weighted_counts_d({2, 1}, n).difference() != c[n];
    }
    EXPECT_TRUE(differs);
}

TEST(OracleVsSeries, ThreadCountDoesNotMatter)
{
    const auto a = qpos::oracle_vs_series(series_kind::d_unsigned, {2, 2}, 22, 1);
    const auto b = qpos::oracle_vs_series(series_kind::d_unsigned, {2, 2}, 22, 4);
    EXPECT_TRUE(a.ok);
    EXPECT_EQ(a.describe(), b.describe());
}
