#ifndef QPOS_POSITIVITY_HPP
#define QPOS_POSITIVITY_HPP

// Sign scans of truncated series and the coefficient arguments behind the
// positivity of C'(2,3) and C'(4,1).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <qpos/families.hpp>
#include <qpos/series.hpp>
#include <qpos/verdict.hpp>

namespace qpos
{

enum class sign_class
{
    nonnegative_so_far,
    oscillating
};

inline const char *to_string(sign_class c) noexcept
{
    return c == sign_class::nonnegative_so_far ? "nonnegative-so-far" : "oscillating";
}

struct scan_report
{
    std::size_t scanned_to = 0;
    std::vector<std::size_t> negative_indices;
    sign_class classification = sign_class::nonnegative_so_far;

    std::optional<std::size_t> largest_negative() const
    {
        if (negative_indices.empty()) {
            return std::nullopt;
        }
        return negative_indices.back();
    }

    bool operator==(const scan_report &) const = default;
};

template <typename Int>
scan_report negative_indices(const basic_series<Int> &s)
{
    scan_report r;
    r.scanned_to = s.order();
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (s[i] < 0) {
            r.negative_indices.push_back(i);
        }
    }
    r.classification = r.negative_indices.empty() ? sign_class::nonnegative_so_far : sign_class::oscillating;
    return r;
}

// Families whose positivity is a theorem: C'(1,1), C'(2,1), C'(2,2), C'(3,1),
// C'(2,3), C'(4,1) and D'(2,1).
inline bool proven_positive(family f, const family_params &p)
{
    if (f == family::d) {
        return p.k == 2 && p.m == 1;
    }
    return (p.k == 1 && p.m == 1) || (p.k == 2 && p.m <= 3) || (p.k == 3 && p.m == 1) || (p.k == 4 && p.m == 1);
}

// ---------------------------------------------------------------------------
// Coefficients of q^A / ((1 + q)(1 - q^{2n+3}))

// (-1)^{N-A} when N >= A and floor((N - A) / (2n + 3)) is even, else 0.
inline int lemma_a_coeff(std::size_t n, std::size_t A, std::size_t N)
{
    if (N < A) {
        return 0;
    }
    const std::size_t d = N - A;
    if ((d / (2 * n + 3)) % 2 != 0) {
        return 0;
    }
    return d % 2 == 0 ? 1 : -1;
}

// q^3 (1 - q^{2n+2})(1 - q^{2n+4}) / ((1 - q)(1 - q^{2n+3})(1 - q^{2n+5})),
// the n-th summand of the simplified C'(2,3) series.
template <typename Int = integer>
basic_series<Int> c23_summand(std::size_t n, std::size_t order)
{
    auto s = basic_series<Int>::monomial(3, order);
    s.times_binomial(2 * n + 2).times_binomial(2 * n + 4);
    s.over_binomial(1).over_binomial(2 * n + 3).over_binomial(2 * n + 5);
    return s;
}

// sum_n q^n c23_summand(n), which equals the C'(2,3) series.
template <typename Int = integer>
basic_series<Int> c23_simplified(std::size_t order)
{
    basic_series<Int> s(order);
    for (std::size_t n = 0; n + 3 <= order; ++n) {
        s.add_shifted(c23_summand<Int>(n, order - n), n);
    }
    return s;
}

// Both sides of the partial fraction split of c23_summand:
//   q/(1-q) - q^2/((1+q)(1-q^{2n+3})) - q/(1-q^{2n+5}) - q^3/((1+q)(1-q^{2n+5}))
template <typename Int = integer>
basic_series<Int> lemma52_rhs(std::size_t n, std::size_t order)
{
    using S = basic_series<Int>;
    auto a = S::monomial(1, order);
    a.over_binomial(1);
    auto b = S::monomial(2, order);
    b.over_binomial(1, -1).over_binomial(2 * n + 3);
    auto c = S::monomial(1, order);
    c.over_binomial(2 * n + 5);
    auto d = S::monomial(3, order);
    d.over_binomial(1, -1).over_binomial(2 * n + 5);
    return a - b - c - d;
}

template <typename Int = integer>
verdict lemma52_decomposition_check(std::size_t n, std::size_t order)
{
    return compare_series("lemma52 n=" + std::to_string(n), c23_summand<Int>(n, order), lemma52_rhs<Int>(n, order));
}

// 1 - T1 - T2 - T3 for the coefficient of q^N in c23_summand(n), where
// T1 and T2 come from lemma_a_coeff and T3 = [N = 1 mod 2n+5].
inline int c23_case_value(std::size_t n, std::size_t N)
{
    const int t1 = lemma_a_coeff(n, 2, N);
    const int t2 = lemma_a_coeff(n + 1, 3, N);
    const int t3 = (N >= 1 && (N - 1) % (2 * n + 5) == 0) ? 1 : 0;
    return 1 - t1 - t2 - t3;
}

// The case-analysis value, checked against the direct expansion; throws
// verification_error if the two disagree.
inline int c23_case_coefficient(std::size_t n, std::size_t N)
{
    if (N < 1) {
        throw std::invalid_argument("c23_case_coefficient: N must be at least 1");
    }
    const int value = c23_case_value(n, N);
    const auto direct = c23_summand(n, N);
    if (direct[N] != value) {
        throw verification_error("c23_case_coefficient: n=" + std::to_string(n) + " N=" + std::to_string(N)
                                 + " case analysis gives " + std::to_string(value) + ", expansion gives "
                                 + direct[N].str());
    }
    return value;
}

// c23_case_coefficient for N = 1 .. max_N with one expansion. Fails on the
// first mismatch or negative value.
inline verdict c23_case_scan(std::size_t n, std::size_t max_N)
{
    const std::string name = "c23cases n=" + std::to_string(n);
    const auto direct = c23_summand(n, max_N);
    for (std::size_t N = 1; N <= max_N; ++N) {
        const int value = c23_case_value(n, N);
        if (direct[N] != value) {
            return verdict::fail(name, "case analysis disagrees with expansion", N, direct[N].str(),
                                 std::to_string(value));
        }
        if (value < 0) {
            return verdict::fail(name, "negative coefficient", N, ">= 0", std::to_string(value));
        }
    }
    return verdict::pass(name, "match, nonnegative");
}

// ---------------------------------------------------------------------------
// C'(4,1) = q/((1-q)(1-q^3)(1-q^5)) sum_n q^n (1-q^{2n+3})(1-q^{2n+5})

// (1 - q^{2n+3})(1 - q^{2n+5}) / ((1 - q)(1 - q^3)(1 - q^5))
template <typename Int = integer>
basic_series<Int> c41_factor(std::size_t n, std::size_t order)
{
    auto s = basic_series<Int>::one(order);
    s.times_binomial(2 * n + 3).times_binomial(2 * n + 5);
    s.over_binomial(1).over_binomial(3).over_binomial(5);
    return s;
}

template <typename Int = integer>
basic_series<Int> c41_simplified(std::size_t order)
{
    basic_series<Int> inner(order);
    for (std::size_t n = 0; n <= order; ++n) {
        auto t = basic_series<Int>::one(order - n);
        t.times_binomial(2 * n + 3).times_binomial(2 * n + 5);
        inner.add_shifted(t, n);
    }
    inner.over_binomial(1).over_binomial(3).over_binomial(5);
    return shift(inner, 1);
}

inline bool c41_admissible(std::size_t n) noexcept
{
    return n >= 2 && (2 * n + 3) % 3 != 0 && (2 * n + 5) % 3 != 0;
}

template <typename Int>
std::optional<std::size_t> first_negative(const basic_series<Int> &s)
{
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (s[i] < 0) {
            return i;
        }
    }
    return std::nullopt;
}

// For n with 3 | 2n - 2, splits c41_factor(n) as
//   (1-q^{2n+5})/((1-q)(1-q^5)) (1-q^{2n-2})/(1-q^3) + q^{2n-2} (1-q^{2n+5})/((1-q)(1-q^3))
// and checks the sum and the nonnegativity of both summands.
template <typename Int = integer>
verdict c41_decomposition_check(std::size_t n, std::size_t order)
{
    if (!c41_admissible(n)) {
        throw std::invalid_argument("c41_decomposition_check: n=" + std::to_string(n)
                                    + " needs n >= 2 with 3 dividing neither 2n+3 nor 2n+5");
    }
    const std::string name = "c41decomp n=" + std::to_string(n);
    using S = basic_series<Int>;

    auto first = S::one(order);
    first.times_binomial(2 * n + 5).times_binomial(2 * n - 2);
    first.over_binomial(1).over_binomial(5).over_binomial(3);

    auto second = S::monomial(2 * n - 2, order);
    second.times_binomial(2 * n + 5).over_binomial(1).over_binomial(3);

    auto v = compare_series(name, c41_factor<Int>(n, order), first + second);
    if (!v) {
        return v;
    }
    if (auto i = first_negative(first)) {
        return verdict::fail(name, "first summand negative", *i, ">= 0", first[*i].str());
    }
    if (auto i = first_negative(second)) {
        return verdict::fail(name, "second summand negative", *i, ">= 0", second[*i].str());
    }
    return verdict::pass(name, "equal, nonnegative");
}

// Nonnegativity of c41_factor(n) directly; covers the residues where 3
// divides 2n+3 or 2n+5 and the quotient is a product of nonnegative pieces.
template <typename Int = integer>
verdict c41_factor_nonnegative(std::size_t n, std::size_t order)
{
    const std::string name = "c41factor n=" + std::to_string(n);
    const auto f = c41_factor<Int>(n, order);
    if (auto i = first_negative(f)) {
        return verdict::fail(name, "negative coefficient", *i, ">= 0", f[*i].str());
    }
    return verdict::pass(name, "nonnegative");
}

// ---------------------------------------------------------------------------
// Conjecture scans

enum class conjecture
{
    ck1, // C'(k,1) positive for every k
    c24, // C'(2,4) positive
    c2m, // is C'(2,m) positive for some m > 4
    d22, // D'(2,2) positive
    d23, // D'(2,3) negative only at 10 and 22
    dkm  // D'(k,m) eventually positive for k > m
};

struct conjecture_target
{
    conjecture which;
    std::size_t k = 0;
    std::size_t m = 0;

    family series_family() const noexcept
    {
        return (which == conjecture::ck1 || which == conjecture::c24 || which == conjecture::c2m) ? family::c
                                                                                                  : family::d;
    }

    // The (k, m) the scan runs on; presets fix what the target pins.
    family_params params() const
    {
        switch (which) {
            case conjecture::ck1:
                return {k, 1};
            case conjecture::c24:
                return {2, 4};
            case conjecture::c2m:
                return {2, m};
            case conjecture::d22:
                return {2, 2};
            case conjecture::d23:
                return {2, 3};
            case conjecture::dkm:
                if (k <= m) {
                    throw std::invalid_argument("conjecture dkm needs k > m");
                }
                return {k, m};
        }
        throw std::invalid_argument("unknown conjecture target");
    }
};

struct conjecture_scan_result
{
    family series_family;
    family_params params;
    scan_report report;
};

inline conjecture_scan_result conjecture_scan(const conjecture_target &target, std::size_t order)
{
    const auto p = target.params();
    const auto f = target.series_family();
    const auto s = f == family::c ? cprime_definitional(p, order) : dprime_definitional(p, order);
    return {f, p, negative_indices(s)};
}

} // namespace qpos

#endif
