#ifndef QPOS_FAMILIES_HPP
#define QPOS_FAMILIES_HPP

// Generating functions of the signed two-color partition families
//
//   sum_n C'(k,m,n) q^n = sum_{n>=0} q^{m(2n+1)} (q^{2n+2}, q^{2n+2k}; q^2)_inf / (q^{2n+1}; q^2)_inf^2
//   sum_n D'(k,m,n) q^n = sum_{n>=0} q^{m(2n+2)} (q^{2n+4}, q^{2n+2+2k}; q^2)_inf / (q^{2n+3}; q^2)_inf^2
//
// together with their closed forms, the unsigned companions (the same
// products with -q arguments), a handful of simplified special cases and
// the generating function of t_2(n).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <qpos/series.hpp>
#include <qpos/verdict.hpp>

namespace qpos
{

struct family_params
{
    std::size_t k;
    std::size_t m;

    family_params(std::size_t k_, std::size_t m_) : k(k_), m(m_)
    {
        if (k < 1 || m < 1) {
            throw std::invalid_argument("family_params: k and m must be positive integers");
        }
    }

    bool operator==(const family_params &) const = default;
};

enum class family
{
    c,
    d
};

enum class series_kind
{
    c_signed,
    c_unsigned,
    d_signed,
    d_unsigned
};

constexpr family family_of(series_kind kind) noexcept
{
    return (kind == series_kind::c_signed || kind == series_kind::c_unsigned) ? family::c : family::d;
}

constexpr bool is_signed(series_kind kind) noexcept
{
    return kind == series_kind::c_signed || kind == series_kind::d_signed;
}

constexpr series_kind make_kind(family f, bool signed_kind) noexcept
{
    if (f == family::c) {
        return signed_kind ? series_kind::c_signed : series_kind::c_unsigned;
    }
    return signed_kind ? series_kind::d_signed : series_kind::d_unsigned;
}

inline std::string_view to_string(series_kind kind) noexcept
{
    switch (kind) {
        case series_kind::c_signed:
            return "C-signed";
        case series_kind::c_unsigned:
            return "C-unsigned";
        case series_kind::d_signed:
            return "D-signed";
        case series_kind::d_unsigned:
            return "D-unsigned";
    }
    return "?";
}

namespace detail
{

// sum_{n>=0} q^{m(2n+lead)} (s q^{2n+a}, s q^{2n+b}; q^2)_inf / (q^{2n+den}; q^2)_inf^2
//
// Term n has minimal degree m(2n+lead), so the outer sum stops once that
// exceeds the order. Consecutive product parts differ by
//   (1 - q^{2n+den})^2 / ((1 - s q^{2n+a}) (1 - s q^{2n+b})),
// which lets each term reuse the previous one, truncated to its own window.
template <typename Int>
basic_series<Int> two_color_sum(std::size_t m, std::size_t lead, std::size_t a, std::size_t b, std::size_t den,
                                int sign, std::size_t order)
{
    basic_series<Int> total(order);
    std::size_t shift_by = m * lead;
    if (shift_by > order) {
        return total;
    }

    auto term = poch<Int>(poch_spec::infinite(a, 2, sign), order - shift_by);
    term = times_poch(std::move(term), poch_spec::infinite(b, 2, sign));
    term = over_poch(std::move(term), poch_spec::infinite(den, 2));
    term = over_poch(std::move(term), poch_spec::infinite(den, 2));

    for (std::size_t n = 0;; ++n) {
        total.add_shifted(term, shift_by);
        shift_by += 2 * m;
        if (shift_by > order) {
            break;
        }
        term.shrink_to(order - shift_by);
        term.times_binomial(2 * n + den).times_binomial(2 * n + den);
        term.over_binomial(2 * n + a, sign).over_binomial(2 * n + b, sign);
    }
    return total;
}

} // namespace detail

template <typename Int = integer>
basic_series<Int> cprime_definitional(const family_params &p, std::size_t order)
{
    return detail::two_color_sum<Int>(p.m, 1, 2, 2 * p.k, 1, 1, order);
}

template <typename Int = integer>
basic_series<Int> dprime_definitional(const family_params &p, std::size_t order)
{
    return detail::two_color_sum<Int>(p.m, 2, 4, 2 + 2 * p.k, 3, 1, order);
}

// Generating function of the total counts C0 + C1 (resp. D0 + D1).
template <typename Int = integer>
basic_series<Int> unsigned_series(series_kind kind, const family_params &p, std::size_t order)
{
    switch (kind) {
        case series_kind::c_unsigned:
            return detail::two_color_sum<Int>(p.m, 1, 2, 2 * p.k, 1, -1, order);
        case series_kind::d_unsigned:
            return detail::two_color_sum<Int>(p.m, 2, 4, 2 + 2 * p.k, 3, -1, order);
        default:
            throw std::invalid_argument("unsigned_series: kind must be C-unsigned or D-unsigned");
    }
}

template <typename Int = integer>
basic_series<Int> family_series(series_kind kind, const family_params &p, std::size_t order)
{
    switch (kind) {
        case series_kind::c_signed:
            return cprime_definitional<Int>(p, order);
        case series_kind::d_signed:
            return dprime_definitional<Int>(p, order);
        default:
            return unsigned_series<Int>(kind, p, order);
    }
}

// Closed form of the C' series:
//   q^m / (q;q^2)_{k-1} sum_n q^n (q^{2n+2};q^2)_{m-1} / (q^{2n+2k-1};q^2)_{m-k+1}    (m >= k)
//   q^m / (q;q^2)_{k-1} sum_n q^n (q^{2n+2};q^2)_{m-1} (q^{2n+2m+1};q^2)_{k-m-1}     (m <  k)
// Term n has minimal degree m + n.
template <typename Int = integer>
basic_series<Int> cprime_closed(const family_params &p, std::size_t order)
{
    basic_series<Int> result(order);
    if (p.m > order) {
        return result;
    }
    const std::size_t window = order - p.m;
    basic_series<Int> inner(window);
    for (std::size_t n = 0; n <= window; ++n) {
        auto term = poch<Int>(poch_spec::finite(2 * n + 2, 2, p.m - 1), window - n);
        if (p.m >= p.k) {
            term = over_poch(std::move(term), poch_spec::finite(2 * n + 2 * p.k - 1, 2, p.m - p.k + 1));
        } else {
            term = times_poch(std::move(term), poch_spec::finite(2 * n + 2 * p.m + 1, 2, p.k - p.m - 1));
        }
        inner.add_shifted(term, n);
    }
    inner = over_poch(std::move(inner), poch_spec::finite(1, 2, p.k - 1));
    result.add_shifted(inner, p.m);
    return result;
}

// (q^2, q^{2k}; q^2)_inf / (q; q^2)_inf^2, the n = 0 product of the C' sum.
template <typename Int = integer>
basic_series<Int> leading_product(std::size_t k, std::size_t order)
{
    auto s = poch<Int>(poch_spec::infinite(2, 2), order);
    s = times_poch(std::move(s), poch_spec::infinite(2 * k, 2));
    s = over_poch(std::move(s), poch_spec::infinite(1, 2));
    return over_poch(std::move(s), poch_spec::infinite(1, 2));
}

// D' series as q^{-m} C'(q) - (q^2, q^{2k}; q^2)_inf / (q; q^2)_inf^2, with C'
// taken from the closed form. The division by q^m is an exact shift; a
// nonzero coefficient below q^m is an internal inconsistency.
template <typename Int = integer>
basic_series<Int> dprime_via_relation(const family_params &p, std::size_t order)
{
    auto c = cprime_closed<Int>(p, order + p.m);
    for (std::size_t i = 0; i < p.m; ++i) {
        if (c[i] != 0) {
            throw verification_error("dprime_via_relation: C' has coefficient " + to_decimal(c[i]) + " at q^"
                                     + std::to_string(i) + " below q^m");
        }
    }
    return lower(c, p.m) - leading_product<Int>(p.k, order);
}

// A simplified form of the C' series next to the label of the formula it
// rebuilds.
template <typename Int>
struct named_series
{
    std::string label;
    basic_series<Int> value;
};

// Simplified closed forms known for (k, m) in {(1,1), (2,1), (2,2), (3,1)},
// each rebuilt from geometric pieces without the Pochhammer machinery of
// cprime_definitional. Empty for every other (k, m).
template <typename Int = integer>
std::vector<named_series<Int>> special_forms(const family_params &p, std::size_t order)
{
    using S = basic_series<Int>;
    std::vector<named_series<Int>> forms;
    const auto one = S::one(order);

    if (p.k == 1 && p.m == 1) {
        // sum_n q^{n+1} / (1 - q^{2n+1})
        S s(order);
        for (std::size_t n = 0; n + 1 <= order; ++n) {
            s.add_shifted(geometric<Int>(2 * n + 1, order), n + 1);
        }
        forms.push_back({"C'(1,1): sum q^{n+1}/(1-q^{2n+1})", std::move(s)});
    } else if (p.k == 2 && p.m == 1) {
        // q / (1 - q)^2
        auto g = geometric<Int>(1, order);
        forms.push_back({"C'(2,1): q/(1-q)^2", shift(g * g, 1)});
    } else if (p.k == 2 && p.m == 2) {
        // sum_n q^{n+2} (1 - q^{2n+2}) / ((1 - q)(1 - q^{2n+3}))
        S a(order);
        for (std::size_t n = 0; n + 2 <= order; ++n) {
            auto t = one;
            t.times_binomial(2 * n + 2).over_binomial(1).over_binomial(2 * n + 3);
            a.add_shifted(t, n + 2);
        }
        forms.push_back({"C'(2,2): sum q^{n+2}(1-q^{2n+2})/((1-q)(1-q^{2n+3}))", std::move(a)});

        // q^2 / (1 - q)^2 - sum_n q^{3n+4} / (1 - q^{2n+3})
        auto g = geometric<Int>(1, order);
        S b = shift(g * g, 2);
        for (std::size_t n = 0; 3 * n + 4 <= order; ++n) {
            b.add_shifted(geometric<Int>(2 * n + 3, order), 3 * n + 4, -1);
        }
        forms.push_back({"C'(2,2): q^2/(1-q)^2 - sum q^{3n+4}/(1-q^{2n+3})", std::move(b)});
    } else if (p.k == 3 && p.m == 1) {
        // sum_n q^{n+1} (1 - q^{2n+3}) / ((1 - q)(1 - q^3))
        S a(order);
        for (std::size_t n = 0; n + 1 <= order; ++n) {
            auto t = one;
            t.times_binomial(2 * n + 3).over_binomial(1).over_binomial(3);
            a.add_shifted(t, n + 1);
        }
        forms.push_back({"C'(3,1): sum q^{n+1}(1-q^{2n+3})/((1-q)(1-q^3))", std::move(a)});

        // q (1 + q + q^2 - q^3) / ((1 - q)(1 - q^3)^2), denominator through invert()
        std::vector<Int> num(order + 1, Int(0));
        const int pattern[] = {0, 1, 1, 1, -1};
        for (std::size_t i = 0; i < 5 && i <= order; ++i) {
            num[i] = pattern[i];
        }
        auto den = poch<Int>(poch_spec::finite(1, 1, 1), order)
                   * poch<Int>(poch_spec::finite(3, 1, 1), order)
                   * poch<Int>(poch_spec::finite(3, 1, 1), order);
        forms.push_back({"C'(3,1): q(1+q+q^2-q^3)/((1-q)(1-q^3)^2)", S(std::move(num)) * invert(den)});
    }
    return forms;
}

// sum_n q^{n(n+1)/2}
template <typename Int = integer>
basic_series<Int> triangular_indicator(std::size_t order)
{
    std::vector<Int> c(order + 1, Int(0));
    for (std::size_t x = 0, t = 0; t <= order; ++x, t += x) {
        c[t] = 1;
    }
    return basic_series<Int>(std::move(c));
}

// (q^2;q^2)_inf / (q;q^2)_inf, equal to triangular_indicator by Gauss.
template <typename Int = integer>
basic_series<Int> gauss_product(std::size_t order)
{
    auto s = poch<Int>(poch_spec::infinite(2, 2), order);
    return over_poch(std::move(s), poch_spec::infinite(1, 2));
}

// (q^2;q^2)_inf^2 / (q;q^2)_inf^2 = sum_n t_2(n) q^n
template <typename Int = integer>
basic_series<Int> t2_series(std::size_t order)
{
    auto s = gauss_product<Int>(order);
    s = times_poch(std::move(s), poch_spec::infinite(2, 2));
    return over_poch(std::move(s), poch_spec::infinite(1, 2));
}

} // namespace qpos

#endif
