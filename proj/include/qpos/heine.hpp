#ifndef QPOS_HEINE_HPP
#define QPOS_HEINE_HPP

// The chain of equalities that turns the definitional C' sum into its closed
// form, each line evaluated as its own truncated series. The second line is
// a 2phi1 in base q^2 at a = b = q, c = q^{2k}, z = q^{2m}; Heine's first
// transformation then moves it to a 2phi1 at argument q.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <qpos/families.hpp>
#include <qpos/series.hpp>
#include <qpos/verdict.hpp>

namespace qpos
{

// sign * q^exponent
struct q_monomial
{
    int sign = 1;
    std::size_t exponent = 0;
};

// 2phi1(a, b; c; base, z) = sum_n (a;base)_n (b;base)_n / ((base;base)_n (c;base)_n) z^n
// for monomial parameters in q, with base = q^step. z must carry a positive
// power of q; term n then has minimal degree n * z.exponent.
template <typename Int = integer>
basic_series<Int> phi21(q_monomial a, q_monomial b, q_monomial c, std::size_t step, q_monomial z,
                        std::size_t order)
{
    if (z.exponent == 0) {
        throw std::invalid_argument("phi21: argument z must be divisible by q");
    }
    if (step == 0) {
        throw std::invalid_argument("phi21: base must be a positive power of q");
    }
    basic_series<Int> total(order);
    auto term = basic_series<Int>::one(order);
    std::size_t lead = 0;
    int z_sign = 1;
    for (std::size_t n = 0;; ++n) {
        total.add_shifted(term, lead, z_sign);
        lead += z.exponent;
        if (lead > order) {
            break;
        }
        z_sign *= z.sign;
        // term_{n+1} = term_n (1 - a base^n)(1 - b base^n) / ((1 - base^{n+1})(1 - c base^n))
        term.shrink_to(order - lead);
        term.times_binomial(a.exponent + step * n, a.sign).times_binomial(b.exponent + step * n, b.sign);
        term.over_binomial(step * (n + 1)).over_binomial(c.exponent + step * n, c.sign);
    }
    return total;
}

namespace detail
{

// q^m (q^2, q^{2k}; q^2)_inf / (q; q^2)_inf^2 at the given order.
template <typename Int>
basic_series<Int> heine_prefactor(const family_params &p, std::size_t order)
{
    return shift(leading_product<Int>(p.k, order), p.m);
}

} // namespace detail

// Every line of the chain, in order; adjacent lines must agree.
template <typename Int = integer>
std::vector<named_series<Int>> heine_chain(const family_params &p, std::size_t order)
{
    using S = basic_series<Int>;
    const std::size_t k = p.k;
    const std::size_t m = p.m;
    std::vector<named_series<Int>> lines;

    lines.push_back({"sum q^{m(2n+1)} (q^{2n+2},q^{2n+2k};q^2)_inf / (q^{2n+1};q^2)_inf^2",
                     cprime_definitional<Int>(p, order)});

    const auto prefactor = detail::heine_prefactor<Int>(p, order);

    {
        // sum q^{2mn} (q;q^2)_n^2 / (q^2,q^{2k};q^2)_n, each term built directly
        S sum(order);
        for (std::size_t n = 0; 2 * m * n <= order; ++n) {
            const std::size_t window = order - 2 * m * n;
            auto t = poch<Int>(poch_spec::finite(1, 2, n), window);
            t = times_poch(std::move(t), poch_spec::finite(1, 2, n));
            t = over_poch(std::move(t), poch_spec::finite(2, 2, n));
            t = over_poch(std::move(t), poch_spec::finite(2 * k, 2, n));
            sum.add_shifted(t, 2 * m * n);
        }
        lines.push_back({"q^m (q^2,q^{2k};q^2)_inf/(q;q^2)_inf^2 sum q^{2mn} (q;q^2)_n^2/(q^2,q^{2k};q^2)_n",
                         prefactor * sum});
    }

    lines.push_back({"q^m (q^2,q^{2k};q^2)_inf/(q;q^2)_inf^2 2phi1(q,q;q^{2k};q^2,q^{2m})",
                     prefactor * phi21<Int>({1, 1}, {1, 1}, {1, 2 * k}, 2, {1, 2 * m}, order)});

    // (q, q^{2m+1}; q^2)_inf / (q^{2k}, q^{2m}; q^2)_inf
    auto heine_factor = poch<Int>(poch_spec::infinite(1, 2), order);
    heine_factor = times_poch(std::move(heine_factor), poch_spec::infinite(2 * m + 1, 2));
    heine_factor = over_poch(std::move(heine_factor), poch_spec::infinite(2 * k, 2));
    heine_factor = over_poch(std::move(heine_factor), poch_spec::infinite(2 * m, 2));
    const auto transformed_prefactor = prefactor * heine_factor;

    lines.push_back({"... (q,q^{2m+1};q^2)_inf/(q^{2k},q^{2m};q^2)_inf 2phi1(q^{2k-1},q^{2m};q^{2m+1};q^2,q)",
                     transformed_prefactor
                         * phi21<Int>({1, 2 * k - 1}, {1, 2 * m}, {1, 2 * m + 1}, 2, {1, 1}, order)});

    {
        // sum q^n (q^{2k-1},q^{2m};q^2)_n / (q^2,q^{2m+1};q^2)_n, each term built directly
        S sum(order);
        for (std::size_t n = 0; n <= order; ++n) {
            auto t = poch<Int>(poch_spec::finite(2 * k - 1, 2, n), order - n);
            t = times_poch(std::move(t), poch_spec::finite(2 * m, 2, n));
            t = over_poch(std::move(t), poch_spec::finite(2, 2, n));
            t = over_poch(std::move(t), poch_spec::finite(2 * m + 1, 2, n));
            sum.add_shifted(t, n);
        }
        lines.push_back({"... sum q^n (q^{2k-1},q^{2m};q^2)_n/(q^2,q^{2m+1};q^2)_n", transformed_prefactor * sum});
    }

    {
        // q^m (q^{2k-1};q^2)_inf / (q;q^2)_inf sum q^n (q^{2n+2},q^{2n+2m+1};q^2)_inf / (q^{2n+2k-1},q^{2n+2m};q^2)_inf
        S result(order);
        if (m <= order) {
            const std::size_t window = order - m;
            S sum(window);
            for (std::size_t n = 0; n <= window; ++n) {
                auto t = poch<Int>(poch_spec::infinite(2 * n + 2, 2), window - n);
                t = times_poch(std::move(t), poch_spec::infinite(2 * n + 2 * m + 1, 2));
                t = over_poch(std::move(t), poch_spec::infinite(2 * n + 2 * k - 1, 2));
                t = over_poch(std::move(t), poch_spec::infinite(2 * n + 2 * m, 2));
                sum.add_shifted(t, n);
            }
            sum = times_poch(std::move(sum), poch_spec::infinite(2 * k - 1, 2));
            sum = over_poch(std::move(sum), poch_spec::infinite(1, 2));
            result.add_shifted(sum, m);
        }
        lines.push_back({"q^m (q^{2k-1};q^2)_inf/(q;q^2)_inf sum q^n (q^{2n+2},q^{2n+2m+1};q^2)_inf"
                         "/(q^{2n+2k-1},q^{2n+2m};q^2)_inf",
                         std::move(result)});
    }

    lines.push_back({m >= k ? "closed form, m >= k branch" : "closed form, m < k branch", cprime_closed<Int>(p, order)});
    return lines;
}

// First pair of adjacent chain lines that disagree, or "all equal".
template <typename Int = integer>
verdict heine_chain_check(const family_params &p, std::size_t order)
{
    const auto lines = heine_chain<Int>(p, order);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        auto v = compare_series("heine", lines[i].value, lines[i + 1].value);
        if (!v) {
            v.detail = "lines " + std::to_string(i) + " and " + std::to_string(i + 1) + " differ";
            return v;
        }
    }
    return verdict::pass("heine", "all equal");
}

} // namespace qpos

#endif
