#ifndef QPOS_SERIES_HPP
#define QPOS_SERIES_HPP

// Truncated formal power series in q with exact integer coefficients, plus
// the q-Pochhammer constructors used by every generating function in qpos.
//
// A series of order N stores the coefficients of q^0 .. q^N and is exact
// modulo q^{N+1}. Binary operations return a result of order min(a, b).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpos
{

using integer = boost::multiprecision::cpp_int;

template <typename Int>
class basic_series
{
public:
    using coefficient_type = Int;

    explicit basic_series(std::size_t order) : coeffs_(order + 1, Int(0)) {}

    explicit basic_series(std::vector<Int> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("basic_series: a series needs at least the constant coefficient");
        }
    }

    static basic_series zero(std::size_t order) { return basic_series(order); }

    static basic_series one(std::size_t order) { return monomial(0, order); }

    // c * q^exponent, which is zero when exponent > order.
    static basic_series monomial(std::size_t exponent, std::size_t order, Int c = Int(1))
    {
        basic_series s(order);
        if (exponent <= order) {
            s.coeffs_[exponent] = std::move(c);
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const Int &operator[](std::size_t i) const { return coeffs_[i]; }

    // Coefficient of q^i; throws past the truncation order.
    const Int &at(std::size_t i) const
    {
        if (i > order()) {
            throw std::out_of_range("basic_series::at: index " + std::to_string(i) + " beyond order "
                                    + std::to_string(order()));
        }
        return coeffs_[i];
    }

    std::span<const Int> coefficients() const noexcept { return coeffs_; }

    bool operator==(const basic_series &) const = default;

    basic_series &operator+=(const basic_series &other)
    {
        shrink_to(std::min(order(), other.order()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] += other.coeffs_[i];
        }
        return *this;
    }

    basic_series &operator-=(const basic_series &other)
    {
        shrink_to(std::min(order(), other.order()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] -= other.coeffs_[i];
        }
        return *this;
    }

    basic_series &operator*=(const basic_series &other)
    {
        *this = multiply(*this, other);
        return *this;
    }

    basic_series operator-() const
    {
        basic_series r(*this);
        for (auto &c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    friend basic_series operator+(basic_series a, const basic_series &b) { return a += b; }
    friend basic_series operator-(basic_series a, const basic_series &b) { return a -= b; }
    friend basic_series operator*(const basic_series &a, const basic_series &b) { return multiply(a, b); }

    // Multiply in place by (1 - sign * q^e).
    basic_series &times_binomial(std::size_t e, int sign = 1)
    {
        check_sign(sign);
        if (e == 0) {
            // 1 - q^0 kills everything, 1 + q^0 doubles.
            for (auto &c : coeffs_) {
                c = sign > 0 ? Int(0) : Int(c + c);
            }
            return *this;
        }
        for (std::size_t i = order(); i >= e; --i) {
            if (sign > 0) {
                coeffs_[i] -= coeffs_[i - e];
            } else {
                coeffs_[i] += coeffs_[i - e];
            }
            if (i == e) {
                break;
            }
        }
        return *this;
    }

    // Divide in place by (1 - sign * q^e); e must be positive.
    basic_series &over_binomial(std::size_t e, int sign = 1)
    {
        check_sign(sign);
        if (e == 0) {
            throw std::domain_error("over_binomial: 1 -/+ q^0 is not a unit");
        }
        for (std::size_t i = e; i < coeffs_.size(); ++i) {
            if (sign > 0) {
                coeffs_[i] += coeffs_[i - e];
            } else {
                coeffs_[i] -= coeffs_[i - e];
            }
        }
        return *this;
    }

    // Drop everything above q^new_order; new_order must not exceed order().
    basic_series &shrink_to(std::size_t new_order)
    {
        if (new_order > order()) {
            throw std::invalid_argument("basic_series::shrink_to: cannot raise the order of a truncated series");
        }
        coeffs_.resize(new_order + 1);
        return *this;
    }

    // this += sign * q^A * other, keeping this order. other must be exact far
    // enough: other.order() + A >= order() unless the overlap is empty.
    basic_series &add_shifted(const basic_series &other, std::size_t A, int sign = 1)
    {
        check_sign(sign);
        if (A > order()) {
            return *this;
        }
        if (other.order() + A < order()) {
            throw std::invalid_argument("add_shifted: addend of order " + std::to_string(other.order())
                                        + " shifted by " + std::to_string(A) + " is not exact to order "
                                        + std::to_string(order()));
        }
        for (std::size_t i = A; i < coeffs_.size(); ++i) {
            if (sign > 0) {
                coeffs_[i] += other.coeffs_[i - A];
            } else {
                coeffs_[i] -= other.coeffs_[i - A];
            }
        }
        return *this;
    }

private:
    static void check_sign(int sign)
    {
        if (sign != 1 && sign != -1) {
            throw std::invalid_argument("sign must be +1 or -1");
        }
    }

    static basic_series multiply(const basic_series &a, const basic_series &b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        basic_series r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (b.coeffs_[j] != 0) {
                    r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return r;
    }

    std::vector<Int> coeffs_;
};

using series = basic_series<integer>;

template <typename Int>
basic_series<Int> add(const basic_series<Int> &a, const basic_series<Int> &b)
{
    return a + b;
}

template <typename Int>
basic_series<Int> sub(const basic_series<Int> &a, const basic_series<Int> &b)
{
    return a - b;
}

// Schoolbook Cauchy product truncated at min(a.order(), b.order()).
template <typename Int>
basic_series<Int> mul(const basic_series<Int> &a, const basic_series<Int> &b)
{
    return a * b;
}

// Multiplicative inverse; the constant term must be +1 or -1.
template <typename Int>
basic_series<Int> invert(const basic_series<Int> &a)
{
    const Int &c0 = a[0];
    if (c0 != 1 && c0 != -1) {
        throw std::domain_error("invert: constant term is not a unit");
    }
    const bool unit_is_one = (c0 == 1);
    std::vector<Int> b(a.order() + 1, Int(0));
    b[0] = c0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Int acc(0);
        for (std::size_t k = 1; k <= n; ++k) {
            if (a[k] != 0 && b[n - k] != 0) {
                acc += a[k] * b[n - k];
            }
        }
        // b_n = -c0^{-1} * acc and c0^{-1} = c0.
        b[n] = unit_is_one ? Int(-acc) : acc;
    }
    return basic_series<Int>(std::move(b));
}

// q^A * a at the same order; the top A coefficients fall off.
template <typename Int>
basic_series<Int> shift(const basic_series<Int> &a, std::size_t A)
{
    basic_series<Int> r(a.order());
    r.add_shifted(a, A);
    return r;
}

// q^{-A} * a as an exact coefficient shift. The low window q^0 .. q^{A-1}
// must be zero; the result has order a.order() - A.
template <typename Int>
basic_series<Int> lower(const basic_series<Int> &a, std::size_t A)
{
    if (A > a.order()) {
        throw std::invalid_argument("lower: shift exceeds the truncation order");
    }
    for (std::size_t i = 0; i < A; ++i) {
        if (a[i] != 0) {
            throw std::domain_error("lower: coefficient of q^" + std::to_string(i)
                                    + " is nonzero, division by q^" + std::to_string(A) + " is not exact");
        }
    }
    std::vector<Int> c(a.coefficients().begin() + static_cast<std::ptrdiff_t>(A), a.coefficients().end());
    return basic_series<Int>(std::move(c));
}

template <typename Int>
basic_series<Int> truncate(basic_series<Int> a, std::size_t order)
{
    return std::move(a.shrink_to(order));
}

// 1 / (1 - q^d).
template <typename Int = integer>
basic_series<Int> geometric(std::size_t d, std::size_t order)
{
    if (d == 0) {
        throw std::invalid_argument("geometric: step must be positive");
    }
    auto r = basic_series<Int>::one(order);
    r.over_binomial(d);
    return r;
}

// First index where a and b differ, compared up to the smaller order.
template <typename Int>
std::optional<std::size_t> first_difference(const basic_series<Int> &a, const basic_series<Int> &b)
{
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] != b[i]) {
            return i;
        }
    }
    return std::nullopt;
}

// (sign * q^start; q^step)_count, with count == nullopt meaning infinite.
struct poch_spec
{
    int sign = 1;
    std::size_t start = 0;
    std::size_t step = 1;
    std::optional<std::size_t> count;

    static poch_spec finite(std::size_t start, std::size_t step, std::size_t count, int sign = 1)
    {
        return {sign, start, step, count};
    }

    static poch_spec infinite(std::size_t start, std::size_t step, int sign = 1)
    {
        return {sign, start, step, std::nullopt};
    }

    bool is_infinite() const noexcept { return !count.has_value(); }

    void validate() const
    {
        if (sign != 1 && sign != -1) {
            throw std::invalid_argument("poch_spec: sign must be +1 or -1");
        }
        if (step == 0) {
            throw std::invalid_argument("poch_spec: step must be positive");
        }
        if (is_infinite() && start == 0) {
            throw std::invalid_argument("poch_spec: infinite product needs start >= 1");
        }
    }
};

namespace detail
{

// Calls f(e) for each factor exponent of spec that can affect q^0 .. q^order.
template <typename F>
void for_each_factor(const poch_spec &spec, std::size_t order, F &&f)
{
    spec.validate();
    for (std::size_t j = 0, e = spec.start; e <= order; ++j, e += spec.step) {
        if (spec.count && j >= *spec.count) {
            break;
        }
        f(e);
    }
}

} // namespace detail

// s * (sign q^start; q^step)_count, factor by factor.
template <typename Int>
basic_series<Int> times_poch(basic_series<Int> s, const poch_spec &spec)
{
    // A finite product may still hold a vanishing factor beyond the window
    // only when start == 0, which for_each_factor visits first.
    detail::for_each_factor(spec, s.order(), [&](std::size_t e) { s.times_binomial(e, spec.sign); });
    return s;
}

// s / (sign q^start; q^step)_count. Every factor must be a unit, so start >= 1.
template <typename Int>
basic_series<Int> over_poch(basic_series<Int> s, const poch_spec &spec)
{
    if (spec.start == 0 && (!spec.count || *spec.count > 0)) {
        throw std::domain_error("over_poch: factor 1 -/+ q^0 is not a unit");
    }
    detail::for_each_factor(spec, s.order(), [&](std::size_t e) { s.over_binomial(e, spec.sign); });
    return s;
}

template <typename Int = integer>
basic_series<Int> poch(const poch_spec &spec, std::size_t order)
{
    return times_poch(basic_series<Int>::one(order), spec);
}

} // namespace qpos

#endif
