#ifndef QPOS_TRIANGULAR_HPP
#define QPOS_TRIANGULAR_HPP

// Sums of two triangular numbers and the counting argument that bounds
//   t2(N) + t2(N-2) + t2(N-4) + ... <= N + 1,
// which is the coefficientwise nonnegativity of D'(2,1).
//
// Everything here is exact integer arithmetic except the final bound and the
// calculus of f(x) = (2x+1) - pi x/2 - 65 pi/16 - 2 sqrt(2x + 1/4).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <qpos/verdict.hpp>

namespace qpos
{

inline std::uint64_t isqrt(std::uint64_t x) noexcept
{
    auto r = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x))), 0xFFFFFFFFu);
    while (r * r > x) {
        --r;
    }
    while (r < 0xFFFFFFFFu && (r + 1) * (r + 1) <= x) {
        ++r;
    }
    return r;
}

inline bool is_triangular(std::uint64_t t) noexcept
{
    const std::uint64_t d = 8 * t + 1;
    const std::uint64_t r = isqrt(d);
    return r * r == d;
}

struct triangle_count
{
    std::uint64_t n = 0;
    std::uint64_t t2 = 0;

    bool operator==(const triangle_count &) const = default;
};

// Ordered pairs (a, b) of triangular numbers with a + b = n.
inline triangle_count t2_direct(std::uint64_t n)
{
    triangle_count c{n, 0};
    for (std::uint64_t x = 0, a = 0; a <= n; ++x, a += x) {
        if (is_triangular(n - a)) {
            ++c.t2;
        }
    }
    return c;
}

inline std::vector<std::uint64_t> t2_table(std::uint64_t max_n)
{
    std::vector<std::uint64_t> t(max_n + 1);
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        t[n] = t2_direct(n).t2;
    }
    return t;
}

struct keysum_result
{
    std::uint64_t N = 0;
    std::uint64_t sum = 0;   // t2(N) + t2(N-2) + ...
    std::uint64_t bound = 0; // N + 1

    bool holds() const noexcept { return sum <= bound; }
    // N + 1 - sum, which is the coefficient of q^N in D'(2,1).
    std::int64_t margin() const noexcept { return static_cast<std::int64_t>(bound) - static_cast<std::int64_t>(sum); }
};

inline keysum_result keysum_check(std::uint64_t N)
{
    keysum_result r{N, 0, N + 1};
    for (std::uint64_t j = N % 2; j <= N; j += 2) {
        r.sum += t2_direct(j).t2;
    }
    return r;
}

// keysum_check for N = 0 .. max_N from one t2 table.
inline std::vector<keysum_result> keysum_scan(std::uint64_t max_N)
{
    const auto t = t2_table(max_N);
    std::vector<keysum_result> out;
    out.reserve(max_N + 1);
    std::uint64_t parity_sum[2] = {0, 0};
    for (std::uint64_t N = 0; N <= max_N; ++N) {
        parity_sum[N % 2] += t[N];
        out.push_back({N, parity_sum[N % 2], N + 1});
    }
    return out;
}

enum class circle_case
{
    even, // u^2 + v^2 <= 16N + 2,  u^2 + v^2 = 2 mod 16
    odd   // u^2 + v^2 <= 16N + 10, u^2 + v^2 = 10 mod 16
};

// Pairs of positive odd integers (u, v) inside the circle with the residue
// of the case. Each such point is (2x+1, 2y+1) with x(x+1)/2 + y(y+1)/2 = z
// for some z of the case parity not exceeding 2N (resp. 2N + 1).
inline std::uint64_t circle_count(std::uint64_t N, circle_case which)
{
    const std::uint64_t radius_sq = which == circle_case::even ? 16 * N + 2 : 16 * N + 10;
    const std::uint64_t residue = which == circle_case::even ? 2 : 10;
    std::uint64_t count = 0;
    for (std::uint64_t u = 1; u * u < radius_sq; u += 2) {
        for (std::uint64_t v = 1; u * u + v * v <= radius_sq; v += 2) {
            if ((u * u + v * v) % 16 == residue) {
                ++count;
            }
        }
    }
    return count;
}

// pi N / 2 + 65 pi / 16 + 2 sqrt(2N + 1/4)
inline double circle_bound(std::uint64_t N)
{
    const double n = static_cast<double>(N);
    return std::numbers::pi * n / 2.0 + 65.0 * std::numbers::pi / 16.0 + 2.0 * std::sqrt(2.0 * n + 0.25);
}

inline verdict circle_bound_check(std::uint64_t N)
{
    const std::string name = "circle bound N=" + std::to_string(N);
    const auto count = circle_count(N, circle_case::even);
    const double bound = circle_bound(N);
    if (static_cast<double>(count) <= bound + 1e-9) {
        return verdict::pass(name, "holds");
    }
    return verdict::fail(name, "lattice count exceeds bound", N, "<= " + std::to_string(bound),
                         std::to_string(count));
}

// ---------------------------------------------------------------------------

inline double keysum_f(double x)
{
    return (2.0 * x + 1.0) - std::numbers::pi * x / 2.0 - 65.0 * std::numbers::pi / 16.0
           - 2.0 * std::sqrt(2.0 * x + 0.25);
}

inline double keysum_f_prime(double x)
{
    return 2.0 - std::numbers::pi / 2.0 - 2.0 / std::sqrt(2.0 * x + 0.25);
}

inline double keysum_f_second(double x)
{
    return 2.0 * std::pow(2.0 * x + 0.25, -1.5);
}

struct calc_check
{
    double x;
    double f;
    double df;
    double d2f;
};

struct calc_report
{
    double f_at_90 = 0;
    double slope_constant = 0; // 2 - pi/2 - 4/11, which is f'(15)
    std::vector<calc_check> samples;
    std::vector<verdict> checks;

    bool ok() const noexcept
    {
        for (const auto &c : checks) {
            if (!c) {
                return false;
            }
        }
        return true;
    }
};

// f(90) = 0.0141..., 2 - pi/2 - 4/11 = 0.06556..., f' > 0 on 15..200 and
// f'' > 0 on 0..200.
inline calc_report f_checks()
{
    calc_report r;
    r.f_at_90 = keysum_f(90.0);
    r.slope_constant = 2.0 - std::numbers::pi / 2.0 - 4.0 / 11.0;
    for (int x = 0; x <= 200; ++x) {
        const double xd = x;
        r.samples.push_back({xd, keysum_f(xd), keysum_f_prime(xd), keysum_f_second(xd)});
    }

    auto near = [](std::string name, double got, double want, double tol) {
        if (std::abs(got - want) <= tol) {
            return verdict::pass(std::move(name), "within tolerance");
        }
        return verdict::fail(std::move(name), "outside tolerance", std::nullopt, std::to_string(want),
                             std::to_string(got));
    };
    r.checks.push_back(near("f(90)", r.f_at_90, 0.0141, 0.0005));
    r.checks.push_back(near("2 - pi/2 - 4/11", r.slope_constant, 0.06556, 0.00005));

    verdict rising = verdict::pass("f' > 0 on [15, 200]", "holds");
    verdict convex = verdict::pass("f'' > 0 on [0, 200]", "holds");
    for (const auto &s : r.samples) {
        if (s.x >= 15 && !(s.df > 0) && rising) {
            rising = verdict::fail(rising.check, "nonpositive derivative", static_cast<std::size_t>(s.x), "> 0",
                                   std::to_string(s.df));
        }
        if (!(s.d2f > 0) && convex) {
            convex = verdict::fail(convex.check, "nonpositive second derivative", static_cast<std::size_t>(s.x),
                                   "> 0", std::to_string(s.d2f));
        }
    }
    r.checks.push_back(rising);
    r.checks.push_back(convex);
    return r;
}

} // namespace qpos

#endif
