#ifndef QPOS_VERDICT_HPP
#define QPOS_VERDICT_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <qpos/series.hpp>

namespace qpos
{

// Outcome of one verification. On failure, index/expected/actual locate the
// first offending coefficient when the check is coefficientwise.
struct verdict
{
    std::string check;
    bool ok = true;
    std::string detail = "equal";
    std::optional<std::size_t> index;
    std::string expected;
    std::string actual;

    static verdict pass(std::string check, std::string detail = "equal")
    {
        return {std::move(check), true, std::move(detail), std::nullopt, {}, {}};
    }

    static verdict fail(std::string check, std::string detail, std::optional<std::size_t> index = std::nullopt,
                        std::string expected = {}, std::string actual = {})
    {
        return {std::move(check), false, std::move(detail), index, std::move(expected), std::move(actual)};
    }

    explicit operator bool() const noexcept { return ok; }

    std::string describe() const
    {
        if (ok) {
            return check + ": " + detail;
        }
        std::string s = check + ": " + detail;
        if (index) {
            s += " at index " + std::to_string(*index);
        }
        if (!expected.empty() || !actual.empty()) {
            s += " (expected " + expected + ", got " + actual + ")";
        }
        return s;
    }
};

// Raised when an internal cross-check that must hold does not.
class verification_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

template <typename Int>
std::string to_decimal(const Int &x)
{
    if constexpr (requires { x.str(); }) {
        return x.str();
    } else {
        return std::to_string(x);
    }
}

// Coefficientwise equality up to the smaller order.
template <typename Int>
verdict compare_series(std::string check, const basic_series<Int> &expected, const basic_series<Int> &actual)
{
    if (auto i = first_difference(expected, actual)) {
        return verdict::fail(std::move(check), "mismatch", *i, to_decimal(expected[*i]), to_decimal(actual[*i]));
    }
    return verdict::pass(std::move(check));
}

} // namespace qpos

#endif
