#ifndef QPOS_ORACLE_HPP
#define QPOS_ORACLE_HPP

// Plain exhaustive enumeration of the two-color partition classes whose
// weighted counts the C' and D' series generate. This is the ground truth
// the series are checked against, so it deliberately avoids any counting
// shortcut: every admissible partition is built and visited.
//
// Family C, smallest part s odd:
//   at least m blue copies of s; blue odd parts >= s, any multiplicity;
//   blue even parts >= s + 2k - 1, distinct; green odd parts >= s, any
//   multiplicity; green even parts >= s + 1, distinct.
//   Weight (-1)^(number of even parts).
// Family D, smallest part s even:
//   exactly m blue copies of s; blue odd parts >= s + 1, any multiplicity;
//   blue even parts >= s + 2k, distinct; green odd parts >= s + 1, any
//   multiplicity; green even parts >= s + 2, distinct.
//   Weight (-1)^(number of even parts greater than s).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <qpos/families.hpp>
#include <qpos/parallel.hpp>
#include <qpos/series.hpp>
#include <qpos/verdict.hpp>

namespace qpos
{

enum class color : std::uint8_t
{
    blue,
    green
};

struct part
{
    std::size_t value;
    qpos::color color;
    std::size_t multiplicity;

    bool operator==(const part &) const = default;
};

// Parts in canonical order: descending value, blue before green at equal
// value, one entry per (value, color).
class two_color_partition
{
public:
    two_color_partition() = default;

    explicit two_color_partition(std::vector<part> parts) : parts_(std::move(parts))
    {
        std::erase_if(parts_, [](const part &p) { return p.multiplicity == 0; });
        std::sort(parts_.begin(), parts_.end(), [](const part &a, const part &b) {
            return a.value != b.value ? a.value > b.value : a.color < b.color;
        });
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i].value == 0) {
                throw std::invalid_argument("two_color_partition: parts must be positive");
            }
            if (i > 0 && parts_[i].value == parts_[i - 1].value && parts_[i].color == parts_[i - 1].color) {
                throw std::invalid_argument("two_color_partition: duplicate (value, color) entry");
            }
        }
    }

    const std::vector<part> &parts() const noexcept { return parts_; }

    bool empty() const noexcept { return parts_.empty(); }

    std::size_t total() const noexcept
    {
        std::size_t s = 0;
        for (const auto &p : parts_) {
            s += p.value * p.multiplicity;
        }
        return s;
    }

    // s(pi); zero for the empty partition.
    std::size_t smallest() const noexcept { return parts_.empty() ? 0 : parts_.back().value; }

    std::size_t multiplicity(std::size_t value, qpos::color c) const noexcept
    {
        for (const auto &p : parts_) {
            if (p.value == value && p.color == c) {
                return p.multiplicity;
            }
        }
        return 0;
    }

    // Number of even parts strictly greater than `above`, counted with multiplicity.
    std::size_t even_parts_above(std::size_t above) const noexcept
    {
        std::size_t n = 0;
        for (const auto &p : parts_) {
            if (p.value % 2 == 0 && p.value > above) {
                n += p.multiplicity;
            }
        }
        return n;
    }

    std::size_t even_part_count() const noexcept { return even_parts_above(0); }

    std::string to_string() const
    {
        std::string s = "{";
        for (const auto &p : parts_) {
            for (std::size_t j = 0; j < p.multiplicity; ++j) {
                if (s.size() > 1) {
                    s += ',';
                }
                s += std::to_string(p.value) + (p.color == color::blue ? 'b' : 'g');
            }
        }
        return s + "}";
    }

    bool operator==(const two_color_partition &) const = default;

private:
    std::vector<part> parts_;
};

// Independent membership predicates straight from the class definitions.
inline bool is_member_c(const family_params &p, const two_color_partition &pi)
{
    if (pi.empty()) {
        return false;
    }
    const std::size_t s = pi.smallest();
    if (s % 2 == 0 || pi.multiplicity(s, color::blue) < p.m) {
        return false;
    }
    for (const auto &q : pi.parts()) {
        if (q.value % 2 == 1) {
            continue;
        }
        if (q.multiplicity > 1) {
            return false;
        }
        if (q.color == color::blue && q.value < s + 2 * p.k - 1) {
            return false;
        }
    }
    return true;
}

inline bool is_member_d(const family_params &p, const two_color_partition &pi)
{
    if (pi.empty()) {
        return false;
    }
    const std::size_t s = pi.smallest();
    if (s % 2 == 1 || pi.multiplicity(s, color::blue) != p.m || pi.multiplicity(s, color::green) != 0) {
        return false;
    }
    for (const auto &q : pi.parts()) {
        if (q.value % 2 == 1 || q.value == s) {
            continue;
        }
        if (q.multiplicity > 1) {
            return false;
        }
        if (q.color == color::blue && q.value < s + 2 * p.k) {
            return false;
        }
    }
    return true;
}

namespace detail
{

struct slot
{
    std::size_t value;
    qpos::color color;
    std::size_t max_multiplicity;
};

template <typename Visitor>
void assign_slots(const std::vector<slot> &slots, std::size_t index, std::size_t remaining, std::vector<part> &chosen,
                  const std::vector<part> &mandatory, Visitor &visit)
{
    if (remaining == 0) {
        std::vector<part> all = chosen;
        for (const auto &m : mandatory) {
            auto it = std::find_if(all.begin(), all.end(),
                                   [&](const part &q) { return q.value == m.value && q.color == m.color; });
            if (it != all.end()) {
                it->multiplicity += m.multiplicity;
            } else {
                all.push_back(m);
            }
        }
        visit(two_color_partition(std::move(all)));
        return;
    }
    if (index == slots.size()) {
        return;
    }
    const slot &sl = slots[index];
    const std::size_t most = std::min(sl.max_multiplicity, remaining / sl.value);
    for (std::size_t mult = most + 1; mult-- > 0;) {
        if (mult > 0) {
            chosen.push_back({sl.value, sl.color, mult});
        }
        assign_slots(slots, index + 1, remaining - mult * sl.value, chosen, mandatory, visit);
        if (mult > 0) {
            chosen.pop_back();
        }
    }
}

enum class oracle_family
{
    c,
    d
};

template <typename Visitor>
void for_each_member(oracle_family fam, const family_params &p, std::size_t n, Visitor &&visit)
{
    constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();
    const std::size_t first = fam == oracle_family::c ? 1 : 2;
    for (std::size_t s = first; p.m * s <= n; s += 2) {
        std::vector<slot> slots;
        for (std::size_t v = n; v >= s; --v) {
            const bool odd = v % 2 == 1;
            if (fam == oracle_family::c) {
                if (odd) {
                    slots.push_back({v, color::blue, unbounded});
                    slots.push_back({v, color::green, unbounded});
                } else {
                    if (v >= s + 2 * p.k - 1) {
                        slots.push_back({v, color::blue, 1});
                    }
                    if (v >= s + 1) {
                        slots.push_back({v, color::green, 1});
                    }
                }
            } else {
                if (odd) {
                    if (v >= s + 1) {
                        slots.push_back({v, color::blue, unbounded});
                        slots.push_back({v, color::green, unbounded});
                    }
                } else {
                    if (v >= s + 2 * p.k) {
                        slots.push_back({v, color::blue, 1});
                    }
                    if (v >= s + 2) {
                        slots.push_back({v, color::green, 1});
                    }
                }
            }
            if (v == s) {
                break;
            }
        }
        std::vector<part> chosen;
        const std::vector<part> mandatory{{s, color::blue, p.m}};
        assign_slots(slots, 0, n - p.m * s, chosen, mandatory, visit);
    }
}

} // namespace detail

// Calls visit(const two_color_partition&) for each member of C(k,m,n).
template <typename Visitor>
void for_each_c(const family_params &p, std::size_t n, Visitor &&visit)
{
    detail::for_each_member(detail::oracle_family::c, p, n, visit);
}

template <typename Visitor>
void for_each_d(const family_params &p, std::size_t n, Visitor &&visit)
{
    detail::for_each_member(detail::oracle_family::d, p, n, visit);
}

// Practical for n up to about 60.
inline std::vector<two_color_partition> enumerate_c(const family_params &p, std::size_t n)
{
    std::vector<two_color_partition> out;
    for_each_c(p, n, [&](two_color_partition pi) { out.push_back(std::move(pi)); });
    return out;
}

inline std::vector<two_color_partition> enumerate_d(const family_params &p, std::size_t n)
{
    std::vector<two_color_partition> out;
    for_each_d(p, n, [&](two_color_partition pi) { out.push_back(std::move(pi)); });
    return out;
}

// Members split by the parity of their sign statistic: even_weight counts
// C0 (D0), odd_weight counts C1 (D1).
struct weighted_counts
{
    integer even_weight = 0;
    integer odd_weight = 0;

    integer difference() const { return even_weight - odd_weight; }
    integer total() const { return even_weight + odd_weight; }

    bool operator==(const weighted_counts &) const = default;
};

inline weighted_counts weighted_counts_c(const family_params &p, std::size_t n)
{
    weighted_counts w;
    for_each_c(p, n, [&](const two_color_partition &pi) {
        (pi.even_part_count() % 2 == 0 ? w.even_weight : w.odd_weight) += 1;
    });
    return w;
}

inline weighted_counts weighted_counts_d(const family_params &p, std::size_t n)
{
    weighted_counts w;
    for_each_d(p, n, [&](const two_color_partition &pi) {
        (pi.even_parts_above(pi.smallest()) % 2 == 0 ? w.even_weight : w.odd_weight) += 1;
    });
    return w;
}

inline weighted_counts weighted_counts_for(family f, const family_params &p, std::size_t n)
{
    return f == family::c ? weighted_counts_c(p, n) : weighted_counts_d(p, n);
}

// Coefficient-by-coefficient comparison of the enumeration against the
// series of `kind` for n = 0 .. nmax: signed kinds compare differences,
// unsigned kinds compare totals.
inline verdict oracle_vs_series(series_kind kind, const family_params &p, std::size_t nmax, unsigned threads = 1)
{
    const auto s = family_series(kind, p, nmax);
    const auto counts
        = parallel_map(nmax + 1, threads, [&](std::size_t n) { return weighted_counts_for(family_of(kind), p, n); });
    const std::string name = "oracle " + std::string(to_string(kind));
    for (std::size_t n = 0; n <= nmax; ++n) {
        const integer got = is_signed(kind) ? counts[n].difference() : counts[n].total();
        if (got != s[n]) {
            return verdict::fail(name, "enumeration disagrees with series", n, s[n].str(), got.str());
        }
    }
    return verdict::pass(name, "match");
}

} // namespace qpos

#endif
