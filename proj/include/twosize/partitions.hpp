#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twosize/arith.hpp"

namespace twosize {

/* A partition with exactly two part sizes, stored as the quadruple
 * (large_part^large_mult small_part^small_mult) with
 * large_part > small_part >= 1 and both multiplicities >= 1. */
struct TwoSizePartition {
    std::uint64_t large_part = 0;
    std::uint64_t large_mult = 0;
    std::uint64_t small_part = 0;
    std::uint64_t small_mult = 0;

    std::uint64_t weight() const {
        return checked_add(checked_mul(large_part, large_mult),
                           checked_mul(small_part, small_mult));
    }

    friend auto operator<=>(const TwoSizePartition&,
                            const TwoSizePartition&) = default;
};

struct PartMult {
    std::uint64_t part = 0;
    std::uint64_t mult = 0;

    friend auto operator<=>(const PartMult&, const PartMult&) = default;
};

/* Frequency notation for an arbitrary partition: part sizes strictly
 * decreasing, every multiplicity >= 1. */
struct FrequencyPartition {
    std::vector<PartMult> pairs;

    std::uint64_t weight() const {
        std::uint64_t w = 0;
        for (const auto& [part, mult] : pairs)
            w = checked_add(w, checked_mul(part, mult));
        return w;
    }

    friend auto operator<=>(const FrequencyPartition&,
                            const FrequencyPartition&) = default;
};

inline void require_valid(const TwoSizePartition& p) {
    if (p.small_part == 0 || p.large_part <= p.small_part ||
        p.large_mult == 0 || p.small_mult == 0)
        throw std::invalid_argument(
            "TwoSizePartition: requires large_part > small_part >= 1 and "
            "multiplicities >= 1");
}

inline void require_valid(const FrequencyPartition& p) {
    if (p.pairs.empty())
        throw std::invalid_argument("FrequencyPartition: empty partition");
    std::uint64_t prev = UINT64_MAX;
    for (const auto& [part, mult] : p.pairs) {
        if (part == 0 || mult == 0)
            throw std::invalid_argument(
                "FrequencyPartition: zero part or multiplicity");
        if (part >= prev && prev != UINT64_MAX)
            throw std::invalid_argument(
                "FrequencyPartition: part sizes must strictly decrease");
        prev = part;
    }
}

/* Builds a two-size partition from two unordered (part, mult) pairs,
 * placing the larger part first. Equal part sizes are rejected. */
inline TwoSizePartition make_two_size(std::uint64_t part_a, std::uint64_t mult_a,
                                      std::uint64_t part_b, std::uint64_t mult_b) {
    if (part_a == 0 || part_b == 0 || mult_a == 0 || mult_b == 0)
        throw std::invalid_argument("make_two_size: zero part or multiplicity");
    if (part_a == part_b)
        throw std::invalid_argument("make_two_size: part sizes must differ");
    TwoSizePartition p = part_a > part_b
        ? TwoSizePartition{part_a, mult_a, part_b, mult_b}
        : TwoSizePartition{part_b, mult_b, part_a, mult_a};
    return p;
}

inline FrequencyPartition to_frequency(const TwoSizePartition& p) {
    require_valid(p);
    return {{{p.large_part, p.large_mult}, {p.small_part, p.small_mult}}};
}

inline TwoSizePartition to_two_size(const FrequencyPartition& p) {
    require_valid(p);
    if (p.pairs.size() != 2)
        throw std::invalid_argument(
            "to_two_size: partition does not have exactly two part sizes");
    return {p.pairs[0].part, p.pairs[0].mult, p.pairs[1].part, p.pairs[1].mult};
}

inline std::uint64_t weight(const FrequencyPartition& p) { return p.weight(); }
inline std::uint64_t weight(const TwoSizePartition& p) { return p.weight(); }

/* Every (l1, m1, l2, m2) with l1 > l2 >= 1, m1, m2 >= 1 and
 * l1*m1 + l2*m2 = n, in canonical order: descending l1, then descending
 * m1, then descending l2. For each (l1, m1) the admissible l2 are the
 * divisors of the remainder that are smaller than l1. */
inline std::vector<TwoSizePartition> enumerate_two_size(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("enumerate_two_size: n must be positive");
    std::vector<TwoSizePartition> out;
    if (n < 3)
        return out;
    for (std::uint64_t l1 = n - 1; l1 >= 2; --l1) {
        for (std::uint64_t m1 = (n - 1) / l1; m1 >= 1; --m1) {
            const std::uint64_t r = n - l1 * m1;
            const auto divs = divisors(r);
            for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
                if (*it < l1)
                    out.push_back({l1, m1, *it, r / *it});
            }
        }
    }
    return out;
}

namespace detail {

/* Number of partitions of `rem` into exactly `slots` distinct part sizes,
 * all sizes <= `max_size`. */
inline std::uint64_t count_exact_sizes(std::uint64_t rem, unsigned slots,
                                       std::uint64_t max_size) {
    if (slots == 1) {
        std::uint64_t count = 0;
        for (std::uint64_t i = 1; i <= rem / i; ++i) {
            if (rem % i == 0) {
                if (i <= max_size)
                    ++count;
                if (i != rem / i && rem / i <= max_size)
                    ++count;
            }
        }
        return count;
    }
    // The remaining slots-1 sizes need at least 1+2+...+(slots-1) cells.
    const std::uint64_t rest_min = std::uint64_t{slots} * (slots - 1) / 2;
    if (rem < rest_min + slots)
        return 0;
    std::uint64_t total = 0;
    const std::uint64_t top = std::min(max_size, rem - rest_min);
    for (std::uint64_t s = top; s >= slots; --s)
        for (std::uint64_t m = 1; s * m + rest_min <= rem; ++m)
            total += count_exact_sizes(rem - s * m, slots - 1, s - 1);
    return total;
}

inline void enumerate_exact_sizes(std::uint64_t rem, unsigned slots,
                                  std::uint64_t max_size,
                                  std::vector<PartMult>& prefix,
                                  std::vector<FrequencyPartition>& out) {
    if (slots == 1) {
        const auto divs = divisors(rem);
        for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
            if (*it > max_size)
                continue;
            prefix.push_back({*it, rem / *it});
            out.push_back({prefix});
            prefix.pop_back();
        }
        return;
    }
    const std::uint64_t rest_min = std::uint64_t{slots} * (slots - 1) / 2;
    if (rem < rest_min + slots)
        return;
    const std::uint64_t top = std::min(max_size, rem - rest_min);
    for (std::uint64_t s = top; s >= slots; --s) {
        std::uint64_t m_max = (rem - rest_min) / s;
        for (std::uint64_t m = m_max; m >= 1; --m) {
            prefix.push_back({s, m});
            enumerate_exact_sizes(rem - s * m, slots - 1, s - 1, prefix, out);
            prefix.pop_back();
        }
    }
}

} // namespace detail

/* nu_k(n) by exhaustive recursion over distinct part sizes. */
inline std::uint64_t count_k_sizes(std::uint64_t n, unsigned k) {
    if (n == 0)
        throw std::domain_error("count_k_sizes: n must be positive");
    if (k == 0)
        throw std::domain_error("count_k_sizes: k must be positive");
    return detail::count_exact_sizes(n, k, n);
}

/* All partitions of n with exactly k distinct part sizes, in canonical
 * order (lexicographically descending on (l1, m1, l2, m2, ...)). */
inline std::vector<FrequencyPartition> enumerate_k_sizes(std::uint64_t n,
                                                         unsigned k) {
    if (n == 0)
        throw std::domain_error("enumerate_k_sizes: n must be positive");
    if (k == 0)
        throw std::domain_error("enumerate_k_sizes: k must be positive");
    std::vector<FrequencyPartition> out;
    std::vector<PartMult> prefix;
    detail::enumerate_exact_sizes(n, k, n, prefix, out);
    return out;
}

/* The divisor-function formula for nu_2:
 *     nu_2(n) = ( sum_{k=1}^{n-1} d(k) d(n-k) - sigma_1(n) + d(n) ) / 2.  */
inline std::uint64_t nu2_closed_form(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("nu2_closed_form: n must be positive");
    std::vector<std::uint32_t> d(n + 1, 0);
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = i; j <= n; j += i)
            ++d[j];
    std::uint64_t conv = 0;
    for (std::uint64_t k = 1; k < n; ++k)
        conv = checked_add(conv, std::uint64_t{d[k]} * d[n - k]);
    const std::uint64_t numerator = checked_add(conv, d[n]) - divisor_sum(n);
    if (numerator % 2 != 0)
        throw std::logic_error("nu2_closed_form: odd numerator");
    return numerator / 2;
}

namespace detail {

/* coeffs(X / (1 - q^s) * q^s) via U[i] = X[i-s] + U[i-s]; i.e. multiply X
 * by the geometric tail q^s + q^{2s} + ... truncated at the array size. */
inline std::vector<std::uint64_t> mul_geometric_tail(
        const std::vector<std::uint64_t>& x, std::uint64_t s) {
    std::vector<std::uint64_t> u(x.size(), 0);
    for (std::uint64_t i = s; i < x.size(); ++i)
        u[i] = checked_add(x[i - s], u[i - s]);
    return u;
}

} // namespace detail

/* Truncated expansion of the generating function
 *     sum_{a_1 < ... < a_k} q^{a_1+...+a_k} / prod (1 - q^{a_i})
 * mod q^{N+1}, built purely by polynomial arithmetic on dense exact
 * coefficient arrays. Returns coefficients for n = 0..N. */
inline std::vector<std::uint64_t> nu_k_series(unsigned k, std::uint64_t n_max) {
    if (k < 1 || k > 3)
        throw std::domain_error("nu_k_series: only k in {1, 2, 3} is supported");
    if (n_max > 10000)
        throw std::domain_error("nu_k_series: N must be <= 10000");
    const std::size_t size = static_cast<std::size_t>(n_max) + 1;
    std::vector<std::uint64_t> total(size, 0);
    std::vector<std::uint64_t> one_size(size, 0);  // sum over a < s of q^a/(1-q^a)
    std::vector<std::uint64_t> two_sizes(size, 0); // sum over a < b < s of the pair terms
    for (std::uint64_t s = 1; s <= n_max; ++s) {
        if (k == 3) {
            const auto u = detail::mul_geometric_tail(two_sizes, s);
            for (std::size_t i = 0; i < size; ++i)
                total[i] = checked_add(total[i], u[i]);
        }
        if (k >= 2) {
            const auto u = detail::mul_geometric_tail(one_size, s);
            for (std::size_t i = 0; i < size; ++i) {
                two_sizes[i] = checked_add(two_sizes[i], u[i]);
                if (k == 2)
                    total[i] = checked_add(total[i], u[i]);
            }
        }
        for (std::uint64_t i = s; i <= n_max; i += s) {
            one_size[i] = checked_add(one_size[i], 1);
            if (k == 1)
                total[i] = checked_add(total[i], 1);
        }
    }
    return total;
}

namespace detail {

/* Ferrers transpose in frequency notation. With sizes s_1 > ... > s_k and
 * prefix multiplicity sums M_i = m_1 + ... + m_i, the columns of height
 * M_i are those with index in (s_{i+1}, s_i], giving the conjugate
 * (M_k)^{s_k} (M_{k-1})^{s_{k-1}-s_k} ... (M_1)^{s_1-s_2}. */
inline FrequencyPartition transpose(const FrequencyPartition& p) {
    require_valid(p);
    const std::size_t k = p.pairs.size();
    std::vector<std::uint64_t> prefix(k, 0);
    std::uint64_t running = 0;
    for (std::size_t i = 0; i < k; ++i) {
        running = checked_add(running, p.pairs[i].mult);
        prefix[i] = running;
    }
    FrequencyPartition out;
    out.pairs.reserve(k);
    for (std::size_t i = k; i-- > 0;) {
        const std::uint64_t next_size = (i + 1 < k) ? p.pairs[i + 1].part : 0;
        out.pairs.push_back({prefix[i], p.pairs[i].part - next_size});
    }
    return out;
}

} // namespace detail

inline bool is_self_conjugate(const FrequencyPartition& p) {
    return detail::transpose(p) == p;
}

/* Text format: tokens separated by single spaces, each `<part>` or
 * `<part>^<mult>` in plain decimal without signs or leading zeros, part
 * sizes strictly decreasing. Output always carries the exponent. */
inline std::string format_partition(const FrequencyPartition& p) {
    require_valid(p);
    std::string out;
    for (const auto& [part, mult] : p.pairs) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(part);
        out += '^';
        out += std::to_string(mult);
    }
    return out;
}

inline std::string format_partition(const TwoSizePartition& p) {
    return format_partition(to_frequency(p));
}

namespace detail {

inline std::uint64_t parse_number(std::string_view text, std::string_view token,
                                  const char* what) {
    if (text.empty())
        throw std::invalid_argument("parse_partition: missing " +
                                    std::string(what) + " in token '" +
                                    std::string(token) + "'");
    if (text.size() > 1 && text.front() == '0')
        throw std::invalid_argument("parse_partition: leading zero in token '" +
                                    std::string(token) + "'");
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw std::invalid_argument("parse_partition: value out of range in "
                                    "token '" + std::string(token) + "'");
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("parse_partition: malformed token '" +
                                    std::string(token) + "'");
    return value;
}

} // namespace detail

inline FrequencyPartition parse_partition(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("parse_partition: empty partition text");
    FrequencyPartition out;
    std::uint64_t prev_part = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t space = std::min(text.find(' ', pos), text.size());
        const std::string_view token = text.substr(pos, space - pos);
        if (token.empty())
            throw std::invalid_argument("parse_partition: empty token "
                                        "(check spacing)");
        const std::size_t caret = token.find('^');
        std::uint64_t part = 0, mult = 1;
        if (caret == std::string_view::npos) {
            part = detail::parse_number(token, token, "part");
        } else {
            part = detail::parse_number(token.substr(0, caret), token, "part");
            mult = detail::parse_number(token.substr(caret + 1), token,
                                        "multiplicity");
        }
        if (part == 0)
            throw std::invalid_argument("parse_partition: zero part in token '" +
                                        std::string(token) + "'");
        if (mult == 0)
            throw std::invalid_argument("parse_partition: zero multiplicity in "
                                        "token '" + std::string(token) + "'");
        if (prev_part != 0 && part >= prev_part)
            throw std::invalid_argument(
                "parse_partition: part sizes must strictly decrease at token '" +
                std::string(token) + "'");
        out.pairs.push_back({part, mult});
        prev_part = part;
        pos = space + 1;
    }
    return out;
}

} // namespace twosize
