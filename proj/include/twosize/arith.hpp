#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace twosize {

/* All arithmetic stays on the unsigned 64-bit range. Inputs whose
 * intermediate products would wrap are rejected instead of producing
 * silently wrong counts. */
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("checked_add: 64-bit overflow");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("checked_mul: 64-bit overflow");
    return r;
}

/* The 2-adic split m = 2^valuation * odd_part with odd_part odd. */
struct OddEvenDecomposition {
    unsigned valuation = 0;
    std::uint64_t odd_part = 1;

    friend bool operator==(const OddEvenDecomposition&,
                           const OddEvenDecomposition&) = default;
};

inline OddEvenDecomposition decompose_pow2(std::uint64_t m) {
    if (m == 0)
        throw std::domain_error("decompose_pow2: argument must be positive");
    const auto k = static_cast<unsigned>(std::countr_zero(m));
    return {k, m >> k};
}

inline unsigned pow2_valuation(std::uint64_t m) {
    return decompose_pow2(m).valuation;
}

/* Largest odd divisor of m. */
inline std::uint64_t odd_part(std::uint64_t m) {
    return decompose_pow2(m).odd_part;
}

/* Positive divisors of n in strictly ascending order, by trial division
 * up to sqrt(n). */
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("divisors: argument must be positive");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t i = 1; i <= n / i; ++i) {
        if (n % i == 0) {
            low.push_back(i);
            if (i != n / i)
                high.push_back(n / i);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

inline std::uint64_t divisor_count(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("divisor_count: argument must be positive");
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= n / i; ++i) {
        if (n % i == 0)
            count += (i == n / i) ? 1 : 2;
    }
    return count;
}

inline std::uint64_t divisor_sum(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("divisor_sum: argument must be positive");
    std::uint64_t sum = 0;
    for (std::uint64_t i = 1; i <= n / i; ++i) {
        if (n % i == 0) {
            sum = checked_add(sum, i);
            if (i != n / i)
                sum = checked_add(sum, n / i);
        }
    }
    return sum;
}

} // namespace twosize
