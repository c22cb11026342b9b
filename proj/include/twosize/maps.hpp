#pragma once

#include <cstdint>
#include <stdexcept>

#include "twosize/arith.hpp"
#include "twosize/classes.hpp"
#include "twosize/partitions.hpp"

namespace twosize {

/* Ferrers transpose of an arbitrary partition. */
inline FrequencyPartition conjugate(const FrequencyPartition& p) {
    return detail::transpose(p);
}

/* Closed form of the transpose for two part sizes:
 *     Conj(l1^m1 l2^m2) = (m1+m2)^(l2) (m1)^(l1-l2).
 * Both sizes are always distinct (m1+m2 > m1) and the second multiplicity
 * l1-l2 is positive, so the image is again a two-size partition. */
inline TwoSizePartition conjugate(const TwoSizePartition& p) {
    require_valid(p);
    return make_two_size(checked_add(p.large_mult, p.small_mult), p.small_part,
                         p.large_mult, p.large_part - p.small_part);
}

/* rho swaps the largest odd divisor of each part with that of its
 * multiplicity:
 *     (2^b(l_i) l(l_i))^(2^b(m_i) l(m_i))  ->
 *     (2^b(l_i) l(m_i))^(2^b(m_i) l(l_i)),
 * reordering the pairs so the larger size leads. Undefined when the two
 * swapped sizes coincide. */
inline TwoSizePartition rho(const TwoSizePartition& p) {
    require_valid(p);
    const auto l1 = decompose_pow2(p.large_part);
    const auto m1 = decompose_pow2(p.large_mult);
    const auto l2 = decompose_pow2(p.small_part);
    const auto m2 = decompose_pow2(p.small_mult);
    const std::uint64_t size_a = checked_mul(std::uint64_t{1} << l1.valuation,
                                             m1.odd_part);
    const std::uint64_t size_b = checked_mul(std::uint64_t{1} << l2.valuation,
                                             m2.odd_part);
    if (size_a == size_b)
        throw std::domain_error(
            "rho: undefined, swapped part sizes coincide "
            "(2^b(l1)*l(m1) = 2^b(l2)*l(m2))");
    const std::uint64_t mult_a = checked_mul(std::uint64_t{1} << m1.valuation,
                                             l1.odd_part);
    const std::uint64_t mult_b = checked_mul(std::uint64_t{1} << m2.valuation,
                                             l2.odd_part);
    return make_two_size(size_a, mult_a, size_b, mult_b);
}

/* phi-bar swaps the 2-adic valuations of the part and multiplicity in the
 * pair contributing 2 (mod 4), leaving the other pair untouched and
 * reordering if needed. Keeps the marked product, hence the weight. */
inline TwoSizePartition phi_bar(const TwoSizePartition& p) {
    const MarkedParityClass marked = classify(p);
    if (marked.mark == PairMark::none)
        throw std::domain_error("phi_bar: OOOO input has no marked pair");
    std::uint64_t part = 0, mult = 0, other_part = 0, other_mult = 0;
    if (marked.mark == PairMark::first) {
        part = p.large_part;
        mult = p.large_mult;
        other_part = p.small_part;
        other_mult = p.small_mult;
    } else {
        part = p.small_part;
        mult = p.small_mult;
        other_part = p.large_part;
        other_mult = p.large_mult;
    }
    const auto dp = decompose_pow2(part);
    const auto dm = decompose_pow2(mult);
    const std::uint64_t new_part =
        checked_mul(std::uint64_t{1} << dm.valuation, dp.odd_part);
    const std::uint64_t new_mult =
        checked_mul(std::uint64_t{1} << dp.valuation, dm.odd_part);
    if (new_part == other_part)
        throw std::domain_error("phi_bar: resulting part sizes coincide");
    return make_two_size(new_part, new_mult, other_part, other_mult);
}

/* tau: OEOE -> EOEO, swapping the 2-adic valuations inside both pairs and
 * exchanging the two sizes if necessary. On OEOE the new sizes are
 * 2^b(m_i) * l_i with l_1 != l_2 odd, so they never coincide. */
inline TwoSizePartition tau(const TwoSizePartition& p) {
    const MarkedParityClass marked = classify(p);
    if (marked.cls != parity_classes::OEOE)
        throw std::domain_error("tau: input must lie in parity class OEOE");
    const auto m1 = decompose_pow2(p.large_mult);
    const auto m2 = decompose_pow2(p.small_mult);
    return make_two_size(
        checked_mul(std::uint64_t{1} << m1.valuation, p.large_part),
        m1.odd_part,
        checked_mul(std::uint64_t{1} << m2.valuation, p.small_part),
        m2.odd_part);
}

/* The composition Conj . rho . Conj on EOOE partitions whose first pair is
 * marked, written in closed form:
 *     (2m1+m2)^(l2) (m1)^(l1-2*l2)            if l1 > 2*l2,
 *     (2m1+m2)^(l1-l2) (m1+m2)^(2*l2-l1)      if l1 < 2*l2.
 * l1 = 2*l2 is excluded: its conjugate has m1 = m2, where rho's
 * distinct-sizes hypothesis fails. */
inline TwoSizePartition conj_rho_conj(const TwoSizePartition& p) {
    const MarkedParityClass marked = classify(p);
    if (marked.cls != parity_classes::EOOE || marked.mark != PairMark::first)
        throw std::domain_error(
            "conj_rho_conj: input must lie in EOOE with the first pair marked");
    const std::uint64_t twice_small = checked_mul(2, p.small_part);
    if (p.large_part == twice_small)
        throw std::domain_error("conj_rho_conj: l1 = 2*l2 is excluded");
    const std::uint64_t lead =
        checked_add(checked_mul(2, p.large_mult), p.small_mult);
    if (p.large_part > twice_small)
        return make_two_size(lead, p.small_part,
                             p.large_mult, p.large_part - twice_small);
    return make_two_size(lead, p.large_part - p.small_part,
                         checked_add(p.large_mult, p.small_mult),
                         twice_small - p.large_part);
}

} // namespace twosize
