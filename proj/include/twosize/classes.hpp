#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twosize/partitions.hpp"

namespace twosize {

/* The four-letter odd/even signature of (l1, m1, l2, m2), e.g. "EOEE".
 * Of the 16 syntactic values, only 9 occur for weights = 2 (mod 4):
 * OOOO, EOOE, EEOE, EOEO, OEEE, EEEO, EOEE, OEOE, OEEO. */
class ParityClass {
public:
    constexpr ParityClass() = default;

    static constexpr ParityClass from_parities(bool l1_odd, bool m1_odd,
                                               bool l2_odd, bool m2_odd) {
        return ParityClass(static_cast<std::uint8_t>(
            (l1_odd ? 8 : 0) | (m1_odd ? 4 : 0) | (l2_odd ? 2 : 0) |
            (m2_odd ? 1 : 0)));
    }

    static ParityClass of(const TwoSizePartition& p) {
        require_valid(p);
        return from_parities(p.large_part % 2 != 0, p.large_mult % 2 != 0,
                             p.small_part % 2 != 0, p.small_mult % 2 != 0);
    }

    static ParityClass from_string(std::string_view s) {
        if (s.size() != 4)
            throw std::invalid_argument("ParityClass: expected 4 letters, got '" +
                                        std::string(s) + "'");
        std::uint8_t bits = 0;
        for (char c : s) {
            bits = static_cast<std::uint8_t>(bits << 1);
            if (c == 'O')
                bits |= 1;
            else if (c != 'E')
                throw std::invalid_argument(
                    "ParityClass: letters must be O or E in '" + std::string(s) +
                    "'");
        }
        return ParityClass(bits);
    }

    std::string to_string() const {
        std::string s(4, 'E');
        for (int i = 0; i < 4; ++i)
            if (bits_ & (8 >> i))
                s[static_cast<std::size_t>(i)] = 'O';
        return s;
    }

    constexpr bool large_part_odd() const { return (bits_ & 8) != 0; }
    constexpr bool large_mult_odd() const { return (bits_ & 4) != 0; }
    constexpr bool small_part_odd() const { return (bits_ & 2) != 0; }
    constexpr bool small_mult_odd() const { return (bits_ & 1) != 0; }

    /* A pair can contribute 2 (mod 4) only if exactly one of its two
     * entries is odd. */
    constexpr bool first_pair_markable() const {
        return large_part_odd() != large_mult_odd();
    }
    constexpr bool second_pair_markable() const {
        return small_part_odd() != small_mult_odd();
    }

    constexpr bool admissible() const {
        const bool first_oo = large_part_odd() && large_mult_odd();
        const bool second_oo = small_part_odd() && small_mult_odd();
        if (first_oo != second_oo)
            return false;          // one pair odd, the other even: odd weight
        return first_oo || bits_ != 0;  // OOOO, or anything but EEEE
    }

    friend auto operator<=>(const ParityClass&, const ParityClass&) = default;

private:
    explicit constexpr ParityClass(std::uint8_t bits) : bits_(bits) {}

    /* bit 3..0 = odd flags of l1, m1, l2, m2; integer order coincides
     * with lexicographic order of the letter string (E < O). */
    std::uint8_t bits_ = 0;
};

namespace parity_classes {
inline constexpr ParityClass OOOO = ParityClass::from_parities(true, true, true, true);
inline constexpr ParityClass EOOE = ParityClass::from_parities(false, true, true, false);
inline constexpr ParityClass EEOE = ParityClass::from_parities(false, false, true, false);
inline constexpr ParityClass EOEO = ParityClass::from_parities(false, true, false, true);
inline constexpr ParityClass OEEE = ParityClass::from_parities(true, false, false, false);
inline constexpr ParityClass EEEO = ParityClass::from_parities(false, false, false, true);
inline constexpr ParityClass EOEE = ParityClass::from_parities(false, true, false, false);
inline constexpr ParityClass OEOE = ParityClass::from_parities(true, false, true, false);
inline constexpr ParityClass OEEO = ParityClass::from_parities(true, false, false, true);
} // namespace parity_classes

enum class PairMark : std::uint8_t { none = 0, first = 1, second = 2 };

/* A parity class together with the overline mark singling out the
 * part-multiplicity pair whose product is = 2 (mod 4). OOOO carries no
 * mark (both products are odd). */
struct MarkedParityClass {
    ParityClass cls;
    PairMark mark = PairMark::none;

    std::string to_string() const {
        std::string s = cls.to_string();
        if (mark == PairMark::first)
            s += ":1";
        else if (mark == PairMark::second)
            s += ":2";
        return s;
    }

    static MarkedParityClass from_string(std::string_view s) {
        PairMark mark = PairMark::none;
        if (s.size() >= 2 && s[s.size() - 2] == ':') {
            const char which = s.back();
            if (which == '1')
                mark = PairMark::first;
            else if (which == '2')
                mark = PairMark::second;
            else
                throw std::invalid_argument("MarkedParityClass: bad mark in '" +
                                            std::string(s) + "'");
            s.remove_suffix(2);
        }
        return {ParityClass::from_string(s), mark};
    }

    friend auto operator<=>(const MarkedParityClass&,
                            const MarkedParityClass&) = default;
};

/* Parity class plus overline mark of a two-size partition of weight
 * = 2 (mod 4). Exactly one product l_i * m_i is = 2 (mod 4) unless the
 * class is OOOO, which is unmarked. */
inline MarkedParityClass classify(const TwoSizePartition& p) {
    require_valid(p);
    if (p.weight() % 4 != 2)
        throw std::domain_error(
            "classify: weight must be = 2 (mod 4); the marking dichotomy is "
            "only guaranteed there");
    const ParityClass cls = ParityClass::of(p);
    if (cls == parity_classes::OOOO)
        return {cls, PairMark::none};
    const bool first2 = (p.large_part * p.large_mult) % 4 == 2;
    const bool second2 = (p.small_part * p.small_mult) % 4 == 2;
    if (first2 == second2)
        throw std::logic_error("classify: marking dichotomy violated");
    return {cls, first2 ? PairMark::first : PairMark::second};
}

/* Conjugate of a parity class. The letters of the conjugate
 * (m1+m2)^(l2) (m1)^(l1-l2) depend only on the letters of the input,
 * which reproduces the conjugation pairing
 * EOOE-OOOO, EEOE-EOEO, OEEE-EEEO, EOEE-OEOE, OEEO-OEEO. */
inline ParityClass conjugate_class(ParityClass c) {
    if (!c.admissible())
        throw std::domain_error("conjugate_class: inadmissible parity class " +
                                c.to_string());
    return ParityClass::from_parities(
        c.large_mult_odd() != c.small_mult_odd(), // m1 + m2
        c.small_part_odd(),                       // l2
        c.large_mult_odd(),                       // m1
        c.large_part_odd() != c.small_part_odd()  // l1 - l2
    );
}

/* Marked-level conjugation, where the image mark is determined by the
 * input class and mark alone:
 *   - image OOOO is unmarked;
 *   - OEEO flips its mark (conjugation swaps the roles of m1 and l2,
 *     the two even entries, so the 2 (mod 4) product changes pairs);
 *   - otherwise the image class may force the position (a pair whose
 *     letters are EE or OO cannot carry the mark).
 * For OOOO, EEOE:2 and EOEE:1 the image mark genuinely depends on the
 * member, not the class (both image marks occur), so those are rejected;
 * conjugate a concrete member instead. */
inline MarkedParityClass conjugate_class(const MarkedParityClass& mc) {
    using parity_classes::OEEO;
    using parity_classes::OOOO;
    if (!mc.cls.admissible())
        throw std::domain_error("conjugate_class: inadmissible parity class " +
                                mc.cls.to_string());
    if ((mc.mark == PairMark::none) != (mc.cls == OOOO))
        throw std::domain_error(
            "conjugate_class: mark must be absent exactly for OOOO");
    if (mc.mark == PairMark::first && !mc.cls.first_pair_markable())
        throw std::domain_error("conjugate_class: first pair of " +
                                mc.cls.to_string() + " cannot be = 2 (mod 4)");
    if (mc.mark == PairMark::second && !mc.cls.second_pair_markable())
        throw std::domain_error("conjugate_class: second pair of " +
                                mc.cls.to_string() + " cannot be = 2 (mod 4)");
    const ParityClass image = conjugate_class(mc.cls);
    if (image == OOOO)
        return {image, PairMark::none};
    if (mc.cls == OEEO)
        return {image, mc.mark == PairMark::first ? PairMark::second
                                                  : PairMark::first};
    const bool first_possible = image.first_pair_markable();
    const bool second_possible = image.second_pair_markable();
    if (first_possible && second_possible)
        throw std::domain_error(
            "conjugate_class: image mark of " + mc.to_string() +
            " is not determined by the class; both marks of " +
            image.to_string() + " occur among conjugates");
    return {image, first_possible ? PairMark::first : PairMark::second};
}

/* Census of enumerate_two_size(n) by marked parity class. Only classes
 * that occur appear as keys; counts sum to nu_2(n). */
inline std::map<MarkedParityClass, std::uint64_t> class_census(std::uint64_t n) {
    if (n % 4 != 2)
        throw std::domain_error("class_census: n must be = 2 (mod 4)");
    std::map<MarkedParityClass, std::uint64_t> census;
    for (const auto& p : enumerate_two_size(n))
        ++census[classify(p)];
    return census;
}

/* Count of one class in a census, summed over marks. */
inline std::uint64_t class_count(
        const std::map<MarkedParityClass, std::uint64_t>& census,
        ParityClass cls) {
    std::uint64_t total = 0;
    for (const auto& [key, count] : census)
        if (key.cls == cls)
            total += count;
    return total;
}

inline std::uint64_t census_total(
        const std::map<MarkedParityClass, std::uint64_t>& census) {
    std::uint64_t total = 0;
    for (const auto& [key, count] : census)
        total += count;
    return total;
}

/* Indices i (1-based) whose pair has odd parts incongruent mod 8,
 * i.e. l(lambda_i) != l(m_i) (mod 8). */
inline std::vector<int> odd_pair_indices(const TwoSizePartition& p) {
    require_valid(p);
    std::vector<int> out;
    if (odd_part(p.large_part) % 8 != odd_part(p.large_mult) % 8)
        out.push_back(1);
    if (odd_part(p.small_part) % 8 != odd_part(p.small_mult) % 8)
        out.push_back(2);
    return out;
}

} // namespace twosize
