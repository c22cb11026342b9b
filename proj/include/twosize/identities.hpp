#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twosize/arith.hpp"
#include "twosize/classes.hpp"
#include "twosize/maps.hpp"
#include "twosize/partitions.hpp"

namespace twosize {

/* Outcome of checking one named identity at one weight. `values` records
 * the integers entering the asserted relation, in a fixed order;
 * `witnesses` is nonempty exactly when the identity fails. */
struct IdentityReport {
    std::string identity_id;
    std::uint64_t n = 0;
    std::vector<std::pair<std::string, std::int64_t>> values;
    bool holds = false;
    std::vector<std::string> witnesses;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/* Arithmetic progression stride*j + offset, j >= 0, carrying the modulus
 * of the divisibility claim made over it. */
struct CongruenceFamily {
    std::uint64_t stride = 0;
    std::uint64_t offset = 0;
    std::uint64_t modulus = 4;

    friend bool operator==(const CongruenceFamily&, const CongruenceFamily&) = default;
};

/* The five progressions with known nu_2 congruences mod 4. */
inline const std::vector<CongruenceFamily>& known_families() {
    static const std::vector<CongruenceFamily> families = {
        {16, 14, 4}, {36, 30, 4}, {72, 42, 4}, {196, 70, 4}, {252, 114, 4}};
    return families;
}

enum class RankStat { dyson, rank2, crank };

inline RankStat parse_rank_stat(std::string_view name) {
    if (name == "rk")
        return RankStat::dyson;
    if (name == "rk2")
        return RankStat::rank2;
    if (name == "crank")
        return RankStat::crank;
    throw std::domain_error("unknown rank statistic '" + std::string(name) +
                            "' (expected rk, rk2 or crank)");
}

inline std::string_view rank_stat_name(RankStat stat) {
    switch (stat) {
    case RankStat::dyson: return "rk";
    case RankStat::rank2: return "rk2";
    case RankStat::crank: return "crank";
    }
    throw std::logic_error("rank_stat_name: bad enum value");
}

/* Dyson's rank: largest part minus number of parts. */
inline std::int64_t dyson_rank(const TwoSizePartition& p) {
    require_valid(p);
    return static_cast<std::int64_t>(p.large_part) -
           static_cast<std::int64_t>(p.large_mult + p.small_mult);
}

/* rk2 = l1 + l2 - 2*m1 - m2. */
inline std::int64_t rank2(const TwoSizePartition& p) {
    require_valid(p);
    return static_cast<std::int64_t>(p.large_part + p.small_part) -
           static_cast<std::int64_t>(2 * p.large_mult + p.small_mult);
}

/* The ordinary-partition crank: the largest part if no part equals 1,
 * otherwise mu - omega, where omega is the multiplicity of 1 and mu the
 * number of parts exceeding omega. */
inline std::int64_t crank(const FrequencyPartition& p) {
    require_valid(p);
    std::uint64_t ones = 0;
    for (const auto& [part, mult] : p.pairs)
        if (part == 1)
            ones = mult;
    if (ones == 0)
        return static_cast<std::int64_t>(p.pairs.front().part);
    std::uint64_t above = 0;
    for (const auto& [part, mult] : p.pairs)
        if (part > ones)
            above += mult;
    return static_cast<std::int64_t>(above) - static_cast<std::int64_t>(ones);
}

inline std::int64_t crank(const TwoSizePartition& p) {
    return crank(to_frequency(p));
}

inline std::int64_t rank_statistic(RankStat stat, const TwoSizePartition& p) {
    switch (stat) {
    case RankStat::dyson: return dyson_rank(p);
    case RankStat::rank2: return rank2(p);
    case RankStat::crank: return crank(p);
    }
    throw std::logic_error("rank_statistic: bad enum value");
}

/* Least non-negative residue of a possibly negative statistic. */
inline std::uint64_t least_residue(std::int64_t value, std::uint64_t modulus) {
    const auto m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0)
        r += m;
    return static_cast<std::uint64_t>(r);
}

/* Counts of enumerate_two_size(n) by statistic value reduced to its least
 * non-negative residue. */
inline std::map<std::uint64_t, std::uint64_t> rank_class_census(
        std::uint64_t n, RankStat stat, std::uint64_t modulus) {
    if (n == 0)
        throw std::domain_error("rank_class_census: n must be positive");
    if (modulus == 0 || modulus > static_cast<std::uint64_t>(INT64_MAX))
        throw std::domain_error("rank_class_census: bad modulus");
    std::map<std::uint64_t, std::uint64_t> census;
    for (const auto& p : enumerate_two_size(n))
        ++census[least_residue(rank_statistic(stat, p), modulus)];
    return census;
}

namespace detail {

struct IdentityInfo {
    std::string_view id;
    std::uint64_t residue_mod;
    std::uint64_t residue_rem;
};

inline constexpr std::array<IdentityInfo, 10> identity_table{{
    {"admissible-classes", 4, 2},
    {"oeeo-even", 4, 2},
    {"odd-pairs", 16, 14},
    {"even-parities", 16, 14},
    {"sixgroup", 16, 14},
    {"three-class", 8, 6},
    {"twiceOEOE", 4, 2},
    {"twogroup", 16, 14},
    {"oeeo-value", 16, 14},
    {"main", 16, 14},
}};

inline const IdentityInfo& find_identity(std::string_view id) {
    for (const auto& info : identity_table)
        if (info.id == id)
            return info;
    throw std::domain_error("unknown identity '" + std::string(id) + "'");
}

inline constexpr std::size_t max_witnesses = 16;

inline void add_witness(std::vector<std::string>& witnesses,
                        const TwoSizePartition& p) {
    if (witnesses.size() < max_witnesses)
        witnesses.push_back(format_partition(p));
}

/* Members of one unmarked class, capped, as witness strings. */
inline void witness_class(std::vector<std::string>& witnesses, std::uint64_t n,
                          ParityClass cls) {
    for (const auto& p : enumerate_two_size(n)) {
        if (witnesses.size() >= max_witnesses)
            break;
        if (ParityClass::of(p) == cls)
            add_witness(witnesses, p);
    }
}

} // namespace detail

/* Identity names accepted by verify_identity, in canonical order. */
inline std::vector<std::string> identity_ids() {
    std::vector<std::string> ids;
    for (const auto& info : detail::identity_table)
        ids.emplace_back(info.id);
    return ids;
}

/* Residue class (modulus, remainder) of weights an identity applies to. */
inline std::pair<std::uint64_t, std::uint64_t> identity_residue(
        std::string_view id) {
    const auto& info = detail::find_identity(id);
    return {info.residue_mod, info.residue_rem};
}

namespace detail {

inline IdentityReport verify_identity_impl(std::string_view id, std::uint64_t n) {
    const auto& info = detail::find_identity(id);
    if (n == 0 || n % info.residue_mod != info.residue_rem)
        throw std::domain_error("verify_identity: " + std::string(id) +
                                " requires n = " +
                                std::to_string(info.residue_rem) + " (mod " +
                                std::to_string(info.residue_mod) + ")");
    using namespace parity_classes;

    IdentityReport report;
    report.identity_id = std::string(id);
    report.n = n;
    auto value = [&report](std::string_view name, std::uint64_t v) {
        report.values.emplace_back(std::string(name),
                                   static_cast<std::int64_t>(v));
    };

    if (id == "admissible-classes") {
        std::uint64_t checked = 0, violations = 0;
        for (const auto& p : enumerate_two_size(n)) {
            ++checked;
            const ParityClass cls = ParityClass::of(p);
            const std::uint64_t prod1 = (p.large_part * p.large_mult) % 4;
            const std::uint64_t prod2 = (p.small_part * p.small_mult) % 4;
            bool ok = cls.admissible();
            if (cls == OOOO)
                ok = ok && prod1 % 2 == 1 && prod2 % 2 == 1;
            else
                ok = ok && ((prod1 == 2 && prod2 == 0) ||
                            (prod1 == 0 && prod2 == 2));
            if (!ok) {
                ++violations;
                detail::add_witness(report.witnesses, p);
            }
        }
        value("nu2", checked);
        value("violations", violations);
        report.holds = violations == 0;
        return report;
    }

    if (id == "odd-pairs") {
        std::uint64_t checked = 0, violations = 0;
        for (const auto& p : enumerate_two_size(n)) {
            ++checked;
            if (odd_pair_indices(p).empty()) {
                ++violations;
                detail::add_witness(report.witnesses, p);
            }
        }
        value("nu2", checked);
        value("violations", violations);
        report.holds = violations == 0;
        return report;
    }

    const auto census = class_census(n);

    if (id == "oeeo-even") {
        const std::uint64_t total = class_count(census, OEEO);
        std::uint64_t mark1 = 0, mark2 = 0;
        for (const auto& [key, count] : census) {
            if (key.cls != OEEO)
                continue;
            (key.mark == PairMark::first ? mark1 : mark2) = count;
        }
        value("oeeo", total);
        value("mark1", mark1);
        value("mark2", mark2);
        report.holds = total % 2 == 0 && mark1 == mark2;
        if (!report.holds)
            detail::witness_class(report.witnesses, n, OEEO);
        return report;
    }

    if (id == "even-parities") {
        const std::uint64_t sum = class_count(census, EOOE) +
                                  class_count(census, EEOE) +
                                  class_count(census, OEEE) +
                                  class_count(census, OEEO);
        value("eooe", class_count(census, EOOE));
        value("eeoe", class_count(census, EEOE));
        value("oeee", class_count(census, OEEE));
        value("oeeo", class_count(census, OEEO));
        value("sum", sum);
        value("residue", sum % 2);
        report.holds = sum % 2 == 0;
        if (!report.holds)
            for (ParityClass cls : {EOOE, EEOE, OEEE, OEEO})
                detail::witness_class(report.witnesses, n, cls);
        return report;
    }

    if (id == "sixgroup") {
        const std::uint64_t sum = class_count(census, EOOE) +
                                  class_count(census, EEOE) +
                                  class_count(census, OEEE) +
                                  class_count(census, OOOO) +
                                  class_count(census, EOEO) +
                                  class_count(census, EEEO);
        value("eooe", class_count(census, EOOE));
        value("eeoe", class_count(census, EEOE));
        value("oeee", class_count(census, OEEE));
        value("oooo", class_count(census, OOOO));
        value("eoeo", class_count(census, EOEO));
        value("eeeo", class_count(census, EEEO));
        value("sum", sum);
        value("residue", sum % 4);
        report.holds = sum % 4 == 0;
        if (!report.holds)
            for (ParityClass cls : {EOOE, EEOE, OEEE, OOOO, EOEO, EEEO})
                detail::witness_class(report.witnesses, n, cls);
        return report;
    }

    if (id == "three-class") {
        const std::uint64_t sum = class_count(census, EOEE) +
                                  class_count(census, OEOE) +
                                  class_count(census, OEEO);
        value("eoee", class_count(census, EOEE));
        value("oeoe", class_count(census, OEOE));
        value("oeeo", class_count(census, OEEO));
        value("sum", sum);
        value("residue", sum % 4);
        report.holds = sum % 4 == 0;
        if (!report.holds)
            for (ParityClass cls : {EOEE, OEOE, OEEO})
                detail::witness_class(report.witnesses, n, cls);
        return report;
    }

    if (id == "twiceOEOE") {
        /* EOEO = OEOE + sigma_1(n/2)/2 - d(n)/4. The correction term is
         * evaluated as (2*sigma_1(n/2) - d(n))/4, which is an integer for
         * every n = 2 (mod 4) even when the two fractions are not
         * individually integral (n/2 an odd square). */
        const std::uint64_t eoeo = class_count(census, EOEO);
        const std::uint64_t oeoe = class_count(census, OEOE);
        const std::int64_t numerator =
            2 * static_cast<std::int64_t>(divisor_sum(n / 2)) -
            static_cast<std::int64_t>(divisor_count(n));
        value("eoeo", eoeo);
        value("oeoe", oeoe);
        value("sigma_half", divisor_sum(n / 2));
        value("d", divisor_count(n));
        if (numerator % 4 != 0) {
            report.values.emplace_back("correction_numerator", numerator);
            report.holds = false;
            report.witnesses.push_back(
                "2*sigma_1(" + std::to_string(n / 2) + ") - d(" +
                std::to_string(n) + ") = " + std::to_string(numerator) +
                " is not divisible by 4");
            return report;
        }
        const std::int64_t correction = numerator / 4;
        report.values.emplace_back("correction", correction);
        report.holds = static_cast<std::int64_t>(eoeo) ==
                       static_cast<std::int64_t>(oeoe) + correction;
        if (!report.holds)
            for (ParityClass cls : {EOEO, OEOE})
                detail::witness_class(report.witnesses, n, cls);
        return report;
    }

    if (id == "twogroup" || id == "oeeo-value") {
        const std::uint64_t d_n = divisor_count(n);
        if (d_n % 2 != 0) {
            value("d", d_n);
            report.holds = false;
            report.witnesses.push_back("d(" + std::to_string(n) + ") = " +
                                       std::to_string(d_n) + " is odd");
            return report;
        }
        const std::uint64_t d_half = d_n / 2;
        if (id == "twogroup") {
            const std::uint64_t sum =
                class_count(census, EOEE) + class_count(census, OEOE);
            value("eoee", class_count(census, EOEE));
            value("oeoe", class_count(census, OEOE));
            value("sum", sum);
            value("d_half", d_half);
            value("lhs_mod4", sum % 4);
            value("rhs_mod4", d_half % 4);
            report.holds = sum % 4 == d_half % 4;
            if (!report.holds)
                for (ParityClass cls : {EOEE, OEOE})
                    detail::witness_class(report.witnesses, n, cls);
        } else {
            const std::uint64_t oeeo = class_count(census, OEEO);
            value("oeeo", oeeo);
            value("d_half", d_half);
            value("lhs_mod4", oeeo % 4);
            value("rhs_mod4", d_half % 4);
            report.holds = oeeo % 4 == d_half % 4;
            if (!report.holds)
                detail::witness_class(report.witnesses, n, OEEO);
        }
        return report;
    }

    if (id == "main") {
        const std::uint64_t nu2 = census_total(census);
        const std::uint64_t closed = nu2_closed_form(n);
        value("nu2", nu2);
        value("nu2_closed", closed);
        value("residue", nu2 % 4);
        report.holds = nu2 % 4 == 0 && nu2 == closed;
        if (!report.holds)
            report.witnesses.push_back("nu2(" + std::to_string(n) + ") = " +
                                       std::to_string(nu2) + ", closed form " +
                                       std::to_string(closed));
        return report;
    }

    throw std::logic_error("verify_identity: unhandled identity");
}

} // namespace detail

/* Checks one named identity at one weight by exhaustive census plus
 * divisor arithmetic. Rejects weights outside the identity's residue
 * class, where the statement is not asserted. */
inline IdentityReport verify_identity(std::string_view id, std::uint64_t n) {
    IdentityReport report = detail::verify_identity_impl(id, n);
    if (!report.holds && report.witnesses.empty())
        report.witnesses.push_back("no member partitions involved; see values");
    return report;
}

/* Scans one congruence family with one statistic. Per member A*j + B with
 * j = 0..max_index, reports whether the counts of partitions with odd and
 * even statistic are both divisible by the family modulus; the count with
 * statistic = 0 (mod 4) is recorded alongside as an exploratory
 * observation. Failures are data, not errors. */
inline std::vector<IdentityReport> check_conjecture(const CongruenceFamily& family,
                                                    RankStat stat,
                                                    std::uint64_t max_index) {
    if (family.stride == 0)
        throw std::domain_error("check_conjecture: stride must be positive");
    if (family.offset >= family.stride)
        throw std::domain_error("check_conjecture: offset must be < stride");
    if (family.modulus == 0)
        throw std::domain_error("check_conjecture: modulus must be positive");
    const std::string id = "conjecture:" + std::string(rank_stat_name(stat)) +
                           ":" + std::to_string(family.stride) + "n+" +
                           std::to_string(family.offset);
    std::vector<IdentityReport> reports;
    for (std::uint64_t j = 0; j <= max_index; ++j) {
        const std::uint64_t w =
            checked_add(checked_mul(family.stride, j), family.offset);
        if (w == 0)
            continue;
        IdentityReport report;
        report.identity_id = id;
        report.n = w;
        std::uint64_t odd = 0, even = 0, zero_mod4 = 0;
        for (const auto& p : enumerate_two_size(w)) {
            const std::int64_t v = rank_statistic(stat, p);
            (least_residue(v, 2) == 1 ? odd : even) += 1;
            if (least_residue(v, 4) == 0)
                ++zero_mod4;
        }
        const bool odd_ok = odd % family.modulus == 0;
        const bool even_ok = even % family.modulus == 0;
        report.values = {
            {"odd", static_cast<std::int64_t>(odd)},
            {"even", static_cast<std::int64_t>(even)},
            {"odd_mod", static_cast<std::int64_t>(odd % family.modulus)},
            {"even_mod", static_cast<std::int64_t>(even % family.modulus)},
            {"zero_mod4_count", static_cast<std::int64_t>(zero_mod4)},
            {"zero_mod4_residue", static_cast<std::int64_t>(zero_mod4 % 4)},
        };
        report.holds = odd_ok && even_ok;
        if (!report.holds) {
            for (const auto& p : enumerate_two_size(w)) {
                if (report.witnesses.size() >= detail::max_witnesses)
                    break;
                const std::uint64_t parity =
                    least_residue(rank_statistic(stat, p), 2);
                if ((parity == 1 && !odd_ok) || (parity == 0 && !even_ok))
                    detail::add_witness(report.witnesses, p);
            }
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

} // namespace twosize
