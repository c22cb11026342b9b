// Acceptance suite: runs every criterion at its stated bound and prints one
// pass/fail line per criterion. Exit code 0 iff all pass. `--slow` widens
// the identity sweep to weights <= 5000.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "twosize/twosize.hpp"

namespace {

using namespace twosize;
using namespace twosize::parity_classes;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition)
        throw Failure(message);
}

std::string criterion_oracle_triangle() {
    const auto series = nu_k_series(2, 2000);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        const std::uint64_t enumerated = enumerate_two_size(n).size();
        const std::uint64_t counted = count_k_sizes(n, 2);
        const std::uint64_t closed = nu2_closed_form(n);
        require(enumerated == counted && counted == closed &&
                    closed == series[n],
                "oracle disagreement at n=" + std::to_string(n) + ": enum " +
                    std::to_string(enumerated) + ", count " +
                    std::to_string(counted) + ", closed " +
                    std::to_string(closed) + ", series " +
                    std::to_string(series[n]));
    }
    require(series[6] == 6, "nu2(6) != 6");
    require(series[14] == 44, "nu2(14) != 44");
    return "enumeration = divisor formula = series on 1..2000; nu2(6)=6, "
           "nu2(14)=44";
}

std::string criterion_main_theorem() {
    std::uint64_t checked = 0;
    for (std::uint64_t w = 14; w <= 5000; w += 16) {
        const IdentityReport report = verify_identity("main", w);
        require(report.holds, "main theorem fails at n=" + std::to_string(w));
        ++checked;
    }
    return "nu2(16j+14) = 0 (mod 4) at all " + std::to_string(checked) +
           " weights <= 5000";
}

std::string criterion_lemma_suite(std::uint64_t bound) {
    std::uint64_t checks = 0;
    for (const std::string& id : identity_ids()) {
        if (id == "main")
            continue; // criterion 2 covers the theorem itself
        const auto [mod, rem] = identity_residue(id);
        for (std::uint64_t n = rem; n <= bound; n += mod) {
            const IdentityReport report = verify_identity(id, n);
            std::string detail;
            for (const auto& [name, v] : report.values)
                detail += " " + name + "=" + std::to_string(v);
            require(report.holds,
                    id + " fails at n=" + std::to_string(n) + ":" + detail);
            ++checks;
        }
    }
    return std::to_string(checks) + " identity checks hold on weights <= " +
           std::to_string(bound);
}

std::string criterion_golden_census() {
    const auto census = class_census(14);
    const std::map<MarkedParityClass, std::uint64_t> expected = {
        {{EEEO, PairMark::second}, 2},  {{EEOE, PairMark::second}, 6},
        {{EOEE, PairMark::first}, 3},   {{EOEO, PairMark::first}, 1},
        {{EOEO, PairMark::second}, 5},  {{EOOE, PairMark::first}, 5},
        {{EOOE, PairMark::second}, 5},  {{OEEE, PairMark::first}, 2},
        {{OEEO, PairMark::first}, 1},   {{OEEO, PairMark::second}, 1},
        {{OEOE, PairMark::first}, 2},   {{OEOE, PairMark::second}, 1},
        {{OOOO, PairMark::none}, 10},
    };
    require(census == expected, "marked census of 14 deviates from the "
                                "golden table");
    require(census_total(census) == 44, "census total != 44");

    const std::map<ParityClass, std::uint64_t> class_golden = {
        {OOOO, 10}, {EOOE, 10}, {EOEO, 6}, {EEOE, 6}, {OEEE, 2},
        {EEEO, 2},  {OEOE, 3},  {EOEE, 3}, {OEEO, 2},
    };
    for (const auto& [cls, count] : class_golden)
        require(class_count(census, cls) == count,
                cls.to_string() + " count != " + std::to_string(count));

    for (const auto& [a, b] :
         {std::pair{EOEE, OEOE}, {EEOE, EOEO}, {OEEE, EEEO}, {OOOO, EOOE}})
        require(class_count(census, a) == class_count(census, b),
                "conjugate classes " + a.to_string() + "/" + b.to_string() +
                    " differ at n=14");
    require(census.at({OEEO, PairMark::first}) == 1 &&
                census.at({OEEO, PairMark::second}) == 1,
            "OEEO marks not split 1/1");

    // internal cross-checks: 6 = 3 + 4 - 1, 3 + 3 = 2 (mod 4), 2 = 2 (mod 4)
    require(class_count(census, EOEO) ==
                class_count(census, OEOE) +
                    (2 * divisor_sum(7) - divisor_count(14)) / 4,
            "EOEO vs OEOE relation broken at n=14");
    require((class_count(census, EOEE) + class_count(census, OEOE)) % 4 ==
                (divisor_count(14) / 2) % 4,
            "twogroup relation broken at n=14");
    require(class_count(census, OEEO) % 4 == (divisor_count(14) / 2) % 4,
            "OEEO value relation broken at n=14");
    return "marked census at 14 matches, total 44, OEEO 1/1, conjugate "
           "equalities hold";
}

std::string criterion_involutions() {
    std::uint64_t conj_checked = 0, rho_checked = 0, phi_checked = 0;
    std::uint64_t phi_collisions = 0, crc_checked = 0;
    for (std::uint64_t n = 3; n <= 2000; ++n) {
        for (const auto& p : enumerate_two_size(n)) {
            require(conjugate(conjugate(p)) == p,
                    "conjugate^2 != id at " + format_partition(p));
            ++conj_checked;

            bool rho_defined = true;
            TwoSizePartition rho_image;
            try {
                rho_image = rho(p);
            } catch (const std::domain_error&) {
                rho_defined = false;
            }
            if (rho_defined) {
                require(rho_image.weight() == n && rho(rho_image) == p,
                        "rho^2 != id at " + format_partition(p));
                ++rho_checked;
            }

            const bool marked_weight = n % 4 == 2;
            MarkedParityClass marked;
            if (marked_weight) {
                marked = classify(p);
                if (marked.mark != PairMark::none) {
                    try {
                        const TwoSizePartition image = phi_bar(p);
                        require(phi_bar(image) == p,
                                "phi_bar^2 != id at " + format_partition(p));
                        ++phi_checked;
                    } catch (const std::domain_error&) {
                        ++phi_collisions; // coinciding sizes: outside domain
                    }
                }
            }

            if (n % 16 != 14)
                continue;
            const ParityClass cls = marked.cls;
            if (cls == EOOE || cls == EEOE || cls == OEEE || cls == OEEO ||
                cls == EOEO) {
                require(rho_defined,
                        "rho undefined in " + cls.to_string() + " at " +
                            format_partition(p));
                require(rho_image != p,
                        "rho fixed point in " + cls.to_string() + " at " +
                            format_partition(p));
            }
            if (cls == EOOE && marked.mark == PairMark::first &&
                p.large_part != 2 * p.small_part) {
                const TwoSizePartition direct = conj_rho_conj(p);
                require(direct == conjugate(rho(conjugate(p))),
                        "crc closed form deviates at " + format_partition(p));
                require(direct != p,
                        "crc fixed point at " + format_partition(p));
                require((direct.large_part > 2 * direct.small_part) ==
                            (p.large_part > 2 * p.small_part),
                        "crc leaves its subset at " + format_partition(p));
                ++crc_checked;
            }
        }
    }
    // the three orbit pairs at n = 14
    require(rho({12, 1, 2, 1}) == TwoSizePartition{4, 3, 2, 1} &&
                rho({10, 1, 4, 1}) == TwoSizePartition{4, 1, 2, 5} &&
                rho({8, 1, 6, 1}) == TwoSizePartition{8, 1, 2, 3},
            "rho orbit pairs at 14 deviate");
    return "conj^2 on " + std::to_string(conj_checked) + ", rho^2 on " +
           std::to_string(rho_checked) + ", phi_bar^2 on " +
           std::to_string(phi_checked) + " (skipped " +
           std::to_string(phi_collisions) +
           " size collisions), crc on " + std::to_string(crc_checked) +
           "; no forbidden fixed points";
}

std::string criterion_tau_complement() {
    for (std::uint64_t n = 2; n <= 2000; n += 4) {
        std::uint64_t eoeo = 0;
        std::set<TwoSizePartition> images;
        for (const auto& p : enumerate_two_size(n)) {
            const ParityClass cls = classify(p).cls;
            if (cls == EOEO)
                ++eoeo;
            else if (cls == OEOE)
                images.insert(tau(p));
        }
        const std::int64_t lhs = static_cast<std::int64_t>(eoeo) -
                                 static_cast<std::int64_t>(images.size());
        const std::int64_t rhs =
            (2 * static_cast<std::int64_t>(divisor_sum(n / 2)) -
             static_cast<std::int64_t>(divisor_count(n))) /
            4;
        require(lhs == rhs, "tau complement identity fails at n=" +
                                std::to_string(n) + ": " + std::to_string(lhs) +
                                " != " + std::to_string(rhs));
        if (n == 6)
            require(eoeo == 1 && images.empty() && rhs == 1,
                    "spot check at n=6 deviates");
    }
    return "|EOEO| - |tau(OEOE)| = sigma_1(n/2)/2 - d(n)/4 on all n = 2 (mod "
           "4) <= 2000";
}

std::string criterion_conjecture_scan() {
    std::uint64_t members = 0;
    std::vector<std::string> counterexamples;
    for (const CongruenceFamily& family : known_families()) {
        const std::uint64_t max_index = (5000 - family.offset) / family.stride;
        for (const RankStat stat : {RankStat::rank2, RankStat::dyson}) {
            if (stat == RankStat::dyson && family.stride == 16)
                continue; // the conjecture excludes Dyson's rank on 16n+14
            for (const auto& report : check_conjecture(family, stat, max_index)) {
                ++members;
                if (!report.holds)
                    counterexamples.push_back(to_csv_row(report));
            }
        }
    }
    if (!counterexamples.empty()) {
        std::string message = "counterexample reports:\n";
        for (const auto& row : counterexamples)
            message += "  " + row + "\n";
        throw Failure(message);
    }
    return "rk2 on all five families and rk on the other four: both parity "
           "counts = 0 (mod 4) at all " +
           std::to_string(members) + " members <= 5000";
}

std::string criterion_crank_exploratory() {
    for (const CongruenceFamily& family : known_families()) {
        const std::uint64_t max_index = (5000 - family.offset) / family.stride;
        for (const auto& report :
             check_conjecture(family, RankStat::crank, max_index)) {
            if (!report.holds)
                return "crank counterexample located at weight " +
                       std::to_string(report.n) + " in family " +
                       std::to_string(family.stride) + "n+" +
                       std::to_string(family.offset);
        }
    }
    return "no counterexample at bound";
}

} // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0)
            slow = true;

    struct Criterion {
        const char* name;
        std::function<std::string()> run;
    };
    const std::uint64_t lemma_bound = slow ? 5000 : 2000;
    const std::vector<Criterion> criteria = {
        {"oracle-triangle", criterion_oracle_triangle},
        {"main-theorem", criterion_main_theorem},
        {"lemma-suite", [&] { return criterion_lemma_suite(lemma_bound); }},
        {"golden-census-14", criterion_golden_census},
        {"involution-laws", criterion_involutions},
        {"tau-complement", criterion_tau_complement},
        {"conjecture-scan", criterion_conjecture_scan},
        {"crank-exploratory", criterion_crank_exploratory},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string outcome;
        bool pass = false;
        try {
            outcome = criteria[i].run();
            pass = true;
        } catch (const std::exception& e) {
            outcome = e.what();
        }
        const auto seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        std::printf("%s criterion-%zu %-18s %s [%.1fs]\n",
                    pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    outcome.c_str(), seconds);
        std::fflush(stdout);
        if (!pass)
            ++failures;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
