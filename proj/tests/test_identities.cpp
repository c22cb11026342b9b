#include <catch2/catch_amalgamated.hpp>

#include "twosize/identities.hpp"

using namespace twosize;

TEST_CASE("rank statistics on spot partitions") {
    CHECK(dyson_rank({5, 1, 1, 1}) == 3);
    CHECK(dyson_rank({2, 1, 1, 4}) == -3);
    CHECK(dyson_rank({3, 4, 2, 1}) == -2);
    CHECK(rank2({5, 1, 1, 1}) == 3);
    CHECK(rank2({4, 1, 2, 1}) == 3);
    CHECK(rank2({3, 4, 2, 1}) == -4);
    CHECK(crank(TwoSizePartition{4, 1, 2, 1}) == 4);
    CHECK(crank(TwoSizePartition{5, 1, 1, 1}) == 0);
    CHECK(crank(TwoSizePartition{2, 1, 1, 4}) == -4);
    CHECK(crank(FrequencyPartition{{{3, 2}}}) == 3);
    CHECK(crank(FrequencyPartition{{{5, 1}, {2, 1}, {1, 2}}}) == -1);
}

TEST_CASE("parse_rank_stat round-trips the CLI names") {
    CHECK(parse_rank_stat("rk") == RankStat::dyson);
    CHECK(parse_rank_stat("rk2") == RankStat::rank2);
    CHECK(parse_rank_stat("crank") == RankStat::crank);
    CHECK(rank_stat_name(RankStat::rank2) == "rk2");
    CHECK_THROWS_AS(parse_rank_stat("rank"), std::domain_error);
}

TEST_CASE("least_residue is non-negative") {
    CHECK(least_residue(-3, 2) == 1);
    CHECK(least_residue(-4, 2) == 0);
    CHECK(least_residue(-1, 5) == 4);
    CHECK(least_residue(7, 5) == 2);
}

TEST_CASE("rank_class_census spot values") {
    const std::map<std::uint64_t, std::uint64_t> rk6 = {{0, 2}, {1, 4}};
    CHECK(rank_class_census(6, RankStat::dyson, 2) == rk6);
    // rk2 = l1 + l2 - 2*m1 - m2 is odd on every two-size partition of 6.
    const std::map<std::uint64_t, std::uint64_t> rk2_6 = {{1, 6}};
    CHECK(rank_class_census(6, RankStat::rank2, 2) == rk2_6);
    const std::map<std::uint64_t, std::uint64_t> rk2_14 = {{0, 8}, {1, 36}};
    CHECK(rank_class_census(14, RankStat::rank2, 2) == rk2_14);

    const std::map<std::uint64_t, std::uint64_t> collapsed6 = {{0, 6}};
    CHECK(rank_class_census(6, RankStat::dyson, 1) == collapsed6);
    const std::map<std::uint64_t, std::uint64_t> collapsed14 = {{0, 44}};
    CHECK(rank_class_census(14, RankStat::crank, 1) == collapsed14);

    CHECK_THROWS_AS(rank_class_census(0, RankStat::dyson, 2), std::domain_error);
    CHECK_THROWS_AS(rank_class_census(6, RankStat::dyson, 0), std::domain_error);
}

TEST_CASE("identity catalogue") {
    const auto ids = identity_ids();
    REQUIRE(ids.size() == 10);
    CHECK(ids.front() == "admissible-classes");
    CHECK(ids.back() == "main");
    CHECK(identity_residue("main") == std::pair<std::uint64_t, std::uint64_t>{16, 14});
    CHECK(identity_residue("three-class") ==
          std::pair<std::uint64_t, std::uint64_t>{8, 6});
    CHECK(identity_residue("twiceOEOE") ==
          std::pair<std::uint64_t, std::uint64_t>{4, 2});
    CHECK_THROWS_AS(identity_residue("bogus"), std::domain_error);
}

TEST_CASE("verify_identity rejects bad inputs") {
    CHECK_THROWS_AS(verify_identity("bogus", 14), std::domain_error);
    CHECK_THROWS_AS(verify_identity("main", 15), std::domain_error);
    CHECK_THROWS_AS(verify_identity("main", 16), std::domain_error);
    CHECK_THROWS_AS(verify_identity("three-class", 2), std::domain_error);
    CHECK_THROWS_AS(verify_identity("twiceOEOE", 4), std::domain_error);
}

TEST_CASE("main theorem report at 14") {
    const auto report = verify_identity("main", 14);
    CHECK(report.holds);
    CHECK(report.n == 14);
    CHECK(report.witnesses.empty());
    const decltype(report.values) expected = {
        {"nu2", 44}, {"nu2_closed", 44}, {"residue", 0}};
    CHECK(report.values == expected);
}

TEST_CASE("twiceOEOE report at 6") {
    const auto report = verify_identity("twiceOEOE", 6);
    CHECK(report.holds);
    const decltype(report.values) expected = {{"eoeo", 1},
                                              {"oeoe", 0},
                                              {"sigma_half", 4},
                                              {"d", 4},
                                              {"correction", 1}};
    CHECK(report.values == expected);
}

TEST_CASE("twiceOEOE holds when n/2 is an odd square") {
    // sigma_1(n/2)/2 and d(n)/4 are individually non-integral here; the
    // combined correction term still is, and the count identity holds.
    for (const std::uint64_t n : {2u, 18u, 50u, 98u})
        CHECK(verify_identity("twiceOEOE", n).holds);
}

TEST_CASE("remaining identities at their smallest admissible weights") {
    CHECK(verify_identity("admissible-classes", 6).holds);
    CHECK(verify_identity("oeeo-even", 6).holds);
    CHECK(verify_identity("odd-pairs", 14).holds);
    CHECK(verify_identity("even-parities", 14).holds);
    CHECK(verify_identity("three-class", 6).holds);
    CHECK(verify_identity("twogroup", 14).holds);

    const auto sixgroup = verify_identity("sixgroup", 14);
    CHECK(sixgroup.holds);
    bool found_sum = false;
    for (const auto& [name, v] : sixgroup.values)
        if (name == "sum") {
            CHECK(v == 36);
            found_sum = true;
        }
    CHECK(found_sum);

    const auto oeeo_value = verify_identity("oeeo-value", 14);
    CHECK(oeeo_value.holds);
    const decltype(oeeo_value.values) expected = {
        {"oeeo", 2}, {"d_half", 2}, {"lhs_mod4", 2}, {"rhs_mod4", 2}};
    CHECK(oeeo_value.values == expected);
}

TEST_CASE("reports are deterministic") {
    CHECK(verify_identity("sixgroup", 30) == verify_identity("sixgroup", 30));
    CHECK(rank_class_census(30, RankStat::rank2, 4) ==
          rank_class_census(30, RankStat::rank2, 4));
}

TEST_CASE("known_families lists the five progressions") {
    const auto& families = known_families();
    REQUIRE(families.size() == 5);
    CHECK(families[0] == CongruenceFamily{16, 14, 4});
    CHECK(families[4] == CongruenceFamily{252, 114, 4});
}

TEST_CASE("check_conjecture on the first family member") {
    const auto reports = check_conjecture({16, 14, 4}, RankStat::rank2, 0);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].identity_id == "conjecture:rk2:16n+14");
    CHECK(reports[0].n == 14);
    CHECK(reports[0].holds);
    CHECK(reports[0].witnesses.empty());
    const decltype(reports[0].values) expected = {
        {"odd", 36},          {"even", 8},
        {"odd_mod", 0},       {"even_mod", 0},
        {"zero_mod4_count", 4}, {"zero_mod4_residue", 0}};
    CHECK(reports[0].values == expected);
}

TEST_CASE("Dyson's rank fails on 16n+14 and the scanner surfaces it") {
    const auto reports = check_conjecture({16, 14, 4}, RankStat::dyson, 1);
    REQUIRE(reports.size() == 2);
    CHECK_FALSE(reports[0].holds); // at weight 14: odd 30, even 14
    CHECK_FALSE(reports[0].witnesses.empty());
    for (const auto& report : reports) {
        CHECK(report.witnesses.empty() == report.holds);
    }
}

TEST_CASE("crank parity counts are not always divisible by 4") {
    const auto reports = check_conjecture({36, 30, 4}, RankStat::crank, 1);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].holds);        // weight 30 happens to pass
    CHECK_FALSE(reports[1].holds);  // weight 66 does not
}

TEST_CASE("check_conjecture validates the family") {
    CHECK_THROWS_AS(check_conjecture({0, 14, 4}, RankStat::rank2, 1),
                    std::domain_error);
    CHECK_THROWS_AS(check_conjecture({16, 20, 4}, RankStat::rank2, 1),
                    std::domain_error);
    CHECK_THROWS_AS(check_conjecture({16, 14, 0}, RankStat::rank2, 1),
                    std::domain_error);
}
