#include <doctest.h>

#include "deltanu/periodicity.hpp"

using namespace deltanu;

TEST_CASE("lcm_period") {
    CHECK(lcm_period(new_semigroup({3, 10, 11})) == 33);
    CHECK(lcm_period(new_semigroup({3, 10, 14})) == 42);
    CHECK(lcm_period(new_semigroup({4, 9, 10, 15})) == 60);
}

TEST_CASE("shift invariance on small corpus members") {
    for (const auto& gens : {std::vector<Value>{3, 10, 14}, {4, 7, 9}, {10, 13, 15}}) {
        const auto S = new_semigroup(gens);
        const auto B = compute_bounds(S);
        CHECK(verify_shift_invariance(S, B, 1));
    }
}

TEST_CASE("report for <3,10,11>: constant periodic part {1}") {
    const auto S = new_semigroup({3, 10, 11});
    const auto r = minimal_period_report(S, 200);
    CHECK(r.delta == 33);
    CHECK(r.N0 == 82);
    CHECK(r.theorem_holds);
    CHECK(r.minimal_period == 1);
    CHECK(r.minimal_preperiod == 8);
    CHECK(r.residue_table.at(0) == SortedSet{1});
    CHECK(r.periodic_part_constant);
    CHECK(r.nonconstant_preperiod);  // small n hit {1,2} before settling
    CHECK(r.verified_upto == 200);
    CHECK_FALSE(r.empirical);
}

TEST_CASE("report for <3,10,14>: period 3") {
    const auto S = new_semigroup({3, 10, 14});
    const auto r = minimal_period_report(S, 250);
    CHECK(r.theorem_holds);
    CHECK(r.minimal_period == 3);
    // Final residue table as actually computed (and cross-checked against
    // the naive path in the acceptance suite): the rule from n = 5 on.
    CHECK(r.residue_table.at(0) == SortedSet{1, 4});
    CHECK(r.residue_table.at(1) == SortedSet{1, 2});
    CHECK(r.residue_table.at(2) == SortedSet{1, 3});
    CHECK(r.minimal_preperiod == 5);
    CHECK_FALSE(r.periodic_part_constant);
}

TEST_CASE("residue table replays the whole computed tail") {
    const auto S = new_semigroup({3, 10, 14});
    const Value n_max = 180;
    const auto r = minimal_period_report(S, n_max);
    for (Value n = r.minimal_preperiod; n <= n_max; ++n)
        CHECK(delta_nu_naive(S, n) == r.residue_table.at(n % r.minimal_period));
}

TEST_CASE("minimal period divides delta") {
    for (const auto& gens : {std::vector<Value>{4, 7, 9}, {10, 13, 15}, {6, 8, 9, 11}}) {
        const auto S = new_semigroup(gens);
        const auto B = compute_bounds(S);
        const auto r = minimal_period_report(S, B.N0 + 2 * lcm_period(S) + 10);
        CHECK(r.delta % r.minimal_period == 0);
        CHECK(r.theorem_holds);
        CHECK(r.minimal_preperiod <= r.N0);
    }
}

TEST_CASE("window too small") {
    const auto S = new_semigroup({3, 10, 11});
    CHECK_THROWS_AS(minimal_period_report(S, 100), WindowTooSmallError);  // needs 82+66
}

TEST_CASE("p = 2 report is empirical") {
    const auto S = new_semigroup({3, 7});  // delta = 21
    const auto r = minimal_period_report(S, 100);
    CHECK(r.empirical);
    CHECK(r.delta == 21);
    CHECK(r.N0 == 100 - 42);  // scan ceiling stands in for the bound
    CHECK(r.theorem_holds);
    CHECK(r.delta % r.minimal_period == 0);
    for (Value n = r.minimal_preperiod; n <= 100; ++n)
        CHECK(delta_nu_naive(S, n) == r.residue_table.at(n % r.minimal_period));
}

TEST_CASE("report serialization") {
    const auto j = to_json(minimal_period_report(new_semigroup({3, 10, 11}), 160));
    CHECK(j["generators"] == nlohmann::json({3, 10, 11}));
    CHECK(j["delta"] == 33);
    CHECK(j["N0"] == 82);
    CHECK(j["minimal_period"] == 1);
    CHECK(j["minimal_preperiod"] == 8);
    CHECK(j["residue_table"]["0"] == nlohmann::json({1}));
    CHECK(j["theorem_holds"] == true);
    CHECK(j["verified_upto"] == 160);
}
