#include <doctest.h>

#include "deltanu/bounds.hpp"

using namespace deltanu;

TEST_CASE("compute_d") {
    CHECK(compute_d(new_semigroup({5, 9, 11})) == 2);
    CHECK(compute_d(new_semigroup({3, 10, 11})) == 1);
    CHECK(compute_d(new_semigroup({3, 10, 14})) == 1);
    CHECK(compute_d(new_semigroup({6, 8, 9, 11})) == 1);
}

TEST_CASE("every observed element delta is a set of multiples of d") {
    const auto S = new_semigroup({5, 9, 11});
    const Value d = compute_d(S);
    Value smallest = 0;
    for (Value s = 0; s <= 300; ++s)
        for (Value gap : delta_of_element(S, s)) {
            CHECK(gap % d == 0);
            if (!smallest || gap < smallest) smallest = gap;
        }
    CHECK(smallest == d);  // d = min of the Delta set, observed empirically
}

TEST_CASE("bounds profile of <4,9,10,15>") {
    const auto B = compute_bounds(new_semigroup({4, 9, 10, 15}));
    CHECK(B.d == 1);
    REQUIRE(B.S_lower.size() == 2);
    CHECK(B.S_lower[0] == Rational(1026, 5));
    CHECK(B.S_lower[1] == Rational(1224, 5));
    CHECK(B.S_upper[0] == Rational(294));
    CHECK(B.S_upper[1] == Rational(250));
    CHECK(B.NS == 294);
    CHECK(B.lambda1 == Rational(31 * 294, 45));
    CHECK(B.lambda1.ceil() == 203);
    CHECK(B.lambda2 == Rational(31 * 294, 12));
    CHECK(B.lambda2.floor() == 759);
    CHECK(B.N0 == 89);  // the bound formula, not the reference figure 73
}

TEST_CASE("bounds profile of <3,10,11> and <3,10,14>") {
    const auto B1 = compute_bounds(new_semigroup({3, 10, 11}));
    CHECK(B1.NS == 190);
    CHECK(B1.lambda1 == Rational(1520, 11));
    CHECK(B1.lambda2 == Rational(1520, 3));
    CHECK(B1.N0 == 82);

    const auto B2 = compute_bounds(new_semigroup({3, 10, 14}));
    CHECK(B2.NS == 145);
    CHECK(B2.N0 == 60);
}

TEST_CASE("profile invariants") {
    for (const auto& gens :
         {std::vector<Value>{3, 10, 11}, {3, 10, 14}, {5, 12, 16}, {4, 7, 9},
          {6, 8, 9, 11}, {10, 13, 15}, {4, 9, 10, 15}}) {
        const auto S = new_semigroup(gens);
        const auto B = compute_bounds(S);
        for (Value ai : S.generators())
            CHECK((ai - S.multiplicity()) % B.d == 0);
        Rational m = B.S_lower[0];
        for (const auto& r : B.S_lower) m = rat_max(m, r);
        for (const auto& r : B.S_upper) m = rat_max(m, r);
        CHECK(B.NS == m.ceil());
        CHECK(B.lambda1 == rat_max(B.C1, B.C4));
        CHECK(B.lambda2 == -rat_min(B.C2, B.C3));
        CHECK(B.Lw <= Rational(0));
        CHECK(Rational(0) <= B.Lwp);
        CHECK(Rational(0) <= B.lambda1);
        CHECK(Rational(0) <= B.lambda2);
        CHECK(Rational(B.N0) >= Rational(B.NS, S.multiplicity()));
        // min W(n) >= NS from n = N0 on
        CHECK(B.N0 * S.multiplicity() >= B.NS);
        // determinism
        CHECK(compute_bounds(S).NS == B.NS);
        CHECK(compute_bounds(S).N0 == B.N0);
    }
}

TEST_CASE("p = 2 is rejected by the bound machinery") {
    const auto S = new_semigroup({3, 7});
    CHECK(compute_d(S) == 4);
    CHECK_THROWS_AS(compute_bounds(S), EmbeddingDimensionError);
}

TEST_CASE("zone_classify fixed points") {
    const auto S = new_semigroup({3, 10, 11});
    const auto B = compute_bounds(S);

    const auto z1 = zone_classify(S, 570, Factorization::of({190, 0, 0}), B);
    CHECK(std::find(z1.begin(), z1.end(), Zone::Z1) != z1.end());

    const auto z3 = zone_classify(S, 550, Factorization::of({0, 0, 50}), B);
    CHECK(std::find(z3.begin(), z3.end(), Zone::Z3) != z3.end());

    CHECK_THROWS_AS(zone_classify(S, B.NS - 1, Factorization::of({63, 0, 0}), B),
                    BelowBoundError);
}

TEST_CASE("zones cover every factorization above NS") {
    for (const auto& gens : {std::vector<Value>{3, 10, 11}, {4, 7, 9}}) {
        const auto S = new_semigroup(gens);
        const auto B = compute_bounds(S);
        for (Value s = B.NS; s <= B.NS + 3 * S.max_generator(); ++s)
            for (const auto& x : factorizations(S, s))
                CHECK_FALSE(zone_classify(S, s, x, B).empty());
    }
}

TEST_CASE("interior lengths land in Z2 only") {
    const auto S = new_semigroup({3, 10, 11});
    const auto B = compute_bounds(S);
    const Value s = 600;
    for (const auto& x : factorizations(S, s)) {
        const Rational L(x.length);
        const bool inside = Rational(s, S.max_generator()) + B.Lwp < L &&
                            L < Rational(s, S.multiplicity()) + B.Lw;
        if (!inside) continue;
        const auto zones = zone_classify(S, s, x, B);
        REQUIRE(zones.size() == 1);
        CHECK(zones[0] == Zone::Z2);
    }
}

TEST_CASE("profile serialization shape") {
    const auto j = to_json(compute_bounds(new_semigroup({3, 10, 11})));
    CHECK(j["NS"] == 190);
    CHECK(j["N0"] == 82);
    CHECK(j["lambda1"]["num"] == 1520);
    CHECK(j["lambda1"]["den"] == 11);
    CHECK(j["d"] == 1);
}
