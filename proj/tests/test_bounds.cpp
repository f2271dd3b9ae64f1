#include <doctest.h>

#include "forb/bounds.hpp"
#include "forb/choice.hpp"

using namespace forb;

TEST_CASE("bound report at (3,3)") {
    BoundReport b = bounds(3, 3);
    CHECK(b.eq1_lower == 20);
    CHECK(b.eq1_upper == 26);  // floor(3/2 * 3 * 4) + 8
    REQUIRE(b.coeff_general_upper == BigRat(83, 192));
    BigRat forb = BigRat(forb_via_choices(3, 3, ChoiceSearchMode::All).value);
    CHECK(BigRat(b.eq1_lower) <= forb);
    CHECK(forb <= BigRat(b.eq1_upper));
    REQUIRE(b.sandwich_lower.has_value());
    REQUIRE(b.sandwich_upper.has_value());
    CHECK(*b.sandwich_lower <= forb);
    CHECK(forb <= *b.sandwich_upper);
}

TEST_CASE("H upper bound value at m=6") {
    BoundReport b = bounds(6, 3, 0, 1, 0.0, /*h_max_m=*/0);
    CHECK(b.h_upper_alpha2 == BigRat(83));  // (83/192) * 6 * 32
}

TEST_CASE("general upper coefficient") {
    CHECK(general_upper_coefficient(2) == BigRat(83, 192));
    CHECK(general_upper_coefficient(3) == BigRat(814, 5832));
    CHECK_THROWS_AS(general_upper_coefficient(3, 2), std::domain_error);  // alpha < 2
}

TEST_CASE("bounds domain errors") {
    CHECK_THROWS_AS(bounds(3, 2), std::domain_error);
    CHECK_THROWS_AS(sandwich_check(3, 2), std::domain_error);
}

TEST_CASE("sandwich at (4,3) is tight") {
    SandwichReport s = sandwich_check(4, 3);
    CHECK(s.forb_value == 60);
    CHECK(s.forb_method == "choices-all");
    CHECK(s.lower == BigRat(12));
    CHECK(s.middle == BigRat(12));
    CHECK(s.upper == BigRat(12));
    CHECK(s.tight);
}

TEST_CASE("sandwich at (3,4)") {
    SandwichReport s = sandwich_check(3, 4);
    CHECK(s.forb_value == 61);
    CHECK(s.lower == BigRat(7));   // H2(3, 3/2) * 2 = 3.5 * 2
    CHECK(s.middle == BigRat(7));  // 61 - 27 - 27
    CHECK(s.upper == BigRat(7));
    CHECK(s.tight);
}

TEST_CASE("sandwich trivial sizes") {
    SandwichReport s2 = sandwich_check(2, 5);
    CHECK(s2.forb_value == 25);
    CHECK(s2.lower == BigRat(1));
    CHECK(s2.middle == BigRat(1));
    CHECK(s2.tight);
    SandwichReport s1 = sandwich_check(1, 4);
    CHECK(s1.forb_value == 4);
    CHECK(s1.middle == BigRat(0));
    CHECK(s1.lower_ok);
    SandwichReport s0 = sandwich_check(0, 3);
    CHECK(s0.forb_value == 1);
    CHECK(s0.middle == BigRat(0));
    CHECK(s0.lower_ok);
    CHECK(s0.upper_ok);
}

TEST_CASE("sandwich witness mode stays one-sided") {
    SandwichReport s = sandwich_check(8, 3);  // 3^8 = 6561 columns: witness mode
    CHECK(s.forb_method == "witness-lower-bound");
    CHECK_FALSE(s.forb_exact);
    // uniformly directed DP-optimal witness realizes the lower endpoint exactly
    CHECK(s.middle == s.lower);
    CHECK(s.lower_ok);
}
