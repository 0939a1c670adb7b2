#include <doctest.h>

#include <string>

#include "univoque/bases.hpp"

using namespace univoque;
using namespace univoque::bases;
using precise::Cmp;
using precise::PrecisionGuard;
using precise::Real;
using words::BinaryWord;

namespace {

Rational abs_diff(const Rational& a, const Rational& b) {
    Rational d = a - b;
    return d < 0 ? Rational(-d) : d;
}

// Reference decimals, correct to the stated digits.
const char* kQ1 = "1.6180339887498948482045868343656381177203";
const char* kQ2 = "1.754877666246692760049508896358528691895";
const char* kQ3 = "1.78459893336864680277434";
const char* kQ4 = "1.78720696278368580541083";
const char* kQ5 = "1.78723164790559652";
const char* kQ6 = "1.78723165018296593";
const char* kQLim = "1.7872316501829659330132748903370083853379";
const char* kZ2 = "1.05070300714529022830566527918251";
const char* kZ3 = "1.00296041936767706";
const char* kZ4 = "1.00002519204891051";

} // namespace

TEST_CASE("level-1 base is the golden ratio") {
    BaseLadder ladder;
    precise::RootInterval q1 = ladder.qn(1, pow2_inv(120));
    CHECK(q1.width() <= pow2_inv(120));
    CHECK(abs_diff(q1.mid(), parse_number(kQ1)) < parse_number("1e-30"));
    // Same number as (1 + sqrt 5) / 2 built directly.
    PrecisionGuard guard(160);
    Real golden = (Real(1) + Real::from_rational(Rational(5)).sqrt()) / Real(2);
    CHECK(golden.compare(q1.enclosure()) == Cmp::Undecided); // overlap
    CHECK(abs_diff(q1.mid(), golden.lo_rational()) <= pow2_inv(120));
}

TEST_CASE("ladder bases match their reference decimals") {
    BaseLadder ladder;
    Rational w = pow2_inv(90);
    CHECK(abs_diff(ladder.qn(2, w).mid(), parse_number(kQ2)) < parse_number("1e-25"));
    CHECK(abs_diff(ladder.qn(3, w).mid(), parse_number(kQ3)) < parse_number("1e-20"));
    CHECK(abs_diff(ladder.qn(4, w).mid(), parse_number(kQ4)) < parse_number("1e-20"));
    CHECK(abs_diff(ladder.qn(5, w).mid(), parse_number(kQ5)) < parse_number("1e-15"));
    CHECK(abs_diff(ladder.qn(6, w).mid(), parse_number(kQ6)) < parse_number("1e-15"));
    CHECK(abs_diff(ladder.q_limit(w).mid(), parse_number(kQLim)) < parse_number("1e-25"));
}

TEST_CASE("ladder increases strictly towards its limit") {
    BaseLadder ladder;
    Rational w = pow2_inv(100);
    for (int n = 1; n < 6; ++n)
        CHECK(ladder.qn(n, w).hi < ladder.qn(n + 1, w).lo);
    for (int n = 1; n <= 6; ++n)
        CHECK(ladder.qn(n, w).hi < ladder.q_limit(w).hi + w);
    // Level 8 already agrees with the limit far beyond 1e-6.
    CHECK(abs_diff(ladder.qn(8).mid(), ladder.q_limit().mid()) < parse_number("1e-6"));
}

TEST_CASE("defining relation holds at the bracketed base") {
    BaseLadder ladder;
    PrecisionGuard guard(200);
    // sum of t_i q^-i over one block is exactly 1 at the level base.
    for (int n = 1; n <= 4; ++n) {
        words::Seq block_sum(words::thue_morse_word(size_t{1} << n), BinaryWord{{0, 1}});
        // Evaluate the finite part only: subtract the (01)^inf tail we padded.
        Real q = ladder.qn(n, pow2_inv(150)).enclosure();
        Real tail = precise::eval_at(words::periodic(BinaryWord{{0, 1}}), q) *
                    q.pow_int(-(long{1} << n));
        Real finite = precise::eval_at(block_sum, q) - tail;
        CHECK(finite.contains(Rational(1)));
    }
}

TEST_CASE("scan limit sits where the ladder meets the solver tolerance") {
    BaseLadder ladder;
    CHECK(ladder.scan_limit() == 6);
}

TEST_CASE("z values decrease to 1 and match their references") {
    BaseLadder ladder;
    Rational w = pow2_inv(90);
    CHECK(abs_diff(ladder.zn(2, w).lo_rational(), parse_number(kZ2)) < parse_number("1e-20"));
    CHECK(abs_diff(ladder.zn(3, w).lo_rational(), parse_number(kZ3)) < parse_number("1e-15"));
    CHECK(abs_diff(ladder.zn(4, w).lo_rational(), parse_number(kZ4)) < parse_number("1e-15"));
    for (int n = 1; n < 7; ++n)
        CHECK(ladder.zn(n, w).compare(ladder.zn(n + 1, w)) == Cmp::Greater);
    // Direct comparison against 1 stops deciding once the excess sinks below
    // the enclosure width; the shifted form stays decidable.
    for (int n = 1; n <= 7; ++n)
        CHECK(ladder.zn_minus_one(n, w).sign_lo() > 0);
}

TEST_CASE("cancellation-free excess agrees with the direct value") {
    BaseLadder ladder;
    Rational w = pow2_inv(90);
    for (int n = 2; n <= 5; ++n) {
        Real direct = ladder.zn(n, w);
        Real shifted = ladder.zn_minus_one(n, w) + Real(1);
        // The two enclosures must overlap around the common true value.
        CHECK(direct.compare(shifted) == Cmp::Undecided);
    }
    CHECK(abs_diff(ladder.zn_minus_one(5, w).lo_rational(),
                   parse_number("2.3017464601955530773e-9")) < parse_number("1e-22"));
    CHECK(abs_diff(ladder.zn_minus_one(6, w).lo_rational(),
                   parse_number("1.959883643599878571e-17")) < parse_number("1e-30"));
}

TEST_CASE("level-1 plateau values increase towards the golden ratio") {
    BaseLadder ladder;
    Rational w = pow2_inv(90);
    CHECK(ladder.z1k(1, w).contains(Rational(1)));
    CHECK(abs_diff(ladder.z1k(2, w).lo_rational(),
                   parse_number("1.23606797749978969640917366873128")) <
          parse_number("1e-20"));
    CHECK(abs_diff(ladder.z1k(3, w).lo_rational(),
                   parse_number("1.3819660112501051518")) < parse_number("1e-15"));
    CHECK(abs_diff(ladder.z1k(4, w).lo_rational(),
                   parse_number("1.4721359549995793928")) < parse_number("1e-15"));
    CHECK(abs_diff(ladder.z1k(20, w).lo_rational(),
                   parse_number("1.617967881788542952")) < parse_number("1e-15"));
    for (int k = 1; k <= 21; ++k) {
        CHECK(ladder.z1k(k, w).compare(ladder.z1k(k + 1, w)) == Cmp::Less);
        // The plateau stays strictly below its limit, the golden ratio.
        CHECK(ladder.z1k(k, w).compare(parse_number(kQ1)) == Cmp::Less);
    }
    CHECK_THROWS_AS(ladder.z1k(0), DomainError);
}

TEST_CASE("exclusion gaps match their reference endpoints") {
    BaseLadder ladder;
    Rational w = pow2_inv(90);
    const char* left[] = {"0.61803398874989484820", "0.38196601125010515180",
                          "0.23606797749978969641"};
    const char* right[] = {"0.81452653224191550655", "0.45574759833652745686",
                           "0.25500197374518898142"};
    for (int k = 1; k <= 3; ++k) {
        CHECK(abs_diff(ladder.gap_left(k, w).lo_rational(), parse_number(left[k - 1])) <
              parse_number("1e-15"));
        CHECK(abs_diff(ladder.gap_right(k, w).lo_rational(), parse_number(right[k - 1])) <
              parse_number("1e-15"));
        CHECK(ladder.gap_left(k, w).compare(ladder.gap_right(k, w)) == Cmp::Less);
    }
    // Gaps are pairwise disjoint and ordered right to left.
    CHECK(ladder.gap_right(3, w).compare(ladder.gap_left(2, w)) == Cmp::Less);
    CHECK(ladder.gap_right(2, w).compare(ladder.gap_left(1, w)) == Cmp::Less);
    // First gap's left endpoint is 1/q_1: their product is exactly 1.
    precise::PrecisionGuard guard(160);
    CHECK((ladder.gap_left(1, pow2_inv(120)) *
           ladder.qn(1, pow2_inv(120)).enclosure())
              .contains(Rational(1)));
    CHECK_THROWS_AS(ladder.gap_left(0), DomainError);
    CHECK_THROWS_AS(ladder.gap_right(4), DomainError);
}

TEST_CASE("expansions of 1 at the exact ladder bases repeat the lowered block") {
    BaseLadder ladder;
    for (int n = 1; n <= 6; ++n) {
        size_t len = size_t{3} << n; // three blocks of length 2^n
        BinaryWord block = words::word_minus(words::thue_morse_word(size_t{1} << n));
        BinaryWord want = words::periodic(block).prefix(len);
        CHECK(ladder.alpha_at_level(n, len) == want);
    }
}

TEST_CASE("expansion of 1 at a rational base near the level-2 base") {
    // Just below the base the first eight digits still follow the block
    // pattern of the base itself.
    CHECK(quasi_greedy_alpha(parse_number("1.754877666"), 8) ==
          BinaryWord::from_string("11001100"));
    CHECK(quasi_greedy_alpha(parse_number("1.9"), 8) ==
          BinaryWord::from_string("11101001"));
    CHECK_THROWS_AS(quasi_greedy_alpha(Rational(2), 4), DomainError);
    CHECK_THROWS_AS(quasi_greedy_alpha(Rational(1), 4), DomainError);
}

TEST_CASE("expansion over an enclosure reports the first uncertifiable digit") {
    BaseLadder ladder;
    precise::PrecisionGuard guard(128);
    Real q2 = ladder.qn(2, pow2_inv(100)).enclosure();
    try {
        quasi_greedy_alpha(q2, 8);
        FAIL("expected BoundaryError");
    } catch (const BoundaryError& e) {
        // Digit 4 is the exact tie at the level-2 base.
        CHECK(e.index() == 4);
    }
    // Away from the tie the same enclosure certifies every digit.
    CHECK(quasi_greedy_alpha(q2, 3) == BinaryWord::from_string("110"));
}

TEST_CASE("ladder argument validation") {
    BaseLadder ladder;
    CHECK_THROWS_AS(ladder.qn(0), DomainError);
    CHECK_THROWS_AS(ladder.qn(21), DomainError);
    CHECK_THROWS_AS(BaseLadder(Rational(0)), DomainError);
    CHECK_THROWS_AS(BaseLadder(pow2_inv(40), 0), DomainError);
    CHECK(BaseLadder(pow2_inv(20), 8).max_level() == 8);
}
