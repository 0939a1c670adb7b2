#include <doctest.h>

#include <cstdint>

#include "univoque/oracle.hpp"
#include "univoque/solver.hpp"

using namespace univoque;
using oracle::BranchResult;
using oracle::BranchVerdict;
using words::BinaryWord;
using words::Seq;

namespace {

// x pseudo-random in [lo, hi) on a fixed millionths grid.
Rational draw(uint64_t& state, const Rational& lo, const Rational& hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    Rational t = make_rational(Integer(static_cast<unsigned long>(state >> 44)),
                               Integer(1) << 20);
    return lo + t * (hi - lo);
}

// Lexicographically largest feasible digit word, by exhaustive search over
// the remainder walk r -> q r - d.  A prefix extends to an infinite
// expansion iff every remainder stays in [0, cap]; keeping remainders
// strictly positive instead selects prefixes of non-terminating expansions.
bool lexmax_feasible(const Rational& r, const Rational& q, const Rational& cap,
                     int depth, bool keep_positive, BinaryWord& out) {
    if (depth == 0) return true;
    for (int d = 1; d >= 0; --d) {
        Rational nr = q * r - d;
        if (sgn(nr) < 0 || nr > cap) continue;
        if (keep_positive && sgn(nr) == 0) continue;
        out.push_back(d);
        if (lexmax_feasible(nr, q, cap, depth - 1, keep_positive, out)) return true;
        out.pop_back();
    }
    return false;
}

} // namespace

TEST_CASE("branch walk verdicts over rational bases") {
    using oracle::expansion_branches;
    auto multiple = [](BranchResult r, int depth) {
        return r.verdict == BranchVerdict::Multiple && r.depth == depth;
    };
    auto unique = [](BranchResult r, int depth) {
        return r.verdict == BranchVerdict::Unique && r.depth == depth;
    };

    CHECK(multiple(expansion_branches(parse_number("0.7"), parse_number("1.7"), 40), 1));
    CHECK(unique(expansion_branches(Rational(2), make_rational(3, 2), 60), 60));
    CHECK(unique(expansion_branches(Rational(1), make_rational(19, 10), 20), 20));
    CHECK(multiple(expansion_branches(Rational(2), make_rational(149, 100), 40), 9));
    CHECK(unique(expansion_branches(Rational(0), parse_number("1.7"), 10), 10));
    CHECK(unique(expansion_branches(Rational(1), parse_number("1.7"), 0), 0));

    // Past the representable range no digit works at all.
    BranchResult none = expansion_branches(Rational(3), make_rational(3, 2), 40);
    CHECK(none.verdict == BranchVerdict::Infeasible);
    CHECK(none.depth == 0);
    CHECK(expansion_branches(Rational(-1), parse_number("1.7"), 10).verdict ==
          BranchVerdict::Infeasible);
}

TEST_CASE("branch walk at ladder bases decides exact ties") {
    // The whole ladder lies inside the branching region for x = 1.
    CHECK(oracle::expansion_branches_at_level(Rational(1), 1, 40).verdict ==
          BranchVerdict::Multiple);
    CHECK(oracle::expansion_branches_at_level(Rational(1), 1, 40).depth == 1);

    // At level 2 the second step lands on an exact tie: the digit-0 test
    // value is a factor of the defining relation, so it vanishes at the base
    // without reducing to zero in the ring.  The walk must still call it.
    BranchResult tie = oracle::expansion_branches_at_level(Rational(1), 2, 64);
    CHECK(tie.verdict == BranchVerdict::Multiple);
    CHECK(tie.depth == 2);

    // An enclosure of the same base cannot certify that tie at any width.
    bases::BaseLadder ladder;
    precise::PrecisionGuard guard(256);
    BranchResult enc = oracle::expansion_branches(
        Rational(1), ladder.qn(2, pow2_inv(128)).enclosure(), 64);
    CHECK(enc.verdict == BranchVerdict::Undecided);
    CHECK(enc.depth == 2);
}

TEST_CASE("greedy and quasi-greedy frozen digits") {
    using oracle::greedy_expansion;
    using oracle::quasi_greedy_expansion;

    CHECK(oracle::greedy_expansion_at_level(Rational(1), 1, 4).str() == "1100");
    CHECK(oracle::greedy_expansion_at_level(Rational(1), 2, 8).str() == "11010000");
    CHECK(oracle::quasi_greedy_expansion_at_level(Rational(1), 2, 12).str() ==
          "110011001100");
    CHECK(greedy_expansion(Rational(1), make_rational(19, 10), 8).str() == "11101001");

    // Ties split the two conventions: greedy zeroes out, quasi-greedy keeps
    // the remainder alive.
    CHECK(greedy_expansion(make_rational(2, 3), make_rational(3, 2), 4).str() == "1000");
    CHECK(quasi_greedy_expansion(make_rational(2, 3), make_rational(3, 2), 4).str() ==
          "0101");

    CHECK(greedy_expansion(Rational(0), parse_number("1.5"), 6).str() == "000000");
    // At the representable cap both conventions emit all ones.
    CHECK(greedy_expansion(Rational(2), make_rational(3, 2), 6).str() == "111111");
    CHECK(quasi_greedy_expansion(Rational(2), make_rational(3, 2), 6).str() == "111111");
}

TEST_CASE("greedy expansions dominate every feasible word") {
    for (auto [xt, qt, depth] : {std::tuple{"0.8", "1.6", 12}, {"2/3", "3/2", 10}}) {
        Rational x = parse_number(xt), q = parse_number(qt);
        Rational cap = 1 / Rational(q - 1);
        BinaryWord greedy_ref, quasi_ref;
        REQUIRE(lexmax_feasible(x, q, cap, depth, false, greedy_ref));
        REQUIRE(lexmax_feasible(x, q, cap, depth, true, quasi_ref));
        CHECK(oracle::greedy_expansion(x, q, static_cast<size_t>(depth)).str() ==
              greedy_ref.str());
        CHECK(oracle::quasi_greedy_expansion(x, q, static_cast<size_t>(depth)).str() ==
              quasi_ref.str());
    }
}

TEST_CASE("exact and enclosure walks agree") {
    precise::PrecisionGuard guard(256);
    uint64_t state = 20260815;
    for (int i = 0; i < 50; ++i) {
        Rational x = draw(state, parse_number("0.01"), Rational(1));
        Rational q = draw(state, parse_number("1.05"), parse_number("1.95"));
        CAPTURE(i);

        BranchResult exact = oracle::expansion_branches(x, q, 24);
        BranchResult enc = oracle::expansion_branches(x, precise::Real::from_rational(q), 24);
        REQUIRE(enc.verdict != BranchVerdict::Undecided);
        CHECK(enc.verdict == exact.verdict);
        CHECK(enc.depth == exact.depth);

        CHECK(oracle::greedy_expansion(x, precise::Real::from_rational(q), 24).str() ==
              oracle::greedy_expansion(x, q, 24).str());
    }
}

TEST_CASE("enclosure expansions report the undecidable digit") {
    // The greedy walk of 1 at the level-2 base hits the defining relation
    // exactly at digit 4; no enclosure width can certify that digit.
    bases::BaseLadder ladder;
    precise::PrecisionGuard guard(256);
    try {
        oracle::greedy_expansion(Rational(1), ladder.qn(2, pow2_inv(128)).enclosure(), 8);
        FAIL("expected BoundaryError");
    } catch (const BoundaryError& e) {
        CHECK(e.index() == 4);
    }
}

TEST_CASE("uniqueness reports cross-check solved bases") {
    bases::BaseLadder ladder;

    solver::QsResult r = solver::qs(parse_number("1.2"), ladder);
    oracle::UniquenessReport rep =
        oracle::verify_uniqueness_at(parse_number("1.2"), *r.qs, *r.gamma, r.level, 48);
    CHECK(rep.pass);
    CHECK(rep.is_family_member);
    CHECK(rep.value_enclosed);
    CHECK(rep.branches.verdict == BranchVerdict::Unique);
    CHECK(rep.branches.depth == 48);

    solver::QsResult r2 = solver::qs(Rational(2), ladder);
    oracle::UniquenessReport rep2 =
        oracle::verify_uniqueness_at(Rational(2), *r2.qs, *r2.gamma, r2.level, 64);
    CHECK(rep2.pass);
    CHECK(rep2.branches.verdict == BranchVerdict::Unique);
    CHECK(rep2.branches.depth == 64);

    // A bracket away from the root fails the enclosure check and branches.
    precise::RootInterval shifted = *r.qs;
    shifted.lo += make_rational(1, 50);
    shifted.hi += make_rational(1, 50);
    oracle::UniquenessReport bad =
        oracle::verify_uniqueness_at(parse_number("1.2"), shifted, *r.gamma, r.level, 24);
    CHECK(!bad.pass);
    CHECK(bad.is_family_member);
    CHECK(!bad.value_enclosed);
    CHECK(bad.branches.verdict == BranchVerdict::Multiple);
    CHECK(!bad.detail.empty());

    // A family member that is not the witness misses the bracket value.
    oracle::UniquenessReport wrong = oracle::verify_uniqueness_at(
        parse_number("1.2"), *r.qs, words::periodic(BinaryWord{1, 0}), r.level, 24);
    CHECK(!wrong.pass);
    CHECK(wrong.is_family_member);
    CHECK(!wrong.value_enclosed);

    // A stream outside the family fails the membership check as well.
    oracle::UniquenessReport outside = oracle::verify_uniqueness_at(
        parse_number("1.2"), *r.qs, Seq(BinaryWord{1, 0}, BinaryWord{0}), r.level, 24);
    CHECK(!outside.pass);
    CHECK(!outside.is_family_member);
    CHECK(!outside.value_enclosed);
}

TEST_CASE("rational bases near the smallest unique base still branch") {
    // Uniqueness holds on a thin set: stepping off the solved root to a
    // nearby rational base reintroduces a branch within a few digits, while
    // a rational a hair from the root tracks it beyond 48 digits.
    using oracle::expansion_branches;
    Rational x = parse_number("1.2");
    BranchResult below = expansion_branches(x, parse_number("1.640"), 48);
    CHECK(below.verdict == BranchVerdict::Multiple);
    CHECK(below.depth == 6);
    BranchResult above = expansion_branches(x, parse_number("1.642"), 48);
    CHECK(above.verdict == BranchVerdict::Multiple);
    CHECK(above.depth == 7);
    BranchResult at = expansion_branches(x, parse_number("1.641061655563"), 48);
    CHECK(at.verdict == BranchVerdict::Unique);
}

TEST_CASE("oracle argument validation") {
    CHECK_THROWS_AS(oracle::greedy_expansion(Rational(2), parse_number("1.9"), 8),
                    DomainError);
    CHECK_THROWS_AS(oracle::greedy_expansion(Rational(-1), parse_number("1.5"), 8),
                    DomainError);
    CHECK_THROWS_AS(oracle::greedy_expansion(Rational(1), Rational(1), 8), DomainError);
    CHECK_THROWS_AS(oracle::greedy_expansion(Rational(1), Rational(2), 8), DomainError);
    CHECK_THROWS_AS(oracle::quasi_greedy_expansion(Rational(0), parse_number("1.5"), 8),
                    DomainError);
    CHECK_THROWS_AS(oracle::expansion_branches(Rational(1), parse_number("1.5"), -1),
                    DomainError);
    CHECK_THROWS_AS(oracle::expansion_branches(Rational(1), parse_number("2.5"), 8),
                    DomainError);
    CHECK_THROWS_AS(
        oracle::greedy_expansion(Rational(1), parse_number("1.5"), (size_t{1} << 20) + 1),
        SizeError);
    CHECK_THROWS_AS(oracle::expansion_branches_at_level(Rational(1), 0, 8), SizeError);
    CHECK_THROWS_AS(oracle::expansion_branches_at_level(Rational(1), 11, 8), SizeError);
}
