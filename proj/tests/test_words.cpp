#include <doctest.h>

#include <string>
#include <vector>

#include "univoque/words.hpp"

using namespace univoque;
using namespace univoque::words;

namespace {

// Independent digit definition: parity of the number of set bits.
int parity_digit(uint64_t i) {
    int bits = 0;
    while (i) {
        bits ^= static_cast<int>(i & 1);
        i >>= 1;
    }
    return bits;
}

} // namespace

TEST_CASE("parity digits match the binary-weight definition") {
    for (uint64_t i = 0; i < (uint64_t{1} << 16); ++i)
        REQUIRE(thue_morse_digit(i) == parity_digit(i));
    // Spot checks far past the table-building range.
    CHECK(thue_morse_digit(uint64_t{1} << 40) == 1);
    CHECK(thue_morse_digit((uint64_t{1} << 40) - 1) == 0);
}

TEST_CASE("parity prefix follows the doubling recurrence") {
    // prefix(2m) = prefix(m) + complement(prefix(m))
    for (size_t m : {1, 2, 4, 32, 256}) {
        BinaryWord half = thue_morse_prefix(m);
        CHECK(thue_morse_prefix(2 * m) == half + reflect(half));
    }
    BinaryWord p = thue_morse_prefix(512);
    for (size_t i = 0; i < 512; ++i)
        REQUIRE(p[i] == thue_morse_digit(i));
    CHECK(thue_morse_word(8) == BinaryWord::from_string("11010011"));
}

TEST_CASE("word drops the leading digit of the prefix") {
    BinaryWord p = thue_morse_prefix(17);
    BinaryWord w = thue_morse_word(16);
    REQUIRE(w.size() == 16);
    for (size_t i = 0; i < 16; ++i)
        CHECK(w[i] == p[i + 1]);
}

TEST_CASE("word construction helpers") {
    CHECK(BinaryWord::from_string("10110").str() == "10110");
    CHECK_THROWS_AS(BinaryWord::from_string("10x"), ParseError);
    CHECK(BinaryWord::repeated(1, 4).str() == "1111");
    CHECK(BinaryWord::repeated(0, 0).empty());
    CHECK_THROWS_AS(BinaryWord::repeated(2, 3), DomainError);

    BinaryWord w = BinaryWord::from_string("10");
    CHECK(w.times(3).str() == "101010");
    CHECK(w.times(0).empty());
    CHECK((w + BinaryWord::from_string("01")).str() == "1001");
    CHECK(BinaryWord::from_string("11010").prefix(3).str() == "110");
    CHECK_THROWS_AS(w.prefix(5), DomainError);

    CHECK(reflect(BinaryWord::from_string("1101")).str() == "0010");
    CHECK(reflect(reflect(BinaryWord::from_string("100110"))) ==
          BinaryWord::from_string("100110"));

    CHECK(word_minus(BinaryWord::from_string("1101")).str() == "1100");
    CHECK(word_plus(BinaryWord::from_string("1100")).str() == "1101");
    CHECK_THROWS_AS(word_minus(BinaryWord::from_string("10")), DomainError);
    CHECK_THROWS_AS(word_plus(BinaryWord::from_string("11")), DomainError);
    CHECK_THROWS_AS(word_minus(BinaryWord{}), DomainError);
}

TEST_CASE("length caps are enforced") {
    CHECK_THROWS_AS(thue_morse_prefix(kMaxWordLength + 1), SizeError);
    CHECK_THROWS_AS(BinaryWord::repeated(0, kMaxWordLength + 1), SizeError);
    CHECK_THROWS_AS(BinaryWord::from_string("10").times(kMaxWordLength), SizeError);
}

TEST_CASE("parity blocks at small index") {
    // Block j: the first 2^(j-1) parity digits with the last digit lowered.
    auto block = [](int j) {
        return word_minus(thue_morse_word(size_t{1} << (j - 1)));
    };
    CHECK(block(1).str() == "0");
    CHECK(block(2).str() == "10");
    CHECK(block(3).str() == "1100");
    CHECK(block(4).str() == "11010010");
}

TEST_CASE("sequences reduce to canonical form") {
    // Cycle made primitive.
    CHECK(Seq(BinaryWord{}, BinaryWord::from_string("1010")).str() == "(10)^inf");
    // Trailing preamble digits absorbed by rotating the cycle.
    CHECK(Seq(BinaryWord::from_string("11"), BinaryWord::from_string("01")).str() ==
          "1(10)^inf");
    CHECK(Seq(BinaryWord::from_string("1101"), BinaryWord::from_string("0011")).str() ==
          "110(1001)^inf");
    // Preamble fully merged into the cycle.
    CHECK(Seq(BinaryWord::from_string("11"), BinaryWord::from_string("0011")).str() ==
          "(1100)^inf");
    // Equal streams built differently compare equal.
    CHECK(Seq(BinaryWord::from_string("0"), BinaryWord::from_string("10")) ==
          periodic(BinaryWord::from_string("01")));
    CHECK(Seq(BinaryWord::from_string("110"), BinaryWord::from_string("10")) ==
          Seq(BinaryWord::from_string("1"), BinaryWord::from_string("10")));
    CHECK_THROWS_AS(Seq(BinaryWord{}, BinaryWord{}), DomainError);
}

TEST_CASE("sequence digits and prefixes agree") {
    Seq s(BinaryWord::from_string("110"), BinaryWord::from_string("1001"));
    BinaryWord p = s.prefix(23);
    for (size_t i = 0; i < 23; ++i)
        CHECK(s.digit_at(i) == p[i]);
    // Far past the preamble the digits cycle.
    for (uint64_t i = 3; i < 40; ++i)
        CHECK(s.digit_at(i) == s.digit_at(i + 4));
}

TEST_CASE("sequence literals round-trip") {
    for (const char* text : {"(0)^inf", "(1)^inf", "1(10)^inf", "110(1001)^inf",
                             "0000(01)^inf", "1101001(0110100110010110)^inf"}) {
        Seq s = Seq::parse(text);
        CHECK(s.str() == text);
        CHECK(Seq::parse(s.str()) == s);
    }
    CHECK_THROWS_AS(Seq::parse("10"), ParseError);
    CHECK_THROWS_AS(Seq::parse("1()^inf"), ParseError);
    CHECK_THROWS_AS(Seq::parse("1(10)^in"), ParseError);
    CHECK_THROWS_AS(Seq::parse("2(10)^inf"), ParseError);
}

TEST_CASE("lexicographic comparison of streams") {
    Seq a = Seq::parse("(1100)^inf");
    Seq b = Seq::parse("1(10)^inf"); // = 1101010...
    CHECK(lex_compare(a, b) == std::strong_ordering::less);
    CHECK(lex_compare(b, a) == std::strong_ordering::greater);
    CHECK(lex_compare(a, a) == std::strong_ordering::equal);
    // Streams equal although built from different parts.
    CHECK(lex_compare(Seq::parse("0(10)^inf"), Seq::parse("(01)^inf")) ==
          std::strong_ordering::equal);
    // Order decided deep inside the cycles.
    Seq c(BinaryWord::from_string("110100"), BinaryWord::from_string("110100110"));
    Seq d(BinaryWord::from_string("110100"), BinaryWord::from_string("110100111"));
    CHECK(lex_compare(c, d) == std::strong_ordering::less);
    // Comparison agrees with long unrolled prefixes.
    std::vector<Seq> pool = {a, b, c, d, Seq::parse("(01)^inf"), Seq::parse("(1)^inf"),
                             Seq::parse("0111(010)^inf")};
    for (const Seq& u : pool)
        for (const Seq& v : pool) {
            auto got = lex_compare(u, v);
            auto want = std::strong_ordering::equal;
            for (size_t i = 0; i < 256; ++i) {
                if (u.digit_at(i) != v.digit_at(i)) {
                    want = u.digit_at(i) < v.digit_at(i) ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
                    break;
                }
            }
            CHECK(got == want);
        }
}

TEST_CASE("stream reflection") {
    CHECK(reflect(Seq::parse("1(10)^inf")) == Seq::parse("0(01)^inf"));
    CHECK(reflect(Seq::parse("(0)^inf")) == Seq::parse("(1)^inf"));
    Seq s = Seq::parse("110(1001)^inf");
    CHECK(reflect(reflect(s)) == s);
    for (uint64_t i = 0; i < 50; ++i)
        CHECK(reflect(s).digit_at(i) == 1 - s.digit_at(i));
}
