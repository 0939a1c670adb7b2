#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "univoque/errors.hpp"

namespace univoque::words {

/// Finite string of digits over {0,1}.
class BinaryWord {
public:
    BinaryWord() = default;
    BinaryWord(std::initializer_list<int> digits);
    static BinaryWord from_string(std::string_view text);
    static BinaryWord repeated(int digit, size_t count);

    size_t size() const { return d_.size(); }
    bool empty() const { return d_.empty(); }
    int operator[](size_t i) const { return d_[i]; }
    int back() const { return d_.back(); }
    void push_back(int digit);
    void pop_back() { d_.pop_back(); }

    BinaryWord operator+(const BinaryWord& other) const;
    BinaryWord times(size_t k) const;
    BinaryWord prefix(size_t len) const;

    bool operator==(const BinaryWord&) const = default;
    std::string str() const;

private:
    std::vector<uint8_t> d_;
};

/// Hard cap on generated word lengths / digit counts.
inline constexpr size_t kMaxWordLength = size_t{1} << 20;

/// i-th digit (0-indexed) of the fixed point of 0 -> 01, 1 -> 10:
/// the parity of the binary weight of i.
int thue_morse_digit(uint64_t i);

/// First n digits t_0 t_1 ... t_{n-1}, built by the doubling recurrence
/// (append the digitwise complement).  n <= 2^20.
BinaryWord thue_morse_prefix(size_t n);

/// The digits t_1 ... t_m, i.e. the prefix with t_0 = 0 dropped.  This is the
/// indexing used by expansions, whose digits start at position 1.  m <= 2^20.
BinaryWord thue_morse_word(size_t m);

/// Digitwise complement.
BinaryWord reflect(const BinaryWord& w);

/// Lower the last digit: w must be non-empty and end in 1.
BinaryWord word_minus(const BinaryWord& w);

/// Raise the last digit: w must be non-empty and end in 0.
BinaryWord word_plus(const BinaryWord& w);

/// Eventually periodic digit sequence  preamble (cycle)^inf  held in the
/// canonical form that makes equal streams compare equal: the cycle is
/// primitive (not a power of a shorter word) and the preamble is shortest
/// (no trailing preamble digit can be absorbed by rotating the cycle).
class Seq {
public:
    Seq(BinaryWord preamble, BinaryWord cycle);
    /// Parse the rendering produced by str(): PREAMBLE(CYCLE)^inf.
    static Seq parse(std::string_view text);

    const BinaryWord& preamble() const { return pre_; }
    const BinaryWord& cycle() const { return cyc_; }
    /// Digit at 0-indexed position i of the infinite stream.
    int digit_at(uint64_t i) const;
    /// First len digits of the stream.
    BinaryWord prefix(size_t len) const;

    bool operator==(const Seq&) const = default;
    std::string str() const;

private:
    BinaryWord pre_, cyc_;
};

/// Lexicographic comparison of the two infinite streams.  Decided by position
/// max(preambles) + lcm(cycles), the bound past which equal prefixes force
/// equal streams.
std::strong_ordering lex_compare(const Seq& a, const Seq& b);

/// Digitwise complement of the stream.
Seq reflect(const Seq& s);

/// Periodic stream (cycle)^inf.
Seq periodic(const BinaryWord& cycle);

} // namespace univoque::words
