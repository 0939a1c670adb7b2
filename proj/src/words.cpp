#include "univoque/words.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace univoque::words {

BinaryWord::BinaryWord(std::initializer_list<int> digits) {
    d_.reserve(digits.size());
    for (int d : digits) push_back(d);
}

BinaryWord BinaryWord::from_string(std::string_view text) {
    BinaryWord w;
    w.d_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw ParseError(std::string("invalid digit '") + c + "' in word");
        w.d_.push_back(static_cast<uint8_t>(c - '0'));
    }
    return w;
}

BinaryWord BinaryWord::repeated(int digit, size_t count) {
    if (digit != 0 && digit != 1) throw DomainError("digit must be 0 or 1");
    if (count > kMaxWordLength) throw SizeError("word length above cap");
    BinaryWord w;
    w.d_.assign(count, static_cast<uint8_t>(digit));
    return w;
}

void BinaryWord::push_back(int digit) {
    if (digit != 0 && digit != 1) throw DomainError("digit must be 0 or 1");
    if (d_.size() >= kMaxWordLength) throw SizeError("word length above cap");
    d_.push_back(static_cast<uint8_t>(digit));
}

BinaryWord BinaryWord::operator+(const BinaryWord& other) const {
    if (d_.size() + other.d_.size() > kMaxWordLength)
        throw SizeError("word length above cap");
    BinaryWord w = *this;
    w.d_.insert(w.d_.end(), other.d_.begin(), other.d_.end());
    return w;
}

BinaryWord BinaryWord::times(size_t k) const {
    if (!d_.empty() && k > kMaxWordLength / d_.size())
        throw SizeError("word length above cap");
    BinaryWord w;
    w.d_.reserve(d_.size() * k);
    for (size_t i = 0; i < k; ++i)
        w.d_.insert(w.d_.end(), d_.begin(), d_.end());
    return w;
}

BinaryWord BinaryWord::prefix(size_t len) const {
    if (len > d_.size()) throw DomainError("prefix longer than word");
    BinaryWord w;
    w.d_.assign(d_.begin(), d_.begin() + static_cast<ptrdiff_t>(len));
    return w;
}

std::string BinaryWord::str() const {
    std::string s;
    s.reserve(d_.size());
    for (uint8_t d : d_) s.push_back(static_cast<char>('0' + d));
    return s;
}

int thue_morse_digit(uint64_t i) {
    return std::popcount(i) & 1;
}

BinaryWord thue_morse_prefix(size_t n) {
    if (n > kMaxWordLength) throw SizeError("word length above cap");
    BinaryWord w;
    if (n == 0) return w;
    w.push_back(0);
    while (w.size() < n) {
        size_t len = w.size();
        for (size_t i = 0; i < len && w.size() < n; ++i)
            w.push_back(1 - w[i]);
    }
    return w;
}

BinaryWord thue_morse_word(size_t m) {
    if (m >= kMaxWordLength) throw SizeError("word length above cap");
    BinaryWord p = thue_morse_prefix(m + 1);
    BinaryWord w;
    for (size_t i = 1; i <= m; ++i) w.push_back(p[i]);
    return w;
}

BinaryWord reflect(const BinaryWord& w) {
    BinaryWord r;
    for (size_t i = 0; i < w.size(); ++i) r.push_back(1 - w[i]);
    return r;
}

BinaryWord word_minus(const BinaryWord& w) {
    if (w.empty() || w.back() != 1)
        throw DomainError("word_minus requires a non-empty word ending in 1");
    BinaryWord r = w;
    r.pop_back();
    r.push_back(0);
    return r;
}

BinaryWord word_plus(const BinaryWord& w) {
    if (w.empty() || w.back() != 0)
        throw DomainError("word_plus requires a non-empty word ending in 0");
    BinaryWord r = w;
    r.pop_back();
    r.push_back(1);
    return r;
}

Seq::Seq(BinaryWord preamble, BinaryWord cycle)
    : pre_(std::move(preamble)), cyc_(std::move(cycle)) {
    if (cyc_.empty()) throw DomainError("sequence cycle must be non-empty");

    // Shrink the cycle to its primitive root.
    size_t m = cyc_.size();
    for (size_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        bool periodic = true;
        for (size_t i = d; i < m && periodic; ++i)
            periodic = (cyc_[i] == cyc_[i % d]);
        if (periodic) {
            cyc_ = cyc_.prefix(d);
            break;
        }
    }

    // Absorb preamble digits that merely rotate the cycle.
    while (!pre_.empty() && pre_.back() == cyc_.back()) {
        BinaryWord rotated;
        rotated.push_back(cyc_.back());
        for (size_t i = 0; i + 1 < cyc_.size(); ++i) rotated.push_back(cyc_[i]);
        cyc_ = rotated;
        pre_.pop_back();
    }
}

Seq Seq::parse(std::string_view text) {
    auto open = text.find('(');
    auto close = text.find(')');
    if (open == std::string_view::npos || close == std::string_view::npos ||
        close < open || text.substr(close + 1) != "^inf")
        throw ParseError("sequence literal must look like PRE(CYC)^inf");
    BinaryWord pre = BinaryWord::from_string(text.substr(0, open));
    BinaryWord cyc = BinaryWord::from_string(text.substr(open + 1, close - open - 1));
    if (cyc.empty()) throw ParseError("sequence literal has empty cycle");
    return Seq(std::move(pre), std::move(cyc));
}

int Seq::digit_at(uint64_t i) const {
    if (i < pre_.size()) return pre_[static_cast<size_t>(i)];
    return cyc_[static_cast<size_t>((i - pre_.size()) % cyc_.size())];
}

BinaryWord Seq::prefix(size_t len) const {
    BinaryWord w;
    for (size_t i = 0; i < len; ++i) w.push_back(digit_at(i));
    return w;
}

std::string Seq::str() const {
    return pre_.str() + "(" + cyc_.str() + ")^inf";
}

std::strong_ordering lex_compare(const Seq& a, const Seq& b) {
    size_t pre = std::max(a.preamble().size(), b.preamble().size());
    size_t cyc = std::lcm(a.cycle().size(), b.cycle().size());
    if (cyc > kMaxWordLength) throw SizeError("cycle lcm above cap");
    size_t bound = pre + cyc;
    for (size_t i = 0; i < bound; ++i) {
        int da = a.digit_at(i), db = b.digit_at(i);
        if (da != db) return da <=> db;
    }
    return std::strong_ordering::equal;
}

Seq reflect(const Seq& s) {
    return Seq(reflect(s.preamble()), reflect(s.cycle()));
}

Seq periodic(const BinaryWord& cycle) {
    return Seq(BinaryWord{}, cycle);
}

} // namespace univoque::words
