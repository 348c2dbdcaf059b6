#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace replab {

using BigInt = boost::multiprecision::cpp_int;

enum class WordMode { Linear, Cyclic };

// Finite binary word, bit-packed (bit j = symbol j), length <= 63.
struct SymbolicWord {
    std::uint64_t bits = 0;
    int length = 0;
    WordMode mode = WordMode::Linear;

    static SymbolicWord from_string(const std::string& s, WordMode mode = WordMode::Linear);
    std::string to_string() const;
    int symbol(int j) const { return static_cast<int>((bits >> j) & 1u); }
};

// No adjacent ones; cyclic mode additionally forbids last=1 together with first=1.
bool is_admissible(const SymbolicWord& w);

// Linear: drop the first symbol. Cyclic: rotate left by one.
SymbolicWord shift(const SymbolicWord& w);

// Truncated sigma-metric: sum_j |s1_j - s2_j| / 2^j over equal-length prefixes.
double sigma_metric(const SymbolicWord& a, const SymbolicWord& b);

struct CountTable {
    int n = 0;
    BigInt A;  // admissible linear n-words           (A_n = F_{n+2})
    BigInt B;  // admissible cyclic n-words = #{S^n = id}  (B_n = L_n)
    BigInt F;  // Fibonacci F_n
    BigInt L;  // Lucas L_n
};

// Recurrence-computed table; valid for any n >= 1 (arbitrary precision).
CountTable counts(long n);

struct PeriodicEnumeration {
    std::vector<SymbolicWord> words;  // all cyclic admissible n-words
    CountTable table;
};

// Exhaustive enumeration, n <= 30; counts alone use counts() beyond that.
PeriodicEnumeration enumerate_periodic(int n);

// Prefix of the dense orbit: the first m admissible words in
// length-then-lex order, joined by single '0' separators.
std::string dense_orbit_prefix(long m);

// All admissible linear words of a given length, lex order, as strings.
std::vector<std::string> admissible_words(int n);

}  // namespace replab
