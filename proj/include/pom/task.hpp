#pragma once
// Combinatorial layer of the multiplexing game: bit strings with the
// weight-then-value input ordering, the parity set (weight >= 2), the
// +/-1 sign matrix over the first half of the ordering, and the closed-form
// success bounds.

#include <cstdint>
#include <string>
#include <vector>

namespace pom {

// n bits x_1 ... x_n with x_1 stored in the most significant position, so
// bit(1) is the leftmost character of to_string().
struct BitString {
    int length = 0;
    std::uint32_t bits = 0;

    int bit(int y) const { return static_cast<int>((bits >> (length - y)) & 1u); }
    int weight() const;
    BitString complement() const;
    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;
};

// XOR of the bits of s selected by x (the parity s.x).
int parity_bit(const BitString& s, const BitString& x);

// All 2^n strings sorted by Hamming weight, then by numeric value.  Entries
// i and 2^n+1-i (1-based) are bitwise complements.
struct InputOrdering {
    int n = 0;
    std::vector<BitString> entries;
};

InputOrdering input_ordering(int n);  // 1 <= n <= 16

// Strings of weight >= 2 in the same ordering; size 2^n - n - 1.
std::vector<BitString> parity_set(int n);  // 2 <= n <= 16

// s[i][y] = (-1)^(x^i_y) over the first half of the ordering:
// 2^{n-1} rows, n columns, entries +/-1.  Columns are orthogonal with
// squared length 2^{n-1}.
struct SignMatrix {
    int n = 0;
    std::vector<std::vector<int>> s;

    int rows() const { return static_cast<int>(s.size()); }
};

SignMatrix sign_matrix(int n);  // 2 <= n <= 16

struct BoundsRecord {
    int n = 0;
    double classical = 0.0;         // best parity-oblivious classical success
    double pnc = 0.0;               // same number, (n+1)/(2n)
    double quantum_opt = 0.0;       // (1 + 1/sqrt(n)) / 2
    double algebraic_success = 1.0; // success if every round could be won
};

BoundsRecord bounds(int n);  // n >= 2

// Largest conceivable value of the Bell expression: n * 2^{n-1}.
double algebraic_max(int n);

}  // namespace pom
