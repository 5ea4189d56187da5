#include "pom/task.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace pom {

int BitString::weight() const { return std::popcount(bits); }

BitString BitString::complement() const {
    const std::uint32_t mask = (length == 32) ? ~0u : ((1u << length) - 1u);
    return BitString{length, bits ^ mask};
}

std::string BitString::to_string() const {
    std::string out(static_cast<std::size_t>(length), '0');
    for (int y = 1; y <= length; ++y)
        if (bit(y)) out[static_cast<std::size_t>(y - 1)] = '1';
    return out;
}

int parity_bit(const BitString& s, const BitString& x) {
    if (s.length != x.length) throw std::invalid_argument("parity_bit: length mismatch");
    return std::popcount(s.bits & x.bits) & 1;
}

InputOrdering input_ordering(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("input_ordering: n must be in 1..16");
    InputOrdering out;
    out.n = n;
    const std::uint32_t count = 1u << n;
    out.entries.reserve(count);
    for (std::uint32_t v = 0; v < count; ++v) out.entries.push_back(BitString{n, v});
    std::stable_sort(out.entries.begin(), out.entries.end(), [](const BitString& a, const BitString& b) {
        const int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.bits < b.bits;
    });
    return out;
}

std::vector<BitString> parity_set(int n) {
    if (n < 2 || n > 16) throw std::invalid_argument("parity_set: n must be in 2..16");
    std::vector<BitString> out;
    for (const BitString& x : input_ordering(n).entries)
        if (x.weight() >= 2) out.push_back(x);
    return out;
}

SignMatrix sign_matrix(int n) {
    if (n < 2 || n > 16) throw std::invalid_argument("sign_matrix: n must be in 2..16");
    const InputOrdering ordering = input_ordering(n);
    const std::size_t half = ordering.entries.size() / 2;
    SignMatrix out;
    out.n = n;
    out.s.resize(half);
    for (std::size_t i = 0; i < half; ++i) {
        out.s[i].resize(static_cast<std::size_t>(n));
        for (int y = 1; y <= n; ++y)
            out.s[i][static_cast<std::size_t>(y - 1)] = ordering.entries[i].bit(y) ? -1 : 1;
    }
    return out;
}

BoundsRecord bounds(int n) {
    if (n < 2) throw std::invalid_argument("bounds: n must be at least 2");
    BoundsRecord out;
    out.n = n;
    out.pnc = static_cast<double>(n + 1) / (2.0 * n);
    out.classical = out.pnc;
    out.quantum_opt = 0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(n)));
    out.algebraic_success = 1.0;
    return out;
}

double algebraic_max(int n) {
    if (n < 2) throw std::invalid_argument("algebraic_max: n must be at least 2");
    return static_cast<double>(n) * std::ldexp(1.0, n - 1);
}

}  // namespace pom
