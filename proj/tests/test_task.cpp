#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "pom/task.hpp"

using namespace pom;

namespace {

std::vector<std::string> as_strings(const std::vector<BitString>& v) {
    std::vector<std::string> out;
    for (const BitString& b : v) out.push_back(b.to_string());
    return out;
}

}  // namespace

TEST_CASE("bit indexing is most-significant-first") {
    const BitString x{4, 0b0011};
    CHECK(x.to_string() == "0011");
    CHECK(x.bit(1) == 0);
    CHECK(x.bit(2) == 0);
    CHECK(x.bit(3) == 1);
    CHECK(x.bit(4) == 1);
    CHECK(x.weight() == 2);
    CHECK(x.complement().to_string() == "1100");
}

TEST_CASE("parity bit is the masked popcount") {
    CHECK(parity_bit(BitString{3, 0b011}, BitString{3, 0b010}) == 1);
    CHECK(parity_bit(BitString{3, 0b011}, BitString{3, 0b011}) == 0);
    CHECK(parity_bit(BitString{3, 0b111}, BitString{3, 0b101}) == 0);
    CHECK_THROWS_AS(parity_bit(BitString{2, 0}, BitString{3, 0}), std::invalid_argument);
}

TEST_CASE("input ordering for three bits") {
    const InputOrdering d = input_ordering(3);
    CHECK(as_strings(d.entries) ==
          std::vector<std::string>{"000", "001", "010", "100", "011", "101", "110", "111"});
}

TEST_CASE("input ordering for four bits") {
    const InputOrdering d = input_ordering(4);
    CHECK(as_strings(d.entries) ==
          std::vector<std::string>{"0000", "0001", "0010", "0100", "1000", "0011", "0101", "0110",
                                   "1001", "1010", "1100", "0111", "1011", "1101", "1110", "1111"});
}

TEST_CASE("ordering pairs complements across the midpoint") {
    for (int n = 1; n <= 12; ++n) {
        const InputOrdering d = input_ordering(n);
        const std::size_t count = d.entries.size();
        REQUIRE(count == (std::size_t{1} << n));
        std::set<std::uint32_t> seen;
        for (const BitString& x : d.entries) seen.insert(x.bits);
        CHECK(seen.size() == count);  // distinct and exhaustive
        for (std::size_t i = 0; i < count; ++i)
            CHECK(d.entries[i].complement().bits == d.entries[count - 1 - i].bits);
    }
}

TEST_CASE("ordering bounds are enforced") {
    CHECK_THROWS_AS(input_ordering(0), std::invalid_argument);
    CHECK_THROWS_AS(input_ordering(17), std::invalid_argument);
}

TEST_CASE("parity set holds every string of weight two or more") {
    CHECK(as_strings(parity_set(2)) == std::vector<std::string>{"11"});
    CHECK(as_strings(parity_set(3)) == std::vector<std::string>{"011", "101", "110", "111"});

    // the weight->=2 rule at n=4 gives eleven strings, including 1001 and 1010
    const auto p4 = as_strings(parity_set(4));
    CHECK(p4 == std::vector<std::string>{"0011", "0101", "0110", "1001", "1010", "1100", "0111",
                                         "1011", "1101", "1110", "1111"});

    for (int n = 2; n <= 12; ++n)
        CHECK(parity_set(n).size() == (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1);
}

TEST_CASE("sign matrix rows for three bits") {
    const SignMatrix s = sign_matrix(3);
    REQUIRE(s.rows() == 4);
    CHECK(s.s[0] == std::vector<int>{1, 1, 1});
    CHECK(s.s[1] == std::vector<int>{1, 1, -1});
    CHECK(s.s[2] == std::vector<int>{1, -1, 1});
    CHECK(s.s[3] == std::vector<int>{-1, 1, 1});
}

TEST_CASE("sign matrix for two bits matches the CHSH pattern") {
    const SignMatrix s = sign_matrix(2);
    REQUIRE(s.rows() == 2);
    CHECK(s.s[0] == std::vector<int>{1, 1});
    CHECK(s.s[1] == std::vector<int>{1, -1});
}

TEST_CASE("sign matrix columns are orthogonal") {
    for (int n = 2; n <= 12; ++n) {
        const SignMatrix s = sign_matrix(n);
        const int rows = s.rows();
        REQUIRE(rows == 1 << (n - 1));
        for (int y = 0; y < n; ++y)
            for (int yp = y; yp < n; ++yp) {
                long long dot = 0;
                for (int i = 0; i < rows; ++i)
                    dot += static_cast<long long>(s.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(y)]) *
                           s.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(yp)];
                CHECK(dot == (y == yp ? rows : 0));
            }
    }
}

TEST_CASE("bounds carry the closed forms") {
    const BoundsRecord b2 = bounds(2);
    CHECK(b2.classical == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(b2.pnc == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(b2.quantum_opt == doctest::Approx(0.85355339059327373).epsilon(1e-12));
    CHECK(b2.algebraic_success == 1.0);

    const BoundsRecord b3 = bounds(3);
    CHECK(b3.pnc == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(b3.quantum_opt == doctest::Approx(0.78867513459481287).epsilon(1e-12));

    const BoundsRecord b5 = bounds(5);
    CHECK(b5.pnc == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(b5.quantum_opt == doctest::Approx(0.72360679774997896).epsilon(1e-12));

    CHECK_THROWS_AS(bounds(1), std::invalid_argument);
}

TEST_CASE("quantum advantage shrinks but persists") {
    for (int n = 2; n <= 16; ++n) {
        const BoundsRecord b = bounds(n);
        CHECK(b.quantum_opt > b.pnc);
        CHECK(b.quantum_opt < 1.0);
    }
}

TEST_CASE("algebraic maximum of the Bell expression") {
    CHECK(algebraic_max(2) == 4.0);
    CHECK(algebraic_max(3) == 12.0);
    CHECK(algebraic_max(4) == 32.0);
    CHECK(algebraic_max(8) == 8.0 * 128.0);
}
