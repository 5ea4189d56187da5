#pragma once
// Classical side of the game: deterministic encode/decode strategies, their
// exact success counts and parity profiles, and the linear program over
// strategy mixtures with parity-obliviousness imposed on the mixture.

#include <cstdint>
#include <utility>
#include <vector>

#include "pom/task.hpp"

namespace pom {

struct ClassicalStrategy {
    int n = 0;
    int alphabet = 0;          // message alphabet size m
    std::vector<int> encoder;  // 2^n entries indexed by the value of x, each in 0..m-1
    std::vector<int> decoder;  // decoder[mu * n + (y-1)] in {0, 1}
};

// Send the first (leftmost) bit; answer it when asked y = 1, answer 0
// otherwise.  Parity-oblivious by construction and scores (n+1)/(2n).
ClassicalStrategy first_bit_strategy(int n);

// (successful (x, y) pairs, total pairs 2^n * n); exact integers.
std::pair<long long, long long> strategy_success_count(const ClassicalStrategy& strategy);

double strategy_success(const ClassicalStrategy& strategy);

// counts[s_index][mu] = #{x : enc(x)=mu, s.x=0} - #{x : enc(x)=mu, s.x=1}.
// All-zero rows mean the message reveals nothing about any parity.
struct ParityProfile {
    std::vector<BitString> parities;  // parity_set(n)
    std::vector<std::vector<long long>> counts;
};

ParityProfile strategy_parity_profile(const ClassicalStrategy& strategy);

struct SupportEntry {
    std::size_t encoder_index = 0;  // mixed-radix code of the encoder table
    std::size_t decoder_index = 0;  // binary code of the decoder table
    double weight = 0.0;
    double success = 0.0;
};

struct ClassicalLPReport {
    int n = 0;
    int alphabet = 0;
    double optimal_value = 0.0;
    std::size_t support_size = 0;
    double max_parity_deviation = 0.0;  // of the optimal mixture
    std::vector<SupportEntry> support;
};

// Optimal success over shared-randomness mixtures of deterministic
// strategies, subject to parity obliviousness.  Obliviousness has to survive
// conditioning on everything Bob holds -- his decoding rule included -- so
// the constraint sum_t q_t * profile_t[s][mu] = 0 applies within each
// decoder's share of the mixture.  (Pooling the constraint across decoders
// is vacuous: relabeled perfect encoders with matched decoders cancel every
// parity count and reach success 1.)  The block structure makes the program
// separable: one LP over encoder mixtures per deterministic decoder, best
// block wins.  n in {2, 3}, alphabet in {2, 3, 4}; refuses combinations
// whose strategy count m^{2^n} * 2^{m n} exceeds about 10^6.
ClassicalLPReport lp_optimal_classical(int n, int alphabet);

}  // namespace pom
