#pragma once
// Scoring the multiplexing game.  Two independent routes to the exact success
// probability (Born-rule sum over the ensemble, and 1/2 + bell/(2^n n)), the
// gap between them as a consistency check, and a seeded Monte Carlo
// simulation of actual game rounds.

#include <cstdint>

#include "pom/bell.hpp"
#include "pom/construct.hpp"

namespace pom {

// (1/(2^n n)) sum_{x,y} tr[rho_x Pi_y(x_y)] with Pi_y(0) = (I + B_y)/2.
// Outcome +1 decodes to the bit value 0 throughout.  Under the ensemble's
// factor-2 convention tr[rho_x] can differ from 1, so both outcome weights
// come from traces against rho_x; that is what keeps the identity with the
// Bell route exact for every state.
double exact_success_direct(const EncodingEnsemble& ensemble, const std::vector<Observable>& bob);

// 1/2 + bell_value / (2^n n).
double exact_success_via_bell(const MeasurementSetup& setup);

// |direct - via_bell|; an exact algebraic identity makes this vanish for any
// state and any involutions, so anything above roundoff flags a bug.
double success_route_gap(const MeasurementSetup& setup);

struct GameReport {
    int n = 0;
    double p_direct = 0.0;
    double p_via_bell = 0.0;
    double bell_value = 0.0;
    double pnc_bound = 0.0;
    double quantum_opt = 0.0;
};

GameReport game_report(const MeasurementSetup& setup);

struct SimulationResult {
    std::uint64_t rounds = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double standard_error = 0.0;  // sqrt(p(1-p)/rounds) at the estimate
    std::uint64_t seed = 0;
};

// Plays `rounds` independent rounds with uniformly random (x, y), sampling
// Bob's outcome from a cached Born probability table.  Identical
// (setup, rounds, seed) triples give identical transcripts.  Requires every
// ensemble state to have unit trace (steering probability exactly 1/2);
// throws otherwise, because sampled outcomes would have no honest
// distribution.
SimulationResult simulate(const MeasurementSetup& setup, std::uint64_t rounds, std::uint64_t seed);

}  // namespace pom
