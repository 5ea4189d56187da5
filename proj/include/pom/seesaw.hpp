#pragma once
// Alternating optimization of the Bell value over (Bob, Alice, state).  Each
// sub-step is the exact maximizer with the other two ingredients held fixed,
// so the objective never decreases; random restarts escape the suboptimal
// fixed points.

#include <cstddef>
#include <cstdint>

#include "pom/construct.hpp"

namespace pom {

struct SeesawConfig {
    int n = 0;
    std::size_t dim = 0;  // local dimension for both parties; 0 picks 2^{ceil(n/2)}
    int restarts = 10;
    int max_iterations = 400;
    double tolerance = 1e-12;  // stop when the objective gain drops below this
    std::uint64_t seed = 0;
};

struct SeesawTrace {
    std::vector<double> objectives;  // after every full step of the best restart
    MeasurementSetup setup;          // best setup found
    bool converged = false;
    int restarts = 0;
};

// One full update: Bob's observables from the sign of their steered operators,
// then Alice's against the new Bob, then the state to the top eigenvector of
// the rebuilt Bell operator.
MeasurementSetup seesaw_step(const MeasurementSetup& setup);

SeesawTrace seesaw_run(const SeesawConfig& config);

}  // namespace pom
