#pragma once
// Builds the measurement setups the game is played with: Bob's recursive
// anti-commuting observable family, Alice's sign-weighted combinations, the
// maximally entangled state, and the steered encoding ensemble together with
// its parity-obliviousness check.

#include <cstddef>
#include <vector>

#include "pom/matrix.hpp"
#include "pom/rng.hpp"
#include "pom/task.hpp"

namespace pom {

// A +/-1-valued measurement: Hermitian involution.  Kept as a thin wrapper so
// deliberately broken inputs can still be represented in tests; validate with
// is_valid_observable / validate_setup where a contract requires it.
struct Observable {
    ComplexMatrix matrix;
};

struct PureState {
    std::vector<Complex> amplitudes;  // length dim_a * dim_b, index = a * dim_b + b
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;

    double norm() const;
};

struct MeasurementSetup {
    int n = 0;
    PureState state;
    std::vector<Observable> alice;  // 2^{n-1} observables on the A factor
    std::vector<Observable> bob;    // n observables on the B factor
};

bool is_valid_observable(const Observable& o, double tol = 1e-12);

// Throws std::invalid_argument describing the first violated condition.
void validate_setup(const MeasurementSetup& setup, double tol = 1e-12);

// Bob's observable family on dimension 2^{floor(n/2)}.  Base cases are
// (sigma_x, sigma_y) and (sigma_x, sigma_y, sigma_z); each further n extends
// by sigma_x tensor (previous family) plus fresh sigma_y / sigma_z slots.
// Members pairwise anti-commute and square to the identity.
std::vector<Observable> bob_basis(int n);  // 2 <= n <= 12

// A_i = (1/sqrt(n)) * sum_y s[i][y] B_y over the basis family; involutions,
// and sum_i s[i][y] A_i = (2^{n-1}/sqrt(n)) B_y.
std::vector<Observable> alice_observables(int n);

// (1/sqrt(d)) sum_k |k>|k> with d = 2^{floor(n/2)}.
PureState canonical_state(int n);

// What Bob actually measures: the elementwise transpose of bob_basis.  On the
// canonical state <B tensor B^T> = 1, which is what makes every term of the
// Bell expression peak simultaneously.
std::vector<Observable> bob_measurements(int n);

MeasurementSetup canonical_setup(int n);

// Alice's steered ensemble.  rho_x for the i-th ordering entry comes from
// projecting on (I + A_i)/2, its complement partner from (I - A_i)/2, both
// scaled by 2 (the canonical steering probability is exactly 1/2).  With that
// convention rho_x + rho_xbar = 2 Tr_A[rho_AB] holds exactly for any state;
// steering_deviation records max |p - 1/2| and is reported, not fatal.
struct EncodingEnsemble {
    int n = 0;
    std::vector<ComplexMatrix> states;  // indexed by the numeric value of x
    std::vector<BitString> parities;    // parity_set(n)
    double steering_deviation = 0.0;
};

EncodingEnsemble encode_ensemble(const MeasurementSetup& setup);

struct ParityCheck {
    double max_deviation = 0.0;
    std::vector<BitString> parities;
    std::vector<double> deviations;  // Frobenius norm per parity, same order
};

// || sum_{s.x=0} rho_x - sum_{s.x=1} rho_x ||_F for every parity s.
ParityCheck verify_parity_obliviousness(const EncodingEnsemble& ensemble);

// Random ingredients for property tests and see-saw restarts.
ComplexMatrix random_hermitian(std::size_t dim, Xoshiro256pp& rng);
ComplexMatrix random_involution(std::size_t dim, Xoshiro256pp& rng);

enum class StateKind { Canonical, Haar };

// Random valid setup: random involutions for both parties, state either the
// canonical maximally entangled one or Haar random on dim_a * dim_b.
MeasurementSetup random_setup(int n, std::size_t dim_a, std::size_t dim_b, Xoshiro256pp& rng,
                              StateKind state_kind = StateKind::Canonical);

}  // namespace pom
