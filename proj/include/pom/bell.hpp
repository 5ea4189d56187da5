#pragma once
// The Bell expression the game rides on: operator assembly, its value on a
// setup, the sum-of-squares certificate of the quantum bound 2^{n-1} sqrt(n),
// the spectral maximum, and the deterministic-assignment (local hidden
// variable) maximum.

#include "pom/construct.hpp"
#include "pom/matrix.hpp"

namespace pom {

struct BellOperator {
    int n = 0;
    ComplexMatrix matrix;  // Hermitian, dimension dim_a * dim_b
};

// sum_y sum_i s[i][y] (A_i tensor B_y) for the setup's observables.
BellOperator bell_operator(const MeasurementSetup& setup);

// <psi| operator |psi> without materializing the full operator; throws if the
// accumulated imaginary part exceeds 1e-10 (a non-Hermitian assembly bug).
double bell_value(const MeasurementSetup& setup);

struct SOSCertificate {
    double residual = 0.0;       // || gap - (sqrt(n)/2) sum_i M_i^dag M_i ||_F
    double gamma_min_eig = 0.0;  // least eigenvalue of the gap operator
};

// gap = 2^{n-1} sqrt(n) I - operator, decomposed through
// M_i = (1/sqrt(n)) sum_y s[i][y] (I tensor B_y) - (A_i tensor I).
// The identity needs only that the observables are involutions; the cross
// terms cancel through sign-matrix column orthogonality.  Broken inputs show
// up as a large residual instead of an exception.
SOSCertificate sos_certificate(const MeasurementSetup& setup);

double spectral_max(const BellOperator& op);

// max over deterministic +/-1 assignments a of sum_y |sum_i s[i][y] a_i|,
// by exhaustive enumeration of all 2^{2^{n-1}} assignments.
double lhv_max(int n);  // 2 <= n <= 5

}  // namespace pom
