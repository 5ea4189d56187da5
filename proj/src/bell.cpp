#include "pom/bell.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "pom/task.hpp"

namespace pom {

namespace {

// C_y = sum_i s[i][y] A_i; grouping by y keeps assembly at n kron products.
std::vector<ComplexMatrix> alice_combinations(const MeasurementSetup& setup) {
    const SignMatrix signs = sign_matrix(setup.n);
    const std::size_t da = setup.alice.front().matrix.rows();
    std::vector<ComplexMatrix> combos(static_cast<std::size_t>(setup.n), ComplexMatrix(da, da));
    for (std::size_t i = 0; i < setup.alice.size(); ++i) {
        const ComplexMatrix& a = setup.alice[i].matrix;
        for (int y = 0; y < setup.n; ++y) {
            const double sgn = signs.s[i][static_cast<std::size_t>(y)];
            ComplexMatrix& c = combos[static_cast<std::size_t>(y)];
            for (std::size_t r = 0; r < da; ++r)
                for (std::size_t cc = 0; cc < da; ++cc) c(r, cc) += sgn * a(r, cc);
        }
    }
    return combos;
}

ComplexMatrix reshape(const PureState& state) {
    ComplexMatrix psi(state.dim_a, state.dim_b);
    for (std::size_t k = 0; k < state.dim_a; ++k)
        for (std::size_t l = 0; l < state.dim_b; ++l)
            psi(k, l) = state.amplitudes[k * state.dim_b + l];
    return psi;
}

}  // namespace

BellOperator bell_operator(const MeasurementSetup& setup) {
    const std::vector<ComplexMatrix> combos = alice_combinations(setup);
    const std::size_t da = setup.alice.front().matrix.rows();
    const std::size_t db = setup.bob.front().matrix.rows();
    BellOperator op;
    op.n = setup.n;
    op.matrix = ComplexMatrix(da * db, da * db);
    for (int y = 0; y < setup.n; ++y)
        op.matrix += kron(combos[static_cast<std::size_t>(y)], setup.bob[static_cast<std::size_t>(y)].matrix);
    return op;
}

double bell_value(const MeasurementSetup& setup) {
    const std::vector<ComplexMatrix> combos = alice_combinations(setup);
    const ComplexMatrix psi = reshape(setup.state);
    const ComplexMatrix psid = psi.adjoint();
    Complex total = 0.0;
    for (int y = 0; y < setup.n; ++y) {
        // <psi| C tensor B |psi> = tr[Psi^dag C Psi B^T]
        const ComplexMatrix lhs = psid * combos[static_cast<std::size_t>(y)] * psi;
        const ComplexMatrix& b = setup.bob[static_cast<std::size_t>(y)].matrix;
        for (std::size_t l = 0; l < lhs.rows(); ++l)
            for (std::size_t lp = 0; lp < lhs.cols(); ++lp) total += lhs(l, lp) * b(l, lp);
    }
    if (std::abs(total.imag()) > 1e-10)
        throw std::runtime_error("bell_value: expectation has a non-real part");
    return total.real();
}

SOSCertificate sos_certificate(const MeasurementSetup& setup) {
    const int n = setup.n;
    const double root_n = std::sqrt(static_cast<double>(n));
    const double bound = std::ldexp(1.0, n - 1) * root_n;
    const std::size_t da = setup.alice.front().matrix.rows();
    const std::size_t db = setup.bob.front().matrix.rows();
    const std::size_t joint = da * db;
    const SignMatrix signs = sign_matrix(n);
    const ComplexMatrix eye_a = ComplexMatrix::identity(da);
    const ComplexMatrix eye_b = ComplexMatrix::identity(db);

    ComplexMatrix gap = bell_operator(setup).matrix;
    gap *= Complex(-1.0);
    for (std::size_t i = 0; i < joint; ++i) gap(i, i) += bound;

    ComplexMatrix sum_squares(joint, joint);
    for (std::size_t i = 0; i < setup.alice.size(); ++i) {
        ComplexMatrix bob_mix(db, db);
        for (int y = 0; y < n; ++y) {
            const double coeff = signs.s[i][static_cast<std::size_t>(y)] / root_n;
            const ComplexMatrix& b = setup.bob[static_cast<std::size_t>(y)].matrix;
            for (std::size_t r = 0; r < db; ++r)
                for (std::size_t c = 0; c < db; ++c) bob_mix(r, c) += coeff * b(r, c);
        }
        const ComplexMatrix m = kron(eye_a, bob_mix) - kron(setup.alice[i].matrix, eye_b);
        sum_squares += m.adjoint() * m;
    }
    sum_squares *= Complex(0.5 * root_n);

    SOSCertificate cert;
    cert.residual = (gap - sum_squares).frobenius_norm();
    cert.gamma_min_eig = eig_hermitian(gap).values.front();
    return cert;
}

double spectral_max(const BellOperator& op) {
    return eig_hermitian(op.matrix).values.back();
}

double lhv_max(int n) {
    if (n < 2 || n > 5) throw std::invalid_argument("lhv_max: n must be in 2..5");
    const SignMatrix signs = sign_matrix(n);
    const int rows = signs.rows();
    const std::uint64_t assignments = std::uint64_t{1} << rows;
    double best = 0.0;
    for (std::uint64_t mask = 0; mask < assignments; ++mask) {
        double total = 0.0;
        for (int y = 0; y < n; ++y) {
            int sum = 0;
            for (int i = 0; i < rows; ++i) {
                const int a = (mask >> i) & 1 ? -1 : 1;
                sum += a * signs.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(y)];
            }
            total += std::abs(sum);
        }
        if (total > best) best = total;
    }
    return best;
}

}  // namespace pom
