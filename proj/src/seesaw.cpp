#include "pom/seesaw.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pom/bell.hpp"
#include "pom/task.hpp"

namespace pom {

namespace {

ComplexMatrix reshape(const PureState& state) {
    ComplexMatrix psi(state.dim_a, state.dim_b);
    for (std::size_t k = 0; k < state.dim_a; ++k)
        for (std::size_t l = 0; l < state.dim_b; ++l)
            psi(k, l) = state.amplitudes[k * state.dim_b + l];
    return psi;
}

}  // namespace

MeasurementSetup seesaw_step(const MeasurementSetup& setup) {
    const int n = setup.n;
    const SignMatrix signs = sign_matrix(n);
    const std::size_t da = setup.state.dim_a;
    const std::size_t db = setup.state.dim_b;
    MeasurementSetup next = setup;

    const ComplexMatrix psi = reshape(setup.state);
    const ComplexMatrix psid = psi.adjoint();

    // Bob: maximize sum_y tr[B_y R_y] with R_y = Tr_A[(C_y tensor I) rho],
    // C_y = sum_i s[i][y] A_i.  R_y = (Psi^dag C_y Psi)^T is Hermitian, and
    // the optimum over involutions is its matrix sign.
    for (int y = 0; y < n; ++y) {
        ComplexMatrix combo(da, da);
        for (std::size_t i = 0; i < setup.alice.size(); ++i) {
            const double sgn = signs.s[i][static_cast<std::size_t>(y)];
            const ComplexMatrix& a = setup.alice[i].matrix;
            for (std::size_t r = 0; r < da; ++r)
                for (std::size_t c = 0; c < da; ++c) combo(r, c) += sgn * a(r, c);
        }
        const ComplexMatrix steered = (psid * combo * psi).transpose();
        next.bob[static_cast<std::size_t>(y)].matrix = matrix_sign(steered);
    }

    // Alice against the refreshed Bob: S_i = Tr_B[(I tensor D_i) rho]
    // = Psi D_i^T Psi^dag with D_i = sum_y s[i][y] B_y.
    for (std::size_t i = 0; i < setup.alice.size(); ++i) {
        ComplexMatrix mix(db, db);
        for (int y = 0; y < n; ++y) {
            const double sgn = signs.s[i][static_cast<std::size_t>(y)];
            const ComplexMatrix& b = next.bob[static_cast<std::size_t>(y)].matrix;
            for (std::size_t r = 0; r < db; ++r)
                for (std::size_t c = 0; c < db; ++c) mix(r, c) += sgn * b(r, c);
        }
        const ComplexMatrix steered = psi * mix.transpose() * psid;
        next.alice[i].matrix = matrix_sign(steered);
    }

    // State: top eigenvector of the Bell operator for the new observables.
    const Eigensystem es = eig_hermitian(bell_operator(next).matrix);
    const std::size_t joint = da * db;
    const std::size_t top = joint - 1;
    next.state.amplitudes.resize(joint);
    for (std::size_t r = 0; r < joint; ++r) next.state.amplitudes[r] = es.vectors(r, top);
    return next;
}

SeesawTrace seesaw_run(const SeesawConfig& config) {
    if (config.n < 2) throw std::invalid_argument("seesaw_run: n must be at least 2");
    if (config.restarts < 1) throw std::invalid_argument("seesaw_run: need at least one restart");
    std::size_t dim = config.dim;
    if (dim == 0) dim = std::size_t{1} << ((config.n + 1) / 2);
    if ((dim & (dim - 1)) != 0) throw std::invalid_argument("seesaw_run: dim must be a power of two");

    SeesawTrace best;
    best.restarts = config.restarts;
    double best_value = -std::numeric_limits<double>::infinity();

    for (int restart = 0; restart < config.restarts; ++restart) {
        Xoshiro256pp rng(config.seed, static_cast<std::uint64_t>(restart));
        MeasurementSetup current =
            random_setup(config.n, dim, dim, rng, StateKind::Canonical);

        std::vector<double> trace;
        bool converged = false;
        double value = bell_value(current);
        for (int iter = 0; iter < config.max_iterations; ++iter) {
            current = seesaw_step(current);
            const double next_value = bell_value(current);
            trace.push_back(next_value);
            if (std::abs(next_value - value) < config.tolerance) {
                value = next_value;
                converged = true;
                break;
            }
            value = next_value;
        }

        if (value > best_value) {
            best_value = value;
            best.objectives = std::move(trace);
            best.setup = std::move(current);
            best.converged = converged;
        }
    }
    return best;
}

}  // namespace pom
