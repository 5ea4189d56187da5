#include "pom/construct.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pom {

namespace {

std::size_t half_dim(int n) { return std::size_t{1} << (n / 2); }

// State vector as a dim_a x dim_b matrix; Psi(k, l) = amplitude of |k>|l>.
ComplexMatrix reshape(const PureState& state) {
    ComplexMatrix psi(state.dim_a, state.dim_b);
    for (std::size_t k = 0; k < state.dim_a; ++k)
        for (std::size_t l = 0; l < state.dim_b; ++l)
            psi(k, l) = state.amplitudes[k * state.dim_b + l];
    return psi;
}

}  // namespace

double PureState::norm() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

bool is_valid_observable(const Observable& o, double tol) {
    const ComplexMatrix& m = o.matrix;
    if (m.rows() != m.cols() || m.rows() == 0) return false;
    if (!m.is_hermitian(tol)) return false;
    ComplexMatrix sq = m * m;
    for (std::size_t i = 0; i < sq.rows(); ++i) sq(i, i) -= 1.0;
    return sq.max_abs() <= tol;
}

void validate_setup(const MeasurementSetup& setup, double tol) {
    if (setup.n < 2) throw std::invalid_argument("setup: n must be at least 2");
    const std::size_t pairs = std::size_t{1} << (setup.n - 1);
    if (setup.alice.size() != pairs)
        throw std::invalid_argument("setup: expected 2^{n-1} observables for Alice");
    if (setup.bob.size() != static_cast<std::size_t>(setup.n))
        throw std::invalid_argument("setup: expected n observables for Bob");
    if (setup.state.amplitudes.size() != setup.state.dim_a * setup.state.dim_b)
        throw std::invalid_argument("setup: state length does not match dim_a * dim_b");
    if (std::abs(setup.state.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("setup: state is not normalized");
    for (std::size_t i = 0; i < setup.alice.size(); ++i) {
        if (setup.alice[i].matrix.rows() != setup.state.dim_a)
            throw std::invalid_argument("setup: Alice observable dimension mismatch");
        if (!is_valid_observable(setup.alice[i], tol))
            throw std::invalid_argument("setup: Alice observable " + std::to_string(i + 1) +
                                        " is not a Hermitian involution");
    }
    for (std::size_t y = 0; y < setup.bob.size(); ++y) {
        if (setup.bob[y].matrix.rows() != setup.state.dim_b)
            throw std::invalid_argument("setup: Bob observable dimension mismatch");
        if (!is_valid_observable(setup.bob[y], tol))
            throw std::invalid_argument("setup: Bob observable " + std::to_string(y + 1) +
                                        " is not a Hermitian involution");
    }
}

std::vector<Observable> bob_basis(int n) {
    if (n < 2 || n > 12) throw std::invalid_argument("bob_basis: n must be in 2..12");
    if (n == 2) return {Observable{pauli_x()}, Observable{pauli_y()}};
    if (n == 3) return {Observable{pauli_x()}, Observable{pauli_y()}, Observable{pauli_z()}};

    std::vector<Observable> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n % 2 == 0) {
        const std::vector<Observable> prev = bob_basis(n - 1);
        const ComplexMatrix eye = ComplexMatrix::identity(half_dim(n - 1));
        for (const Observable& b : prev) out.push_back(Observable{kron(pauli_x(), b.matrix)});
        out.push_back(Observable{kron(pauli_y(), eye)});
    } else {
        const std::vector<Observable> prev = bob_basis(n - 2);
        const ComplexMatrix eye = ComplexMatrix::identity(half_dim(n - 2));
        for (const Observable& b : prev) out.push_back(Observable{kron(pauli_x(), b.matrix)});
        out.push_back(Observable{kron(pauli_y(), eye)});
        out.push_back(Observable{kron(pauli_z(), eye)});
    }
    return out;
}

std::vector<Observable> alice_observables(int n) {
    const std::vector<Observable> basis = bob_basis(n);
    const SignMatrix signs = sign_matrix(n);
    const std::size_t dim = basis.front().matrix.rows();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Observable> out;
    out.reserve(signs.s.size());
    for (const std::vector<int>& row : signs.s) {
        ComplexMatrix acc(dim, dim);
        for (int y = 0; y < n; ++y) {
            const double coeff = scale * row[static_cast<std::size_t>(y)];
            const ComplexMatrix& b = basis[static_cast<std::size_t>(y)].matrix;
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = 0; c < dim; ++c) acc(r, c) += coeff * b(r, c);
        }
        out.push_back(Observable{std::move(acc)});
    }
    return out;
}

PureState canonical_state(int n) {
    if (n < 2 || n > 12) throw std::invalid_argument("canonical_state: n must be in 2..12");
    const std::size_t d = half_dim(n);
    PureState state;
    state.dim_a = d;
    state.dim_b = d;
    state.amplitudes.assign(d * d, Complex(0.0));
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k) state.amplitudes[k * d + k] = amp;
    return state;
}

std::vector<Observable> bob_measurements(int n) {
    std::vector<Observable> out = bob_basis(n);
    for (Observable& o : out) o.matrix = o.matrix.transpose();
    return out;
}

MeasurementSetup canonical_setup(int n) {
    MeasurementSetup setup;
    setup.n = n;
    setup.state = canonical_state(n);
    setup.alice = alice_observables(n);
    setup.bob = bob_measurements(n);
    return setup;
}

EncodingEnsemble encode_ensemble(const MeasurementSetup& setup) {
    const int n = setup.n;
    if (n < 2) throw std::invalid_argument("encode_ensemble: n must be at least 2");
    const InputOrdering ordering = input_ordering(n);
    const std::size_t pairs = ordering.entries.size() / 2;
    if (setup.alice.size() != pairs)
        throw std::invalid_argument("encode_ensemble: Alice observable count mismatch");

    const ComplexMatrix psi = reshape(setup.state);
    const ComplexMatrix psid = psi.adjoint();
    const std::size_t da = setup.state.dim_a;

    EncodingEnsemble ensemble;
    ensemble.n = n;
    ensemble.parities = parity_set(n);
    ensemble.states.assign(ordering.entries.size(), ComplexMatrix());

    for (std::size_t i = 0; i < pairs; ++i) {
        const ComplexMatrix& a = setup.alice[i].matrix;
        ComplexMatrix proj_plus(da, da), proj_minus(da, da);
        for (std::size_t r = 0; r < da; ++r)
            for (std::size_t c = 0; c < da; ++c) {
                proj_plus(r, c) = 0.5 * a(r, c);
                proj_minus(r, c) = -0.5 * a(r, c);
            }
        for (std::size_t r = 0; r < da; ++r) {
            proj_plus(r, r) += 0.5;
            proj_minus(r, r) += 0.5;
        }

        // Tr_A[(P tensor I)|psi><psi|] = (Psi^dag P Psi)^T, scaled by 2.
        const ComplexMatrix steered_plus = (psid * proj_plus * psi).transpose();
        const ComplexMatrix steered_minus = (psid * proj_minus * psi).transpose();

        const std::uint32_t x_plus = ordering.entries[i].bits;
        const std::uint32_t x_minus = ordering.entries[ordering.entries.size() - 1 - i].bits;
        ensemble.states[x_plus] = 2.0 * steered_plus;
        ensemble.states[x_minus] = 2.0 * steered_minus;

        const double p_plus = steered_plus.trace().real();
        const double p_minus = steered_minus.trace().real();
        ensemble.steering_deviation = std::max(
            {ensemble.steering_deviation, std::abs(p_plus - 0.5), std::abs(p_minus - 0.5)});
    }
    return ensemble;
}

ParityCheck verify_parity_obliviousness(const EncodingEnsemble& ensemble) {
    const int n = ensemble.n;
    ParityCheck check;
    check.parities = ensemble.parities;
    const std::size_t dim = ensemble.states.front().rows();
    for (const BitString& s : check.parities) {
        ComplexMatrix diff(dim, dim);
        for (std::uint32_t v = 0; v < ensemble.states.size(); ++v) {
            const BitString x{n, v};
            if (parity_bit(s, x) == 0)
                diff += ensemble.states[v];
            else
                diff -= ensemble.states[v];
        }
        const double dev = diff.frobenius_norm();
        check.deviations.push_back(dev);
        check.max_deviation = std::max(check.max_deviation, dev);
    }
    return check;
}

ComplexMatrix random_hermitian(std::size_t dim, Xoshiro256pp& rng) {
    // Unitarily invariant (GUE) normalization: diagonal variance 1, off-diag
    // 1/2 per component, so matrix_sign of this is Haar-covariant.  A basis-
    // biased ensemble measurably enlarges the see-saw's trap basins.
    const double off = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        m(r, r) = rng.gaussian();
        for (std::size_t c = r + 1; c < dim; ++c) {
            const Complex v(rng.gaussian() * off, rng.gaussian() * off);
            m(r, c) = v;
            m(c, r) = std::conj(v);
        }
    }
    return m;
}

ComplexMatrix random_involution(std::size_t dim, Xoshiro256pp& rng) {
    return matrix_sign(random_hermitian(dim, rng));
}

MeasurementSetup random_setup(int n, std::size_t dim_a, std::size_t dim_b, Xoshiro256pp& rng,
                              StateKind state_kind) {
    if (n < 2) throw std::invalid_argument("random_setup: n must be at least 2");
    MeasurementSetup setup;
    setup.n = n;
    const std::size_t pairs = std::size_t{1} << (n - 1);
    setup.alice.reserve(pairs);
    for (std::size_t i = 0; i < pairs; ++i)
        setup.alice.push_back(Observable{random_involution(dim_a, rng)});
    setup.bob.reserve(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y) setup.bob.push_back(Observable{random_involution(dim_b, rng)});

    setup.state.dim_a = dim_a;
    setup.state.dim_b = dim_b;
    if (state_kind == StateKind::Canonical) {
        if (dim_a != dim_b)
            throw std::invalid_argument("random_setup: canonical state needs dim_a == dim_b");
        setup.state.amplitudes.assign(dim_a * dim_b, Complex(0.0));
        const double amp = 1.0 / std::sqrt(static_cast<double>(dim_a));
        for (std::size_t k = 0; k < dim_a; ++k) setup.state.amplitudes[k * dim_b + k] = amp;
    } else {
        setup.state.amplitudes.resize(dim_a * dim_b);
        for (Complex& a : setup.state.amplitudes) a = Complex(rng.gaussian(), rng.gaussian());
        const double norm = setup.state.norm();
        for (Complex& a : setup.state.amplitudes) a /= norm;
    }
    return setup;
}

}  // namespace pom
