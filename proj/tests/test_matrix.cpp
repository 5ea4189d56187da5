#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "pom/matrix.hpp"
#include "pom/rng.hpp"

using namespace pom;

namespace {

const Complex I(0.0, 1.0);

ComplexMatrix seeded_hermitian(std::size_t dim, std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    ComplexMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        m(r, r) = rng.gaussian();
        for (std::size_t c = r + 1; c < dim; ++c) {
            const Complex v(rng.gaussian(), rng.gaussian());
            m(r, c) = v;
            m(c, r) = std::conj(v);
        }
    }
    return m;
}

ComplexMatrix seeded_dense(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Complex(rng.gaussian(), rng.gaussian());
    return m;
}

}  // namespace

TEST_CASE("kron of Paulis") {
    // sigma_x (x) sigma_z has the +/-1 checkerboard on the anti-diagonal blocks
    const ComplexMatrix xz = kron(pauli_x(), pauli_z());
    const ComplexMatrix expected = ComplexMatrix::from_rows({
        {0.0, 0.0, 1.0, 0.0},
        {0.0, 0.0, 0.0, -1.0},
        {1.0, 0.0, 0.0, 0.0},
        {0.0, -1.0, 0.0, 0.0},
    });
    CHECK(approx_equal(xz, expected, 0.0));

    const ComplexMatrix xy = kron(pauli_x(), pauli_y());
    const ComplexMatrix expected_xy = ComplexMatrix::from_rows({
        {0.0, 0.0, 0.0, -I},
        {0.0, 0.0, I, 0.0},
        {0.0, -I, 0.0, 0.0},
        {I, 0.0, 0.0, 0.0},
    });
    CHECK(approx_equal(xy, expected_xy, 0.0));
}

TEST_CASE("kron respects identity and shape") {
    const ComplexMatrix a = seeded_dense(2, 3, 11);
    const ComplexMatrix eye = ComplexMatrix::identity(4);
    const ComplexMatrix k = kron(eye, a);
    CHECK(k.rows() == 8);
    CHECK(k.cols() == 12);
    for (std::size_t block = 0; block < 4; ++block)
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                CHECK(std::abs(k(block * 2 + r, block * 3 + c) - a(r, c)) == 0.0);
}

TEST_CASE("kron is associative") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const ComplexMatrix a = seeded_dense(2, 2, seed);
        const ComplexMatrix b = seeded_dense(2, 2, seed + 100);
        const ComplexMatrix c = seeded_dense(2, 2, seed + 200);
        CHECK(approx_equal(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-14));
    }
}

TEST_CASE("partial trace of the maximally entangled pair") {
    // |Phi+><Phi+| traced over either side is I/2
    std::vector<Complex> phi = {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    const ComplexMatrix rho = outer(phi);
    const ComplexMatrix half_eye = Complex(0.5) * ComplexMatrix::identity(2);
    CHECK(approx_equal(partial_trace(rho, 2, 2, Side::A), half_eye, 1e-15));
    CHECK(approx_equal(partial_trace(rho, 2, 2, Side::B), half_eye, 1e-15));
}

TEST_CASE("partial trace steers through the transpose") {
    // Tr_A[(P (x) I)|Phi+><Phi+|] = P^T / 2 with P = (I + sigma_y)/2
    std::vector<Complex> phi = {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    const ComplexMatrix rho = outer(phi);
    ComplexMatrix proj = Complex(0.5) * (ComplexMatrix::identity(2) + pauli_y());
    const ComplexMatrix steered = partial_trace(kron(proj, ComplexMatrix::identity(2)) * rho, 2, 2, Side::A);
    const ComplexMatrix expected = ComplexMatrix::from_rows({
        {0.25, 0.25 * I},
        {-0.25 * I, 0.25},
    });
    CHECK(approx_equal(steered, expected, 1e-15));
}

TEST_CASE("partial trace of a product leaves the factor") {
    const ComplexMatrix a = seeded_hermitian(3, 21);
    const ComplexMatrix b = seeded_hermitian(4, 22);
    const ComplexMatrix joint = kron(a, b);
    const Complex tb = b.trace();
    const Complex ta = a.trace();
    ComplexMatrix expect_a = a;
    expect_a *= tb;
    ComplexMatrix expect_b = b;
    expect_b *= ta;
    CHECK(approx_equal(partial_trace(joint, 3, 4, Side::B), expect_a, 1e-12));
    CHECK(approx_equal(partial_trace(joint, 3, 4, Side::A), expect_b, 1e-12));
}

TEST_CASE("partial trace preserves the full trace") {
    for (std::uint64_t seed = 31; seed <= 35; ++seed) {
        const ComplexMatrix m = seeded_dense(12, 12, seed);  // 3 x 4 joint system
        const Complex t = m.trace();
        CHECK(std::abs(partial_trace(m, 3, 4, Side::A).trace() - t) < 1e-13);
        CHECK(std::abs(partial_trace(m, 3, 4, Side::B).trace() - t) < 1e-13);
    }
}

TEST_CASE("partial trace rejects mismatched dimensions") {
    const ComplexMatrix m(6, 6);
    CHECK_THROWS_AS(partial_trace(m, 2, 4, Side::A), std::invalid_argument);
}

TEST_CASE("eigendecomposition of small exact cases") {
    const Eigensystem sx = eig_hermitian(pauli_x());
    REQUIRE(sx.values.size() == 2);
    CHECK(sx.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sx.values[1] == doctest::Approx(1.0).epsilon(1e-14));

    const Eigensystem id4 = eig_hermitian(ComplexMatrix::identity(4));
    for (double v : id4.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));

    const ComplexMatrix diag = ComplexMatrix::from_rows({{3.0, 0.0}, {0.0, -2.0}});
    const Eigensystem d = eig_hermitian(diag);
    CHECK(d.values[0] == doctest::Approx(-2.0));
    CHECK(d.values[1] == doctest::Approx(3.0));
}

TEST_CASE("eigendecomposition reconstructs random Hermitian matrices") {
    for (std::size_t dim : {2, 3, 5, 8, 16, 33, 64, 128, 256}) {
        const ComplexMatrix m = seeded_hermitian(dim, 1000 + dim);
        const Eigensystem es = eig_hermitian(m);

        // ascending order
        for (std::size_t i = 1; i < dim; ++i) CHECK(es.values[i - 1] <= es.values[i]);

        // columns orthonormal
        const ComplexMatrix gram = es.vectors.adjoint() * es.vectors;
        CHECK(approx_equal(gram, ComplexMatrix::identity(dim), 1e-12));

        // V diag(values) V^dag == m within 1e-10 * ||m||
        ComplexMatrix scaled = es.vectors;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t i = 0; i < dim; ++i) scaled(i, j) *= es.values[j];
        const ComplexMatrix rebuilt = scaled * es.vectors.adjoint();
        CHECK((rebuilt - m).frobenius_norm() <= 1e-10 * m.frobenius_norm());
    }
}

TEST_CASE("eigendecomposition rejects non-Hermitian input") {
    ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 2.0}, {0.5, 1.0}});
    CHECK_THROWS_AS(eig_hermitian(m), std::invalid_argument);
    ComplexMatrix rect(2, 3);
    CHECK_THROWS_AS(eig_hermitian(rect), std::invalid_argument);
}

TEST_CASE("matrix sign on fixed matrices") {
    const ComplexMatrix diag = ComplexMatrix::from_rows({{3.0, 0.0}, {0.0, -2.0}});
    CHECK(approx_equal(matrix_sign(diag), pauli_z(), 1e-14));
    CHECK(approx_equal(matrix_sign(pauli_x()), pauli_x(), 1e-14));
    // sign(0) := +1, so the zero matrix maps to the identity
    CHECK(approx_equal(matrix_sign(ComplexMatrix(2, 2)), ComplexMatrix::identity(2), 1e-14));
}

TEST_CASE("matrix sign squares to the identity") {
    for (std::size_t dim : {2, 4, 8, 16}) {
        const ComplexMatrix m = seeded_hermitian(dim, 2000 + dim);
        const ComplexMatrix s = matrix_sign(m);
        CHECK(s.is_hermitian(1e-12));
        CHECK(approx_equal(s * s, ComplexMatrix::identity(dim), 1e-10));
    }
}

TEST_CASE("trace norm sums absolute eigenvalues") {
    CHECK(trace_norm(pauli_z()) == doctest::Approx(2.0).epsilon(1e-14));
    const ComplexMatrix diag = ComplexMatrix::from_rows({{0.5, 0.0}, {0.0, -0.25}});
    CHECK(trace_norm(diag) == doctest::Approx(0.75).epsilon(1e-14));
    // rank-one projector
    std::vector<Complex> v = {std::sqrt(0.3), std::sqrt(0.7)};
    CHECK(trace_norm(outer(v)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("expectation and outer agree") {
    Xoshiro256pp rng(77);
    std::vector<Complex> psi(6);
    double norm = 0.0;
    for (auto& a : psi) {
        a = Complex(rng.gaussian(), rng.gaussian());
        norm += std::norm(a);
    }
    for (auto& a : psi) a /= std::sqrt(norm);
    const ComplexMatrix m = seeded_hermitian(6, 303);
    const Complex via_state = expectation(m, psi);
    const Complex via_rho = (m * outer(psi)).trace();
    CHECK(std::abs(via_state - via_rho) < 1e-13);
    CHECK(std::abs(via_state.imag()) < 1e-14);
}

TEST_CASE("approx_equal uses the explicit tolerance") {
    ComplexMatrix a = ComplexMatrix::identity(2);
    ComplexMatrix b = ComplexMatrix::identity(2);
    b(0, 0) += 1e-9;
    CHECK(approx_equal(a, b, 1e-8));
    CHECK(!approx_equal(a, b, 1e-10));
    CHECK(!approx_equal(a, ComplexMatrix(2, 3), 1.0));
}
