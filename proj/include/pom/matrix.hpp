#pragma once
// Dense complex matrices plus the small linear-algebra kit the rest of the
// code builds on: Kronecker products, partial traces, a cyclic-Jacobi
// eigensolver for Hermitian matrices, the matrix sign function, trace norm.
//
// Everything is plain row-major storage over std::complex<double>.  The
// dimensions in play stay modest (joint dimension <= 4096), so O(d^3) dense
// algorithms are the right tool.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pom {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Complex* data() noexcept { return entries_.data(); }
    const Complex* data() const noexcept { return entries_.data(); }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_hermitian(double tol) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scale);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);
ComplexMatrix operator-(ComplexMatrix m);

// max |a_ij - b_ij| <= tol; all comparisons use an explicit absolute tolerance.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Which tensor factor to trace out of a (dim_a*dim_b) square matrix.
// Factor order is Alice-then-Bob: joint index = a_index * dim_b + b_index.
enum class Side { A, B };
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b, Side traced);

struct Eigensystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns, orthonormal, aligned with values
};

// Cyclic Jacobi for Hermitian input (checked to 1e-12 elementwise, relative to
// the largest entry).  Converges when the off-diagonal Frobenius mass drops
// below 1e-13 * ||m||_F.
Eigensystem eig_hermitian(const ComplexMatrix& m);

// sign(m) = sum_k sign(lambda_k) v_k v_k^dag with sign(0) := +1, so the result
// is always an involution.
ComplexMatrix matrix_sign(const ComplexMatrix& m);

// Sum of |eigenvalue| over the spectrum of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

// |psi><psi| as a dense matrix.
ComplexMatrix outer(const std::vector<Complex>& psi);

// <psi| m |psi>
Complex expectation(const ComplexMatrix& m, const std::vector<Complex>& psi);

}  // namespace pom
