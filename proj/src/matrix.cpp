#include "pom/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pom {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
        std::size_t j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = std::conj(entries_[i]);
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Complex ComplexMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix must be square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& v : entries_) sum += std::norm(v);
    return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const auto& v : entries_) best = std::max(best, std::abs(v));
    return best;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix +=: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix -=: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& v : entries_) v *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }
ComplexMatrix operator-(ComplexMatrix m) { return m *= Complex(-1.0); }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) throw std::invalid_argument("matrix *: inner dimension mismatch");
    ComplexMatrix out(lhs.rows(), rhs.cols());
    const std::size_t n = lhs.rows(), k = lhs.cols(), m = rhs.cols();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t p = 0; p < k; ++p) {
            const Complex a = lhs(i, p);
            if (a == Complex(0.0)) continue;
            const Complex* rrow = rhs.data() + p * m;
            Complex* orow = out.data() + i * m;
            for (std::size_t j = 0; j < m; ++j) orow[j] += a * rrow[j];
        }
    }
    return out;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (std::abs(a(r, c) - b(r, c)) > tol) return false;
    return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const Complex v = a(ra, ca);
            if (v == Complex(0.0)) continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (std::size_t cb = 0; cb < b.cols(); ++cb)
                    out(ra * b.rows() + rb, ca * b.cols() + cb) = v * b(rb, cb);
        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b, Side traced) {
    const std::size_t joint = dim_a * dim_b;
    if (m.rows() != joint || m.cols() != joint)
        throw std::invalid_argument("partial_trace: matrix dimension does not match dim_a * dim_b");
    if (traced == Side::A) {
        ComplexMatrix out(dim_b, dim_b);
        for (std::size_t l = 0; l < dim_b; ++l)
            for (std::size_t lp = 0; lp < dim_b; ++lp) {
                Complex sum = 0.0;
                for (std::size_t k = 0; k < dim_a; ++k) sum += m(k * dim_b + l, k * dim_b + lp);
                out(l, lp) = sum;
            }
        return out;
    }
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t k = 0; k < dim_a; ++k)
        for (std::size_t kp = 0; kp < dim_a; ++kp) {
            Complex sum = 0.0;
            for (std::size_t l = 0; l < dim_b; ++l) sum += m(k * dim_b + l, kp * dim_b + l);
            out(k, kp) = sum;
        }
    return out;
}

Eigensystem eig_hermitian(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eig_hermitian: matrix must be square");
    const std::size_t n = m.rows();
    const double scale = std::max(1.0, m.max_abs());
    if (!m.is_hermitian(1e-12 * scale))
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");

    // Work on the symmetrized copy so roundoff asymmetry cannot accumulate.
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = (m(r, r) + std::conj(m(r, r))) * 0.5;
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex v = (m(r, c) + std::conj(m(c, r))) * 0.5;
            a(r, c) = v;
            a(c, r) = std::conj(v);
        }
    }

    ComplexMatrix v = ComplexMatrix::identity(n);
    Eigensystem out;
    out.values.resize(n);

    const double norm = a.frobenius_norm();
    if (n > 1 && norm > 0.0) {
        const double threshold = 1e-13 * norm;
        // Rotations on entries below skip cannot keep the off-diagonal mass
        // above threshold, so they are safe to leave for a later sweep.
        const double skip = threshold / static_cast<double>(n);
        const int max_sweeps = 80;
        int sweep = 0;
        for (; sweep < max_sweeps; ++sweep) {
            double off2 = 0.0;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = r + 1; c < n; ++c) off2 += 2.0 * std::norm(a(r, c));
            if (std::sqrt(off2) < threshold) break;

            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const Complex apq = a(p, q);
                    const double r = std::abs(apq);
                    if (r <= skip) continue;

                    // Unitary J acting on the (p,q) plane diagonalizes the
                    // 2x2 block: J = diag(phase, 1) * Givens(theta), with
                    // tan(2*theta) chosen for the phase-stripped real block.
                    const Complex phase = apq / r;
                    const double app = a(p, p).real();
                    const double aqq = a(q, q).real();
                    const double tau = (aqq - app) / (2.0 * r);
                    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const Complex pc = phase * c;
                    const Complex ps = phase * s;

                    for (std::size_t k = 0; k < n; ++k) {  // A <- A J (columns p, q)
                        const Complex akp = a(k, p);
                        const Complex akq = a(k, q);
                        a(k, p) = pc * akp - s * akq;
                        a(k, q) = ps * akp + c * akq;
                    }
                    const Complex pcc = std::conj(pc);
                    const Complex psc = std::conj(ps);
                    for (std::size_t k = 0; k < n; ++k) {  // A <- J^dag A (rows p, q)
                        const Complex apk = a(p, k);
                        const Complex aqk = a(q, k);
                        a(p, k) = pcc * apk - s * aqk;
                        a(q, k) = psc * apk + c * aqk;
                    }
                    for (std::size_t k = 0; k < n; ++k) {  // V <- V J
                        const Complex vkp = v(k, p);
                        const Complex vkq = v(k, q);
                        v(k, p) = pc * vkp - s * vkq;
                        v(k, q) = ps * vkp + c * vkq;
                    }
                }
            }
        }
        if (sweep == max_sweeps) throw std::runtime_error("eig_hermitian: Jacobi sweep limit reached");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });

    out.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = diag[order[j]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

ComplexMatrix matrix_sign(const ComplexMatrix& m) {
    const Eigensystem es = eig_hermitian(m);
    const std::size_t n = m.rows();
    ComplexMatrix scaled = es.vectors;
    for (std::size_t j = 0; j < n; ++j) {
        const double s = es.values[j] >= 0.0 ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= s;
    }
    return scaled * es.vectors.adjoint();
}

double trace_norm(const ComplexMatrix& m) {
    const Eigensystem es = eig_hermitian(m);
    double sum = 0.0;
    for (double lambda : es.values) sum += std::abs(lambda);
    return sum;
}

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m =
        ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    return m;
}

ComplexMatrix outer(const std::vector<Complex>& psi) {
    const std::size_t n = psi.size();
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = psi[r] * std::conj(psi[c]);
    return out;
}

Complex expectation(const ComplexMatrix& m, const std::vector<Complex>& psi) {
    if (m.rows() != psi.size() || m.cols() != psi.size())
        throw std::invalid_argument("expectation: state dimension mismatch");
    Complex sum = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Complex row = 0.0;
        for (std::size_t c = 0; c < m.cols(); ++c) row += m(r, c) * psi[c];
        sum += std::conj(psi[r]) * row;
    }
    return sum;
}

}  // namespace pom
