// complex_matrix.hpp — dense complex matrices, Kronecker products, partial
// transposition, and a cyclic Jacobi eigensolver for the small Hermitian
// problems (dim <= 6) this project needs.

#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace wignerlab {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::initializer_list<Complex> entries);  // row-major

    static ComplexMatrix zero(int dim);
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    Complex& operator()(int row, int col) { return a_[static_cast<std::size_t>(row) * dim_ + col]; }
    const Complex& operator()(int row, int col) const { return a_[static_cast<std::size_t>(row) * dim_ + col]; }

    bool all_finite() const;

private:
    int dim_ = 0;
    std::vector<Complex> a_;
};

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Standard matrix product; dimensions must match.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Conjugate transpose; an exact involution.
ComplexMatrix adjoint(const ComplexMatrix& a);

ComplexMatrix transpose(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

// Kronecker product with the first factor slowest (basis |00>,|01>,|10>,|11>).
// Result dimensions above 16 are rejected.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Transposes the second tensor factor of a 4x4 matrix:
// out[2m+mu][2n+nu] = a[2m+nu][2n+mu]. Involutive, trace- and norm-preserving.
ComplexMatrix partial_transpose_second(const ComplexMatrix& a);

// tr(adjoint(a) * b)
Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);
double offdiag_norm(const ComplexMatrix& a);

// ||a - adjoint(a)||_F <= 1e-10 * ||a||_F
bool is_hermitian(const ComplexMatrix& a);

struct EigenResult {
    std::vector<double> eigenvalues;  // sorted ascending
    double offdiag_residual = 0.0;    // final off-diagonal Frobenius norm
};

// Cyclic Jacobi rotations on a Hermitian matrix until the off-diagonal
// Frobenius norm drops below 1e-13 * ||a||_F, capped at 100 sweeps.
// Rejects non-Hermitian input; throws (carrying the residual) if the cap
// is hit before convergence.
EigenResult hermitian_eigenvalues(const ComplexMatrix& a);

// True iff the smallest eigenvalue is >= -tol.
bool is_psd(const ComplexMatrix& a, double tol);

}  // namespace wignerlab
