// Dense complex matrices, Kronecker products, and a Hermitian eigensolver.
// Everything else in the library is built from these pieces. Dimensions stay
// tiny (<= 16), so storage is a flat row-major vector and the solver favors
// robustness over speed.

#pragma once

#include <complex>
#include <vector>

#include "qdyn/errors.hpp"

namespace qdyn {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Complex& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * dim_ + j];
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    double frobenius_norm() const;
    // Largest entrywise |a(i,j) - conj(a(j,i))|.
    double hermiticity_defect() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    std::vector<Complex> apply(const std::vector<Complex>& v) const;

private:
    int dim_;
    std::vector<Complex> data_;
};

// Pauli operators and the 2x2 identity.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix identity2();

// Tensor product: entry ((i*b.dim+k),(j*b.dim+l)) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns aligned with eigenvalues
};

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
// Inputs Hermitian to 1e-10 entrywise are symmetrized as (M + M^dag)/2 before
// solving; anything worse throws NotHermitian. Convergence target is an
// off-diagonal Frobenius norm <= 1e-13 * max(1, ||M||_F) within 100 sweeps,
// else NoConvergence. With degenerate eigenvalues no particular eigenvector
// basis is promised, only a valid orthonormal one.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m);

// Evolution operator exp(-i t M) for Hermitian M, via the spectral
// decomposition: V diag(e^{-i eps_k t}) V^dag.
ComplexMatrix exp_hermitian(const ComplexMatrix& m, double t);

}  // namespace qdyn
