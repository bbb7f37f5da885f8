#include "qdyn/mathcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qdyn {

namespace {

constexpr double kHermTol = 1e-10;       // entrywise hermiticity acceptance
constexpr double kOffDiagTol = 1e-13;    // relative off-diagonal convergence target
constexpr int kMaxSweeps = 100;

double offdiag_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    data_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(i, j));
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& z : data_) sum += std::norm(z);
    return std::sqrt(sum);
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& z : data_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    const int n = a.dim_;
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector length mismatch");
    std::vector<Complex> out(v.size(), Complex{0.0, 0.0});
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2);
    m(0, 1) = Complex{0.0, -1.0};
    m(1, 0) = Complex{0.0, 1.0};
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix identity2() { return ComplexMatrix::identity(2); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim(), nb = b.dim();
    ComplexMatrix c(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return c;
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m) {
    if (!m.all_finite()) throw NotHermitian("matrix has non-finite entries");
    if (m.hermiticity_defect() > kHermTol)
        throw NotHermitian("matrix is not Hermitian within tolerance");

    const int n = m.dim();
    // Absorb assembly noise before iterating.
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = kOffDiagTol * std::max(1.0, m.frobenius_norm());

    bool converged = (n == 1) || offdiag_norm(a) <= target;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex z = a(p, q);
                const double absz = std::abs(z);
                if (absz == 0.0) continue;

                // Unitary plane rotation J with J(p,p)=c, J(p,q)=s,
                // J(q,p)=-s*phase_conj, J(q,q)=c*phase_conj zeroing a(p,q),
                // where phase = z/|z| and (c, s) is the real Jacobi pair for
                // [[a_pp, |z|], [|z|, a_qq]].
                const Complex phase = z / absz;
                const Complex phase_conj = std::conj(phase);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * absz);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Column update on A and V, then row update on A.
                for (int i = 0; i < n; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * phase_conj * aiq;
                    a(i, q) = s * aip + c * phase_conj * aiq;
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * phase_conj * viq;
                    v(i, q) = s * vip + c * phase_conj * viq;
                }
                for (int j = 0; j < n; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * phase * aqj;
                    a(q, j) = s * apj + c * phase * aqj;
                }
                a(p, q) = Complex{0.0, 0.0};
                a(q, p) = Complex{0.0, 0.0};
            }
        }
        converged = offdiag_norm(a) <= target;
    }
    if (!converged) throw NoConvergence("Jacobi sweep budget exhausted");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    SpectralDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix exp_hermitian(const ComplexMatrix& m, double t) {
    const SpectralDecomposition eig = hermitian_eig(m);
    const int n = m.dim();
    ComplexMatrix out(n);
    for (int k = 0; k < n; ++k) {
        const Complex phase = std::exp(Complex{0.0, -eig.eigenvalues[k] * t});
        for (int i = 0; i < n; ++i) {
            const Complex vik = eig.eigenvectors(i, k) * phase;
            for (int j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.eigenvectors(j, k));
        }
    }
    return out;
}

}  // namespace qdyn
