#include "qdyn/tangle.hpp"

#include <algorithm>
#include <cmath>

namespace qdyn {

namespace {

constexpr double kMuFloor = -1e-8;       // eigenvalues of rho*flip below this are an error
constexpr double kTangleFloor = -1e-9;   // three-tangle clamp window
constexpr double kPurityLeak = 1e-6;     // lambda_3/4 above this means a non-pure input

// sqrt(rho) via the spectral decomposition; eigenvalues in [-1e-10, 0)
// are rounding and clamp to zero.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& rho) {
    const SpectralDecomposition eig = hermitian_eig(rho);
    const int n = rho.dim();
    ComplexMatrix out(n);
    for (int k = 0; k < n; ++k) {
        const double root = std::sqrt(std::max(0.0, eig.eigenvalues[k]));
        if (root == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            const Complex vik = eig.eigenvectors(i, k) * root;
            for (int j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.eigenvectors(j, k));
        }
    }
    return out;
}

}  // namespace

ComplexMatrix spin_flip(const DensityMatrix& rho) {
    if (rho.qubits() != 2) throw WrongDimension("spin flip is defined for two qubits");
    const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    return yy * rho.matrix().conjugate() * yy;
}

LambdaSpectrum concurrence_lambdas(const DensityMatrix& rho) {
    // Eigenvalues of the non-Hermitian rho * flip equal those of the Hermitian
    // sqrt(rho) * flip * sqrt(rho).
    const ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
    const ComplexMatrix herm = root * spin_flip(rho) * root;
    const SpectralDecomposition eig = hermitian_eig(herm);

    // Assembly noise perturbs exact zeros by ~eps * mu_max in either
    // direction; zero them relative to the top eigenvalue so their square
    // roots do not leak ~1e-8 into the spectrum.
    const double floor = 1e-14 * std::max(0.0, eig.eigenvalues.back());

    LambdaSpectrum spectrum;
    for (int k = 0; k < 4; ++k) {
        const double mu = eig.eigenvalues[k];
        if (mu < kMuFloor) throw NegativeEigenvalue("concurrence spectrum below -1e-8");
        spectrum.values[k] = mu < floor ? 0.0 : std::sqrt(mu);
    }
    std::sort(spectrum.values.begin(), spectrum.values.end(), std::greater<double>());
    return spectrum;
}

double two_tangle(const DensityMatrix& rho) {
    const LambdaSpectrum l = concurrence_lambdas(rho);
    const double c = l.values[0] - l.values[1] - l.values[2] - l.values[3];
    return c > 0.0 ? c * c : 0.0;
}

double three_tangle(const PureState& state) {
    if (state.qubits() != 3) throw WrongDimension("three-tangle is defined for three qubits");
    const DensityMatrix rho1 = reduced_density(state, {1});
    const Complex det = rho1.matrix()(0, 0) * rho1.matrix()(1, 1) -
                        rho1.matrix()(0, 1) * rho1.matrix()(1, 0);
    const double tau12 = two_tangle(reduced_density(state, {1, 2}));
    const double tau13 = two_tangle(reduced_density(state, {1, 3}));
    const double tau = 4.0 * det.real() - tau12 - tau13;
    if (tau < kTangleFloor || tau > 1.0 + std::abs(kTangleFloor))
        throw OutOfRange("three-tangle outside [0, 1]");
    return std::min(1.0, std::max(0.0, tau));
}

double lambda_product_tangle(const PureState& state, std::pair<int, int> pair) {
    if (state.qubits() != 3)
        throw WrongDimension("lambda-product tangle is defined for three qubits");
    const LambdaSpectrum l = concurrence_lambdas(reduced_density(state, {pair.first, pair.second}));
    if (l.values[2] > kPurityLeak || l.values[3] > kPurityLeak)
        throw RankViolation("pair spectrum has rank above 2; global state is not pure");
    return 4.0 * l.values[0] * l.values[1];
}

TangleReport aggregate_tangles(const PureState& state) {
    TangleReport report;
    const int n = state.qubits();
    if (n == 2) {
        const double tau = two_tangle(density_of(state));
        report.tau_pairs[{1, 2}] = tau;
        report.aggregate = 2.0 * tau;
        return report;
    }
    if (n == 3) {
        double pair_sum = 0.0;
        for (const auto& [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
            const double tau = two_tangle(reduced_density(state, {a, b}));
            report.tau_pairs[{a, b}] = tau;
            pair_sum += tau;
        }
        report.tau_123 = three_tangle(state);
        report.aggregate = 2.0 * pair_sum + 3.0 * (*report.tau_123);
        return report;
    }
    throw UnsupportedSize("tangle aggregation covers two and three qubits");
}

}  // namespace qdyn
