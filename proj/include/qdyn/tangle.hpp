// Entanglement measures: the spin-flip construction, concurrence lambda
// spectra, pair tangles, the three-tangle, and the weighted aggregate that
// plays the role of total nonlocal information.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>

#include "qdyn/qstate.hpp"

namespace qdyn {

struct LambdaSpectrum {
    std::array<double, 4> values{};  // nonnegative, descending
};

struct TangleReport {
    std::map<std::pair<int, int>, double> tau_pairs;
    std::optional<double> tau_123;  // present for three qubits only
    double aggregate = 0.0;
};

// (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y) for a two-qubit rho.
// The result is Hermitian with unit trace but is returned as a raw matrix.
ComplexMatrix spin_flip(const DensityMatrix& rho);

// Square roots of the eigenvalues of rho * spin_flip(rho), descending. The
// non-Hermitian product is traded for the similar Hermitian problem
// sqrt(rho) * flip * sqrt(rho). Eigenvalues below -1e-8 signal an invalid
// input and throw NegativeEigenvalue; small negatives are rounding and clamp
// to zero.
LambdaSpectrum concurrence_lambdas(const DensityMatrix& rho);

// Square of the concurrence: max(0, l1 - l2 - l3 - l4)^2.
double two_tangle(const DensityMatrix& rho);

// Residual genuine three-qubit entanglement, anchored on qubit 1:
// 4 det(rho_1) - tau_12 - tau_13. Values within -1e-9 of [0, 1] are clamped;
// anything further out throws OutOfRange.
double three_tangle(const PureState& state);

// 4 * l1 * l2 for the lambda spectrum of the chosen pair's reduced matrix.
// For pure three-qubit inputs l3 and l4 vanish; if either exceeds 1e-6 the
// global state cannot have been pure and RankViolation is thrown.
double lambda_product_tangle(const PureState& state, std::pair<int, int> pair);

// All pair tangles, the three-tangle when applicable, and the aggregate
// E = 2 * sum(tau_ij) + 3 * tau_123 (two qubits: E = 2 * tau_12).
TangleReport aggregate_tangles(const PureState& state);

}  // namespace qdyn
