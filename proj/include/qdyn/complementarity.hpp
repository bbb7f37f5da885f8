// The complementarity identities between local information and entanglement,
// exposed as residual computations that should vanish for isolated pure
// systems.

#pragma once

#include <optional>
#include <vector>

#include "qdyn/qstate.hpp"

namespace qdyn {

// Residual bound shared by the CLI and every test: roughly 100x the
// eigensolver reconstruction bound compounded across the pipeline.
inline constexpr double kResidualTolerance = 1e-9;

struct ComplementarityReport {
    int n = 0;
    double lhs = 0.0;       // I_1 + ... + I_n + weighted tangles
    double residual = 0.0;  // lhs - n
    std::vector<double> per_qubit_residuals;  // filled for n = 3
    std::optional<double> slack;              // mixed-state inequality only
};

// lhs - n for a pure state of two qubits (I1 + I2 + 2 tau12) or three qubits
// (sum I + 2 sum tau_ij + 3 tau_123). Other sizes throw UnsupportedSize: no
// higher-order tangles are defined here, so a truncated sum would be
// misleading rather than approximate.
ComplementarityReport residual_pure(const PureState& state);

// I_k + sum_{j != k} tau_kj (+ tau_123 for n = 3) - 1.
double per_qubit_residual(const PureState& state, int qubit);

// 2 - (I1 + I2 + 2 tau12) for a two-qubit density matrix; nonnegative, and
// zero exactly when the input is pure.
double mixed_slack_2q(const DensityMatrix& rho);

}  // namespace qdyn
