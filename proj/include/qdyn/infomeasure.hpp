// Local information measures for single qubits and their per-state totals.

#pragma once

#include <vector>

#include "qdyn/qstate.hpp"

namespace qdyn {

enum class LocalInfoMeasure { fidelity, bz };

struct InfoReport {
    std::vector<double> per_qubit;  // each in [0, 1]
    double total = 0.0;             // sum of per_qubit
};

// Best achievable overlap with the reference state after an optimal local
// unitary: (1 + |r|)/2, which equals the largest eigenvalue of rho.
double optimal_fidelity(const DensityMatrix& rho);

// Fidelity-based local information (2 F_o - 1)^2 = |r|^2.
double local_info_fidelity(const DensityMatrix& rho);

// Operationally invariant information 2 Tr(rho^2) - 1.
double local_info_bz(const DensityMatrix& rho);

// Chosen measure evaluated on each single-qubit reduction, plus the total.
InfoReport total_local_info(const PureState& state, LocalInfoMeasure measure);

}  // namespace qdyn
