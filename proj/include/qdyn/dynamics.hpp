// Canonical coupling Hamiltonians and time evolution. Evolution is always by
// spectral decomposition, so there is no integrator step-size error anywhere;
// the closed-form Ising evolution doubles as an oracle for it.

#pragma once

#include <vector>

#include "qdyn/infomeasure.hpp"
#include "qdyn/mathcore.hpp"
#include "qdyn/qstate.hpp"
#include "qdyn/tangle.hpp"

namespace qdyn {

struct CouplingParams {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    static CouplingParams ising(double c) { return {c, 0.0, 0.0}; }
    static CouplingParams xy(double c) { return {c, c, 0.0}; }
};

struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;
    int samples = 0;

    // Throws std::invalid_argument unless t_end > t_start and samples >= 2.
    TimeGrid(double start, double end, int n);

    double at(int i) const { return t_start + step() * i; }
    double step() const { return (t_end - t_start) / (samples - 1); }
};

struct TimeSeriesRecord {
    double t = 0.0;
    InfoReport info;
    TangleReport tangles;
    double residual = 0.0;  // info.total + tangles.aggregate - n
};

// H = c1 sx(x)sx + c2 sy(x)sy + c3 sz(x)sz on two qubits.
ComplexMatrix hamiltonian_2q(const CouplingParams& c);

// Same couplings summed over the three unordered pairs of a three-qubit
// system, identity on the uninvolved qubit.
ComplexMatrix hamiltonian_3q(const CouplingParams& c);

// exp(-i t h) applied to psi0.
PureState evolve(const ComplexMatrix& h, const PureState& psi0, double t);

// Two-qubit Ising evolution of (alpha|0> + beta|1>) (x) |0> at coupling c:
// amplitudes (alpha cos ct, -i beta sin ct, beta cos ct, -i alpha sin ct).
PureState ising_closed_form(Complex alpha, Complex beta, double c, double t);

// One record per grid sample; the Hamiltonian is decomposed once.
std::vector<TimeSeriesRecord> trajectory(const ComplexMatrix& h, const PureState& psi0,
                                         const TimeGrid& grid);

}  // namespace qdyn
