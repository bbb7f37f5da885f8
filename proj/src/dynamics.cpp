#include "qdyn/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "qdyn/complementarity.hpp"

namespace qdyn {

TimeGrid::TimeGrid(double start, double end, int n) : t_start(start), t_end(end), samples(n) {
    if (!(end > start)) throw std::invalid_argument("time grid must have t_end > t_start");
    if (n < 2) throw std::invalid_argument("time grid needs at least 2 samples");
}

ComplexMatrix hamiltonian_2q(const CouplingParams& c) {
    ComplexMatrix h = kron(pauli_x(), pauli_x()) * Complex{c.c1, 0.0};
    h += kron(pauli_y(), pauli_y()) * Complex{c.c2, 0.0};
    h += kron(pauli_z(), pauli_z()) * Complex{c.c3, 0.0};
    return h;
}

ComplexMatrix hamiltonian_3q(const CouplingParams& c) {
    const ComplexMatrix sigmas[3] = {pauli_x(), pauli_y(), pauli_z()};
    const double weights[3] = {c.c1, c.c2, c.c3};
    const ComplexMatrix id = identity2();
    ComplexMatrix h(8);
    for (int k = 0; k < 3; ++k) {
        if (weights[k] == 0.0) continue;
        const Complex w{weights[k], 0.0};
        h += kron(kron(sigmas[k], sigmas[k]), id) * w;  // pair (1,2)
        h += kron(kron(sigmas[k], id), sigmas[k]) * w;  // pair (1,3)
        h += kron(kron(id, sigmas[k]), sigmas[k]) * w;  // pair (2,3)
    }
    return h;
}

PureState evolve(const ComplexMatrix& h, const PureState& psi0, double t) {
    if (h.dim() != psi0.dim()) throw DimensionMismatch("Hamiltonian does not match state size");
    const ComplexMatrix u = exp_hermitian(h, t);
    return PureState(psi0.qubits(), u.apply(psi0.amplitudes()));
}

PureState ising_closed_form(Complex alpha, Complex beta, double c, double t) {
    const double norm_sq = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm_sq - 1.0) > 1e-9)
        throw NotNormalized("|alpha|^2 + |beta|^2 deviates beyond 1e-9");
    const double cos_ct = std::cos(c * t);
    const double sin_ct = std::sin(c * t);
    const Complex minus_i{0.0, -1.0};
    return PureState(2, {alpha * cos_ct, minus_i * beta * sin_ct, beta * cos_ct,
                         minus_i * alpha * sin_ct});
}

std::vector<TimeSeriesRecord> trajectory(const ComplexMatrix& h, const PureState& psi0,
                                         const TimeGrid& grid) {
    if (h.dim() != psi0.dim()) throw DimensionMismatch("Hamiltonian does not match state size");
    const SpectralDecomposition eig = hermitian_eig(h);
    const int d = h.dim();

    // gamma_k = <phi_k|psi0>; each sample is then a phase-weighted resum.
    std::vector<Complex> gamma(d, Complex{0.0, 0.0});
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            gamma[k] += std::conj(eig.eigenvectors(i, k)) * psi0.amplitude(i);

    std::vector<TimeSeriesRecord> records;
    records.reserve(grid.samples);
    for (int s = 0; s < grid.samples; ++s) {
        const double t = grid.at(s);
        std::vector<Complex> amps(d, Complex{0.0, 0.0});
        for (int k = 0; k < d; ++k) {
            const Complex phase = gamma[k] * std::exp(Complex{0.0, -eig.eigenvalues[k] * t});
            for (int i = 0; i < d; ++i) amps[i] += phase * eig.eigenvectors(i, k);
        }
        const PureState psi(psi0.qubits(), std::move(amps));

        TimeSeriesRecord rec;
        rec.t = t;
        rec.info = total_local_info(psi, LocalInfoMeasure::fidelity);
        rec.tangles = aggregate_tangles(psi);
        rec.residual = rec.info.total + rec.tangles.aggregate - psi.qubits();
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace qdyn
