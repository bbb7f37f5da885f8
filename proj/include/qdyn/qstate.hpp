// Pure states, density matrices, partial traces, Bloch vectors, and random
// state generation for up to four qubits.
//
// Basis convention: qubit 1 is the most significant bit of the basis index,
// so for two qubits |ij> sits at index i*2 + j. All qubit indices in the API
// are 1-based.

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qdyn/mathcore.hpp"

namespace qdyn {

class PureState {
public:
    // Accepts amplitude vectors whose squared norm deviates from 1 by at most
    // 1e-6 (text-format rounding); those are renormalized. Larger deviations
    // throw NotNormalized.
    PureState(int qubits, std::vector<Complex> amplitudes);

    int qubits() const { return qubits_; }
    int dim() const { return static_cast<int>(amps_.size()); }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    const Complex& amplitude(int basis_index) const { return amps_[basis_index]; }

private:
    int qubits_;
    std::vector<Complex> amps_;
};

class DensityMatrix {
public:
    // Validates the stored matrix: Hermitian to 1e-10, unit trace to 1e-10,
    // and eigenvalues >= -1e-10.
    DensityMatrix(int qubits, ComplexMatrix matrix);

    int qubits() const { return qubits_; }
    int dim() const { return mat_.dim(); }
    const ComplexMatrix& matrix() const { return mat_; }

    double purity() const;  // Tr(rho^2)

private:
    int qubits_;
    ComplexMatrix mat_;
};

struct BlochVector {
    double rx = 0.0;
    double ry = 0.0;
    double rz = 0.0;

    double norm() const;
};

// One distinguished qubit |Omega> = alpha|0> + beta|1> followed by
// ancilla_count qubits in |0>.
struct InitialProductSpec {
    Complex alpha;
    Complex beta;
    int ancilla_count = 0;
};

PureState product_state(const InitialProductSpec& spec);

DensityMatrix density_of(const PureState& state);

// Partial trace onto the kept qubits; the complement is traced out. Keep
// indices are 1-based and must be nonempty and within range.
DensityMatrix reduced_density(const PureState& state, const std::set<int>& keep);
DensityMatrix reduced_density(const DensityMatrix& rho, const std::set<int>& keep);

// r_k = Tr(rho sigma_k) for a single-qubit density matrix.
BlochVector bloch_vector(const DensityMatrix& rho);

// Normalized vector of 2^n independent standard complex normals, deterministic
// for a fixed seed. 1 <= n <= 4.
PureState haar_random_state(int qubits, std::uint64_t seed);

// State file format: {"qubits": n, "amplitudes": [[re, im], ...]} with exactly
// 2^n entries in basis order under the convention above.
PureState parse_state_json(const std::string& text);
std::string state_to_json(const PureState& state);
PureState load_state_file(const std::string& path);

}  // namespace qdyn
