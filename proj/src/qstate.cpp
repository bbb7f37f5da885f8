#include "qdyn/qstate.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qdyn/rng.hpp"

namespace qdyn {

namespace {

constexpr double kNormSlack = 1e-9;      // accepted as exactly normalized
constexpr double kRenormLimit = 1e-6;    // renormalized silently up to here
constexpr double kMatrixTol = 1e-10;     // density-matrix invariant tolerance

// Basis index with the kept qubits' bits set from `sub` and the traced-out
// qubits' bits set from `env`, both filled MSB-first. Qubit q of an n-qubit
// register owns bit (n - q).
int full_index(const std::vector<int>& keep_bits, const std::vector<int>& env_bits, int sub,
               int env) {
    int idx = 0;
    for (std::size_t k = 0; k < keep_bits.size(); ++k) {
        const int bit = (sub >> (keep_bits.size() - 1 - k)) & 1;
        idx |= bit << keep_bits[k];
    }
    for (std::size_t k = 0; k < env_bits.size(); ++k) {
        const int bit = (env >> (env_bits.size() - 1 - k)) & 1;
        idx |= bit << env_bits[k];
    }
    return idx;
}

struct TraceLayout {
    std::vector<int> keep_bits;  // bit positions of kept qubits, MSB-first
    std::vector<int> env_bits;   // bit positions of traced-out qubits
};

TraceLayout trace_layout(int qubits, const std::set<int>& keep) {
    if (keep.empty()) throw BadIndex("keep set must be nonempty");
    for (int q : keep)
        if (q < 1 || q > qubits) throw BadIndex("qubit index out of range");
    TraceLayout layout;
    for (int q = 1; q <= qubits; ++q) {
        const int bit = qubits - q;
        if (keep.count(q))
            layout.keep_bits.push_back(bit);
        else
            layout.env_bits.push_back(bit);
    }
    return layout;
}

}  // namespace

PureState::PureState(int qubits, std::vector<Complex> amplitudes)
    : qubits_(qubits), amps_(std::move(amplitudes)) {
    if (qubits < 1) throw WrongDimension("qubit count must be >= 1");
    if (amps_.size() != (std::size_t{1} << qubits))
        throw WrongDimension("amplitude count does not match qubit count");
    double norm_sq = 0.0;
    for (const auto& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw NotNormalized("non-finite amplitude");
        norm_sq += std::norm(a);
    }
    const double dev = std::abs(norm_sq - 1.0);
    if (dev > kRenormLimit) throw NotNormalized("state norm deviates beyond 1e-6");
    if (dev > kNormSlack) {
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& a : amps_) a *= inv;
    }
}

DensityMatrix::DensityMatrix(int qubits, ComplexMatrix matrix)
    : qubits_(qubits), mat_(std::move(matrix)) {
    if (qubits < 1 || mat_.dim() != (1 << qubits))
        throw WrongDimension("matrix dimension does not match qubit count");
    if (mat_.hermiticity_defect() > kMatrixTol)
        throw NotHermitian("density matrix is not Hermitian");
    if (std::abs(mat_.trace() - Complex{1.0, 0.0}) > kMatrixTol)
        throw Error("density matrix trace differs from 1");
    const SpectralDecomposition eig = hermitian_eig(mat_);
    if (eig.eigenvalues.front() < -kMatrixTol)
        throw NegativeEigenvalue("density matrix has a negative eigenvalue");
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

double BlochVector::norm() const { return std::sqrt(rx * rx + ry * ry + rz * rz); }

PureState product_state(const InitialProductSpec& spec) {
    if (spec.ancilla_count < 0) throw WrongDimension("ancilla count must be >= 0");
    const double norm_sq = std::norm(spec.alpha) + std::norm(spec.beta);
    if (std::abs(norm_sq - 1.0) > 1e-6)
        throw NotNormalized("|alpha|^2 + |beta|^2 deviates beyond 1e-6");
    const double inv = 1.0 / std::sqrt(norm_sq);
    const int n = 1 + spec.ancilla_count;
    std::vector<Complex> amps(std::size_t{1} << n, Complex{0.0, 0.0});
    amps[0] = spec.alpha * inv;
    amps[std::size_t{1} << (n - 1)] = spec.beta * inv;
    return PureState(n, std::move(amps));
}

DensityMatrix density_of(const PureState& state) {
    const int d = state.dim();
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m(i, j) = state.amplitude(i) * std::conj(state.amplitude(j));
    return DensityMatrix(state.qubits(), std::move(m));
}

DensityMatrix reduced_density(const PureState& state, const std::set<int>& keep) {
    const TraceLayout layout = trace_layout(state.qubits(), keep);
    const int sub_dim = 1 << layout.keep_bits.size();
    const int env_dim = 1 << layout.env_bits.size();
    ComplexMatrix m(sub_dim);
    for (int r = 0; r < sub_dim; ++r)
        for (int c = 0; c < sub_dim; ++c) {
            Complex sum{0.0, 0.0};
            for (int e = 0; e < env_dim; ++e)
                sum += state.amplitude(full_index(layout.keep_bits, layout.env_bits, r, e)) *
                       std::conj(
                           state.amplitude(full_index(layout.keep_bits, layout.env_bits, c, e)));
            m(r, c) = sum;
        }
    return DensityMatrix(static_cast<int>(layout.keep_bits.size()), std::move(m));
}

DensityMatrix reduced_density(const DensityMatrix& rho, const std::set<int>& keep) {
    const TraceLayout layout = trace_layout(rho.qubits(), keep);
    const int sub_dim = 1 << layout.keep_bits.size();
    const int env_dim = 1 << layout.env_bits.size();
    ComplexMatrix m(sub_dim);
    for (int r = 0; r < sub_dim; ++r)
        for (int c = 0; c < sub_dim; ++c) {
            Complex sum{0.0, 0.0};
            for (int e = 0; e < env_dim; ++e)
                sum += rho.matrix()(full_index(layout.keep_bits, layout.env_bits, r, e),
                                    full_index(layout.keep_bits, layout.env_bits, c, e));
            m(r, c) = sum;
        }
    return DensityMatrix(static_cast<int>(layout.keep_bits.size()), std::move(m));
}

BlochVector bloch_vector(const DensityMatrix& rho) {
    if (rho.qubits() != 1) throw WrongDimension("Bloch vector requires a single qubit");
    const ComplexMatrix sigmas[3] = {pauli_x(), pauli_y(), pauli_z()};
    double r[3];
    for (int k = 0; k < 3; ++k) {
        const Complex t = (rho.matrix() * sigmas[k]).trace();
        if (std::abs(t.imag()) > 1e-10) throw Error("Pauli trace has an imaginary residue");
        r[k] = t.real();
    }
    return BlochVector{r[0], r[1], r[2]};
}

PureState haar_random_state(int qubits, std::uint64_t seed) {
    if (qubits < 1 || qubits > 4) throw WrongDimension("random states cover 1..4 qubits");
    Xoshiro256pp rng(seed);
    std::vector<Complex> amps(std::size_t{1} << qubits);
    double norm_sq = 0.0;
    for (auto& a : amps) {
        a = rng.complex_normal();
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) a *= inv;
    return PureState(qubits, std::move(amps));
}

PureState parse_state_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedState(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("qubits") || !doc.contains("amplitudes"))
        throw MalformedState("state file must carry \"qubits\" and \"amplitudes\"");
    if (!doc["qubits"].is_number_integer())
        throw MalformedState("\"qubits\" must be an integer");
    const int n = doc["qubits"].get<int>();
    if (n < 1 || n > 4) throw MalformedState("\"qubits\" must be between 1 and 4");
    const auto& arr = doc["amplitudes"];
    if (!arr.is_array() || arr.size() != (std::size_t{1} << n))
        throw MalformedState("\"amplitudes\" must list exactly 2^qubits entries");
    std::vector<Complex> amps;
    amps.reserve(arr.size());
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw MalformedState("each amplitude must be a [re, im] number pair");
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    try {
        return PureState(n, std::move(amps));
    } catch (const NotNormalized& e) {
        throw MalformedState(std::string("state file amplitudes: ") + e.what());
    }
}

std::string state_to_json(const PureState& state) {
    // %.17g round-trips doubles exactly, keeping write/parse lossless.
    auto num = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return std::string(buf);
    };
    std::ostringstream out;
    out << "{\"qubits\": " << state.qubits() << ", \"amplitudes\": [";
    for (int i = 0; i < state.dim(); ++i) {
        if (i) out << ", ";
        out << '[' << num(state.amplitude(i).real()) << ", " << num(state.amplitude(i).imag())
            << ']';
    }
    out << "]}";
    return out.str();
}

PureState load_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedState("cannot open state file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

}  // namespace qdyn
