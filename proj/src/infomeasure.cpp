#include "qdyn/infomeasure.hpp"

#include <cmath>

namespace qdyn {

namespace {

constexpr double kRangeSlack = 1e-10;

double clamp_unit(double x, const char* what) {
    if (x < -kRangeSlack || x > 1.0 + kRangeSlack) throw OutOfRange(what);
    return std::min(1.0, std::max(0.0, x));
}

}  // namespace

double optimal_fidelity(const DensityMatrix& rho) {
    if (rho.qubits() != 1) throw WrongDimension("optimal fidelity requires a single qubit");
    return 0.5 * (1.0 + bloch_vector(rho).norm());
}

double local_info_fidelity(const DensityMatrix& rho) {
    const double f = optimal_fidelity(rho);
    const double v = (2.0 * f - 1.0) * (2.0 * f - 1.0);
    return clamp_unit(v, "fidelity information outside [0, 1]");
}

double local_info_bz(const DensityMatrix& rho) {
    if (rho.qubits() != 1) throw WrongDimension("invariant information requires a single qubit");
    return clamp_unit(2.0 * rho.purity() - 1.0, "invariant information outside [0, 1]");
}

InfoReport total_local_info(const PureState& state, LocalInfoMeasure measure) {
    InfoReport report;
    report.per_qubit.reserve(state.qubits());
    for (int q = 1; q <= state.qubits(); ++q) {
        const DensityMatrix rho = reduced_density(state, {q});
        const double v =
            measure == LocalInfoMeasure::fidelity ? local_info_fidelity(rho) : local_info_bz(rho);
        report.per_qubit.push_back(v);
        report.total += v;
    }
    return report;
}

}  // namespace qdyn
