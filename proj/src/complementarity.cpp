#include "qdyn/complementarity.hpp"

#include "qdyn/infomeasure.hpp"
#include "qdyn/tangle.hpp"

namespace qdyn {

ComplementarityReport residual_pure(const PureState& state) {
    const int n = state.qubits();
    if (n != 2 && n != 3)
        throw UnsupportedSize("complementarity identities cover two and three qubits");

    ComplementarityReport report;
    report.n = n;
    const InfoReport info = total_local_info(state, LocalInfoMeasure::fidelity);
    const TangleReport tangles = aggregate_tangles(state);
    report.lhs = info.total + tangles.aggregate;
    report.residual = report.lhs - n;
    if (n == 3) {
        report.per_qubit_residuals.reserve(3);
        for (int q = 1; q <= 3; ++q)
            report.per_qubit_residuals.push_back(per_qubit_residual(state, q));
    }
    return report;
}

double per_qubit_residual(const PureState& state, int qubit) {
    const int n = state.qubits();
    if (n != 2 && n != 3)
        throw UnsupportedSize("complementarity identities cover two and three qubits");
    if (qubit < 1 || qubit > n) throw BadIndex("qubit index out of range");

    const double info = local_info_fidelity(reduced_density(state, {qubit}));
    double sum = info;
    for (int other = 1; other <= n; ++other) {
        if (other == qubit) continue;
        sum += two_tangle(reduced_density(state, {std::min(qubit, other), std::max(qubit, other)}));
    }
    if (n == 3) sum += three_tangle(state);
    return sum - 1.0;
}

double mixed_slack_2q(const DensityMatrix& rho) {
    if (rho.qubits() != 2) throw WrongDimension("mixed-state slack is defined for two qubits");
    const double i1 = local_info_fidelity(reduced_density(rho, {1}));
    const double i2 = local_info_fidelity(reduced_density(rho, {2}));
    const double tau = two_tangle(rho);
    return 2.0 - (i1 + i2 + 2.0 * tau);
}

}  // namespace qdyn
