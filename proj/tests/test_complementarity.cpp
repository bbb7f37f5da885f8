#include <doctest.h>

#include <cmath>
#include <set>

#include "qdyn/complementarity.hpp"
#include "qdyn/dynamics.hpp"
#include "qdyn/qstate.hpp"
#include "qdyn/rng.hpp"

using qdyn::DensityMatrix;
using qdyn::PureState;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

PureState bell_state() { return PureState(2, {kInvSqrt2, 0.0, 0.0, kInvSqrt2}); }

PureState ghz_state() { return PureState(3, {kInvSqrt2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, kInvSqrt2}); }

PureState w_state() {
    return PureState(3, {0.0, kInvSqrt3, kInvSqrt3, 0.0, kInvSqrt3, 0.0, 0.0, 0.0});
}

}  // namespace

TEST_SUITE("complementarity") {

TEST_CASE("fixed states close the identity exactly") {
    const auto bell = qdyn::residual_pure(bell_state());
    CHECK(bell.n == 2);
    CHECK(bell.lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(bell.residual) <= 1e-10);
    CHECK(bell.per_qubit_residuals.empty());

    const auto ghz = qdyn::residual_pure(ghz_state());
    CHECK(ghz.lhs == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(std::abs(ghz.residual) <= 1e-10);
    CHECK(ghz.per_qubit_residuals.size() == 3);

    const auto w = qdyn::residual_pure(w_state());
    CHECK(w.lhs == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(std::abs(w.residual) <= 1e-10);
}

TEST_CASE("identity holds over random ensembles") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto report = qdyn::residual_pure(qdyn::haar_random_state(2, 20000 + seed));
        CHECK(std::abs(report.residual) <= qdyn::kResidualTolerance);
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto report = qdyn::residual_pure(qdyn::haar_random_state(3, 30000 + seed));
        CHECK(std::abs(report.residual) <= qdyn::kResidualTolerance);
    }
}

TEST_CASE("unsupported sizes are refused, not truncated") {
    CHECK_THROWS_AS(qdyn::residual_pure(PureState(1, {1.0, 0.0})), qdyn::UnsupportedSize);
    CHECK_THROWS_AS(qdyn::residual_pure(qdyn::haar_random_state(4, 5)), qdyn::UnsupportedSize);
    CHECK_THROWS_AS(qdyn::per_qubit_residual(qdyn::haar_random_state(4, 5), 1),
                    qdyn::UnsupportedSize);
}

TEST_CASE("per-qubit relation on fixed and random states") {
    CHECK(std::abs(qdyn::per_qubit_residual(ghz_state(), 1)) <= 1e-10);
    CHECK(std::abs(qdyn::per_qubit_residual(w_state(), 2)) <= 1e-10);

    const PureState product = qdyn::product_state({0.6, 0.8, 2});
    for (int q = 1; q <= 3; ++q) CHECK(std::abs(qdyn::per_qubit_residual(product, q)) <= 1e-10);

    const PureState pair = qdyn::product_state({0.6, 0.8, 1});
    for (int q = 1; q <= 2; ++q) CHECK(std::abs(qdyn::per_qubit_residual(pair, q)) <= 1e-10);

    CHECK_THROWS_AS(qdyn::per_qubit_residual(ghz_state(), 0), qdyn::BadIndex);
    CHECK_THROWS_AS(qdyn::per_qubit_residual(ghz_state(), 4), qdyn::BadIndex);

    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const PureState psi = qdyn::haar_random_state(3, 50000 + seed);
        for (int q = 1; q <= 3; ++q)
            CHECK(std::abs(qdyn::per_qubit_residual(psi, q)) <= qdyn::kResidualTolerance);
    }
}

TEST_CASE("per-qubit residuals ride along in the full report") {
    const auto report = qdyn::residual_pure(qdyn::haar_random_state(3, 888));
    REQUIRE(report.per_qubit_residuals.size() == 3);
    for (int q = 1; q <= 3; ++q)
        CHECK(report.per_qubit_residuals[q - 1] ==
              doctest::Approx(qdyn::per_qubit_residual(qdyn::haar_random_state(3, 888), q)));
}

TEST_CASE("mixed-state slack fixed values") {
    // GHZ pair reduction: fully dephased Bell pair, no local or pair information
    const double ghz_slack = qdyn::mixed_slack_2q(qdyn::reduced_density(ghz_state(), {1, 2}));
    CHECK(ghz_slack == doctest::Approx(2.0).epsilon(1e-10));

    const double w_slack = qdyn::mixed_slack_2q(qdyn::reduced_density(w_state(), {1, 2}));
    CHECK(w_slack == doctest::Approx(8.0 / 9.0).epsilon(1e-10));

    const double bell_slack = qdyn::mixed_slack_2q(qdyn::density_of(bell_state()));
    CHECK(std::abs(bell_slack) <= 1e-9);

    CHECK_THROWS_AS(qdyn::mixed_slack_2q(qdyn::reduced_density(ghz_state(), {1})),
                    qdyn::WrongDimension);
}

TEST_CASE("mixed-state inequality over traced random states") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const DensityMatrix rho =
            qdyn::reduced_density(qdyn::haar_random_state(3, 60000 + seed), {1, 2});
        const double slack = qdyn::mixed_slack_2q(rho);
        CHECK(slack >= -qdyn::kResidualTolerance);
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const double slack =
            qdyn::mixed_slack_2q(qdyn::density_of(qdyn::haar_random_state(2, 70000 + seed)));
        CHECK(std::abs(slack) <= qdyn::kResidualTolerance);
    }
}

TEST_CASE("identity holds along trajectories for arbitrary couplings") {
    qdyn::Xoshiro256pp rng(41);
    const qdyn::TimeGrid grid(0.0, 4.0, 101);
    for (int trial = 0; trial < 3; ++trial) {
        const qdyn::CouplingParams coupling{2.0 * rng.uniform01() - 1.0,
                                            2.0 * rng.uniform01() - 1.0,
                                            2.0 * rng.uniform01() - 1.0};
        // entangled initial states, not just products
        const PureState init2 = qdyn::haar_random_state(2, 700 + trial);
        for (const auto& rec :
             qdyn::trajectory(qdyn::hamiltonian_2q(coupling), init2, grid))
            CHECK(std::abs(rec.residual) <= qdyn::kResidualTolerance);

        const PureState init3 = qdyn::haar_random_state(3, 800 + trial);
        for (const auto& rec :
             qdyn::trajectory(qdyn::hamiltonian_3q(coupling), init3, grid))
            CHECK(std::abs(rec.residual) <= qdyn::kResidualTolerance);
    }
}

}  // TEST_SUITE
