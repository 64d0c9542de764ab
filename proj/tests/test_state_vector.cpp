#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "wgsrand/entanglement.hpp"
#include "wgsrand/state_vector.hpp"

using namespace wgsrand;
using namespace wgsrand::testing;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool amplitudes_close(const StateVector& state, const std::vector<Complex>& expected,
                      double tol = 1e-12) {
    if (state.dim() != expected.size()) {
        return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (std::abs(state.amplitude(i) - expected[i]) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("construction and normalization") {
    StateVector zero(3);
    CHECK(zero.dim() == 8);
    CHECK(zero.amplitude(0) == Complex{1.0, 0.0});
    CHECK(zero.norm() == doctest::Approx(1.0).epsilon(1e-14));

    StateVector plus = StateVector::all_plus(2);
    CHECK(plus.amplitude(3) == Complex{0.5, 0.0});
    CHECK(plus.norm() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(StateVector::from_amplitudes(2, {Complex{1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::from_amplitudes(1, {Complex{2.0, 0.0}, Complex{0.0, 0.0}}),
                    std::invalid_argument);
}

TEST_CASE("single-qubit gates on named states") {
    // H|0> = |+>
    StateVector state(1);
    state.apply_single_qubit(0, gates::hadamard());
    CHECK(amplitudes_close(state, {Complex{kInvSqrt2}, Complex{kInvSqrt2}}));

    // Z|+> = |->
    state.apply_single_qubit(0, gates::pauli_z());
    CHECK(amplitudes_close(state, {Complex{kInvSqrt2}, Complex{-kInvSqrt2}}));

    // X on qubit 1 of |10> (basis index 2) gives |00>
    StateVector two = make_state(2, {Complex{0}, Complex{0}, Complex{1}, Complex{0}});
    two.apply_single_qubit(1, gates::pauli_x());
    CHECK(amplitudes_close(two, {Complex{1}, Complex{0}, Complex{0}, Complex{0}}));
}

TEST_CASE("single-qubit gate rejects bad input") {
    StateVector state(2);
    CHECK_THROWS_AS(state.apply_single_qubit(2, gates::hadamard()), std::invalid_argument);

    Eigen::Matrix2cd not_unitary;
    not_unitary << 1.0, 0.0, 0.0, 1.5;
    CHECK_THROWS_AS(state.apply_single_qubit(0, not_unitary), std::invalid_argument);
}

TEST_CASE("controlled phase action") {
    // phi = pi is CZ: |11> -> -|11>
    StateVector s11 = make_state(2, {Complex{0}, Complex{0}, Complex{0}, Complex{1}});
    s11.apply_controlled_phase(0, 1, M_PI);
    CHECK(std::abs(s11.amplitude(3) - Complex{-1.0, 0.0}) < 1e-12);

    // phi = 2*pi is the identity
    s11.apply_controlled_phase(0, 1, 2.0 * M_PI);
    CHECK(std::abs(s11.amplitude(3) - Complex{-1.0, 0.0}) < 1e-12);

    // diagonal action on the uniform state touches only |11>
    const double phi = 0.731;
    StateVector uniform = StateVector::all_plus(2);
    uniform.apply_controlled_phase(0, 1, phi);
    CHECK(amplitudes_close(uniform, {Complex{0.5}, Complex{0.5}, Complex{0.5},
                                     0.5 * std::polar(1.0, -phi)}));

    CHECK_THROWS_AS(uniform.apply_controlled_phase(0, 0, phi), std::invalid_argument);
    CHECK_THROWS_AS(uniform.apply_controlled_phase(0, 2, phi), std::invalid_argument);
}

TEST_CASE("controlled phase is symmetric and invertible") {
    RngStream stream(11, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const double phi = 2.0 * M_PI * stream.uniform();
        const StateVector input = haar_sample(3, stream);

        StateVector a = input;
        StateVector b = input;
        a.apply_controlled_phase(0, 2, phi);
        b.apply_controlled_phase(2, 0, phi);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            CHECK(std::abs(a.amplitude(i) - b.amplitude(i)) < 1e-12);
        }

        a.apply_controlled_phase(0, 2, -phi);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            CHECK(std::abs(a.amplitude(i) - input.amplitude(i)) < 1e-12);
        }
    }
}

TEST_CASE("gate kernels match explicit matrix multiplication for N <= 3") {
    RngStream stream(23, 0);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const StateVector input = haar_sample(n, stream);
            const Eigen::VectorXcd v = to_eigen(input);

            const std::size_t qubit = stream.next_u64() % n;
            const Eigen::Matrix2cd gate = random_unitary2(stream);
            StateVector by_kernel = input;
            by_kernel.apply_single_qubit(qubit, gate);
            const Eigen::VectorXcd expected = embed_single(n, qubit, gate) * v;
            CHECK((to_eigen(by_kernel) - expected).cwiseAbs().maxCoeff() < 1e-12);

            if (n >= 2) {
                const std::size_t a = stream.next_u64() % n;
                std::size_t b = stream.next_u64() % n;
                if (a == b) {
                    b = (b + 1) % n;
                }
                const double phi = 2.0 * M_PI * stream.uniform();
                StateVector phased = input;
                phased.apply_controlled_phase(a, b, phi);
                const Eigen::VectorXcd expected2 = embed_controlled_phase(n, a, b, phi) * v;
                CHECK((to_eigen(phased) - expected2).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("norm is preserved by gates and restored by collapse") {
    RngStream stream(37, 0);
    for (int trial = 0; trial < 20; ++trial) {
        StateVector state = haar_sample(4, stream);
        state.apply_single_qubit(stream.next_u64() % 4, random_unitary2(stream));
        state.apply_controlled_phase(0, 3, 2.0 * M_PI * stream.uniform());
        CHECK(std::abs(state.norm() - 1.0) < 1e-12);

        state.measure_x_basis(stream.next_u64() % 4, stream.uniform());
        CHECK(std::abs(state.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("x-basis measurement on eigenstates and |0>") {
    // |+> is the +1 eigenstate: outcome 0 regardless of the draw
    StateVector plus = StateVector::all_plus(1);
    CHECK(plus.x_plus_probability(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(plus.measure_x_basis(0, 0.3) == 0);
    CHECK(amplitudes_close(plus, {Complex{kInvSqrt2}, Complex{kInvSqrt2}}));

    // |0> = (|+> + |->)/sqrt(2): p_plus is exactly one half
    StateVector zero(1);
    CHECK(zero.x_plus_probability(0) == 0.5);
    CHECK(zero.measure_x_basis(0, 0.4999999) == 0);
    StateVector zero2(1);
    CHECK(zero2.measure_x_basis(0, 0.5) == 1);

    CHECK_THROWS_AS(zero.measure_x_basis(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(zero.measure_x_basis(0, -0.1), std::invalid_argument);
}

TEST_CASE("measuring the control of CZ(|psi> (x) |+>) is unbiased for any psi") {
    RngStream stream(41, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const StateVector psi = haar_sample(1, stream);
        StateVector joint = make_state(
            2, {psi.amplitude(0) * kInvSqrt2, psi.amplitude(1) * kInvSqrt2,
                psi.amplitude(0) * kInvSqrt2, psi.amplitude(1) * kInvSqrt2});
        joint.apply_controlled_phase(0, 1, M_PI);
        CHECK(std::abs(joint.x_plus_probability(0) - 0.5) < 1e-13);

        // outcome 0 leaves the second qubit in H|psi>
        joint.measure_x_basis(0, 0.0);
        const Complex h0 = kInvSqrt2 * (psi.amplitude(0) + psi.amplitude(1));
        const Complex h1 = kInvSqrt2 * (psi.amplitude(0) - psi.amplitude(1));
        // second qubit amplitudes sit at indices 0 and 2 with qubit 0 in |+>
        const Complex got0 = joint.amplitude(0) / kInvSqrt2;
        const Complex got1 = joint.amplitude(2) / kInvSqrt2;
        const Complex phase_free =
            std::conj(got0) * h0 + std::conj(got1) * h1;  // |<got|H psi>| must be 1
        CHECK(std::abs(phase_free) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("reduced spectrum of named states") {
    // Bell pair: both Schmidt weights one half
    StateVector bell = make_state(2, {Complex{kInvSqrt2}, Complex{0}, Complex{0},
                                      Complex{kInvSqrt2}});
    auto spec = bell.reduced_spectrum({0});
    REQUIRE(spec.size() == 2);
    CHECK(spec[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spec[1] == doctest::Approx(0.5).epsilon(1e-12));

    // product state
    StateVector product(2);
    spec = product.reduced_spectrum({0});
    CHECK(spec[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spec[1] == doctest::Approx(0.0).epsilon(1e-12));

    // W state: qubit 0 against the rest has weights 2/3 and 1/3
    const double w = 1.0 / std::sqrt(3.0);
    StateVector wstate = make_state(3, {Complex{0}, Complex{w}, Complex{w}, Complex{0},
                                        Complex{w}, Complex{0}, Complex{0}, Complex{0}});
    spec = wstate.reduced_spectrum({0});
    CHECK(spec[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(spec[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("reduced spectrum rejects bad subsets") {
    StateVector state(3);
    CHECK_THROWS_AS(state.reduced_spectrum({}), std::invalid_argument);
    CHECK_THROWS_AS(state.reduced_spectrum({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(state.reduced_spectrum({3}), std::invalid_argument);
    CHECK_THROWS_AS(state.reduced_spectrum({1, 1}), std::invalid_argument);
}

TEST_CASE("Schmidt symmetry: subset vs complement spectra agree") {
    RngStream stream(53, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector state = haar_sample(4, stream);
        const std::vector<std::size_t> subset{0, 2};
        const std::vector<std::size_t> complement{1, 3};
        const auto sa = state.reduced_spectrum(subset);
        const auto sb = state.reduced_spectrum(complement);
        REQUIRE(sa.size() == sb.size());
        for (std::size_t k = 0; k < sa.size(); ++k) {
            CHECK(sa[k] == doctest::Approx(sb[k]).epsilon(1e-10));
        }

        // uneven split: smaller side's spectrum equals the larger side's
        // leading entries, the rest are zero
        const auto one = state.reduced_spectrum({1});
        const auto three = state.reduced_spectrum({0, 2, 3});
        for (std::size_t k = 0; k < three.size(); ++k) {
            const double expected = k < one.size() ? one[k] : 0.0;
            CHECK(three[k] == doctest::Approx(expected).epsilon(1e-10));
        }
    }
}
