#include "wgsrand/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace wgsrand {

namespace {

constexpr double kUnitaryTol = 1e-8;
constexpr double kEigenvalueFloor = -1e-12;
constexpr double kSpectrumSumTol = 1e-10;
constexpr double kCollapseFloor = 1e-15;

}  // namespace

StateVector::StateVector(std::size_t num_qubits)
    : num_qubits_(num_qubits), amplitudes_(std::size_t{1} << num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("StateVector: need at least one qubit");
    }
    amplitudes_[0] = Complex{1.0, 0.0};
}

StateVector StateVector::all_plus(std::size_t num_qubits) {
    StateVector state(num_qubits);
    const double amp = 1.0 / std::sqrt(static_cast<double>(state.dim()));
    std::fill(state.amplitudes_.begin(), state.amplitudes_.end(), Complex{amp, 0.0});
    return state;
}

StateVector StateVector::from_amplitudes(std::size_t num_qubits, std::vector<Complex> amplitudes) {
    StateVector state(num_qubits);
    if (amplitudes.size() != state.dim()) {
        throw std::invalid_argument("StateVector: amplitude vector length must be 2^num_qubits");
    }
    state.amplitudes_ = std::move(amplitudes);
    const double n = state.norm();
    if (std::abs(n - 1.0) > 1e-6) {
        throw std::invalid_argument("StateVector: amplitudes are not normalized (norm " +
                                    std::to_string(n) + ")");
    }
    state.normalize();
    return state;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

void StateVector::normalize() {
    const double n = norm();
    if (n < kCollapseFloor) {
        throw std::runtime_error("StateVector: cannot normalize a zero vector");
    }
    const double inv = 1.0 / n;
    for (Complex& a : amplitudes_) {
        a *= inv;
    }
}

Complex StateVector::inner_product(const StateVector& other) const {
    if (num_qubits_ != other.num_qubits_) {
        throw std::invalid_argument("StateVector: qubit count mismatch in inner product");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    }
    return acc;
}

double StateVector::overlap(const StateVector& other) const {
    return std::abs(inner_product(other));
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw std::invalid_argument("StateVector: qubit index " + std::to_string(qubit) +
                                    " out of range for " + std::to_string(num_qubits_) + " qubits");
    }
}

void StateVector::apply_single_qubit(std::size_t qubit, const Eigen::Matrix2cd& gate) {
    check_qubit(qubit);
    const double defect = (gate.adjoint() * gate - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    if (defect > kUnitaryTol) {
        throw std::invalid_argument("StateVector: gate is not unitary (defect " +
                                    std::to_string(defect) + ")");
    }

    const Complex g00 = gate(0, 0), g01 = gate(0, 1);
    const Complex g10 = gate(1, 0), g11 = gate(1, 1);
    const std::size_t stride = std::size_t{1} << qubit;

    // Pairs (i, i | stride) with bit `qubit` clear in i.
    for (std::size_t base = 0; base < amplitudes_.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amplitudes_[i];
            const Complex a1 = amplitudes_[i | stride];
            amplitudes_[i] = g00 * a0 + g01 * a1;
            amplitudes_[i | stride] = g10 * a0 + g11 * a1;
        }
    }
}

void StateVector::apply_controlled_phase(std::size_t qubit_a, std::size_t qubit_b, double phi) {
    check_qubit(qubit_a);
    check_qubit(qubit_b);
    if (qubit_a == qubit_b) {
        throw std::invalid_argument("StateVector: controlled phase needs two distinct qubits");
    }
    const Complex phase = std::polar(1.0, -phi);
    const std::size_t mask = (std::size_t{1} << qubit_a) | (std::size_t{1} << qubit_b);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & mask) == mask) {
            amplitudes_[i] *= phase;
        }
    }
}

double StateVector::x_plus_probability(std::size_t qubit) const {
    check_qubit(qubit);
    const std::size_t stride = std::size_t{1} << qubit;
    double p = 0.0;
    for (std::size_t base = 0; base < amplitudes_.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            p += 0.5 * std::norm(amplitudes_[i] + amplitudes_[i | stride]);
        }
    }
    return p;
}

int StateVector::measure_x_basis(std::size_t qubit, double random_draw) {
    check_qubit(qubit);
    if (random_draw < 0.0 || random_draw >= 1.0) {
        throw std::invalid_argument("StateVector: measurement draw must lie in [0, 1)");
    }
    const double p_plus = x_plus_probability(qubit);
    const int outcome = random_draw < p_plus ? 0 : 1;
    const double sign = outcome == 0 ? 1.0 : -1.0;
    const double p_branch = outcome == 0 ? p_plus : 1.0 - p_plus;
    if (p_branch < kCollapseFloor * kCollapseFloor) {
        throw std::runtime_error("StateVector: measurement selected a zero-probability branch");
    }

    // Project onto (|0> + sign |1>)/sqrt(2) on the measured qubit, then
    // renormalize; the measured qubit factors out as |+> or |->.
    const double inv = 1.0 / std::sqrt(p_branch);
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < amplitudes_.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex c = 0.5 * (amplitudes_[i] + sign * amplitudes_[i | stride]) * inv;
            amplitudes_[i] = c;
            amplitudes_[i | stride] = sign * c;
        }
    }
    return outcome;
}

std::vector<double> StateVector::reduced_spectrum(const std::vector<std::size_t>& subset) const {
    if (subset.empty()) {
        throw std::invalid_argument("StateVector: reduced_spectrum needs a nonempty subset");
    }
    if (subset.size() >= num_qubits_) {
        throw std::invalid_argument("StateVector: subset must be a proper subset of the qubits");
    }
    std::size_t subset_mask = 0;
    for (std::size_t q : subset) {
        check_qubit(q);
        const std::size_t bit = std::size_t{1} << q;
        if (subset_mask & bit) {
            throw std::invalid_argument("StateVector: duplicate qubit in subset");
        }
        subset_mask |= bit;
    }

    // Gram matrix of the reshaped amplitude matrix: rows indexed by the
    // subset bits, columns by the complement. Its eigenvalues are the
    // squared Schmidt coefficients.
    const std::size_t rows = std::size_t{1} << subset.size();
    const std::size_t cols = dim() >> subset.size();
    Eigen::MatrixXcd reshaped(rows, cols);
    reshaped.setZero();
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        std::size_t r = 0;
        for (std::size_t k = 0; k < subset.size(); ++k) {
            r |= ((i >> subset[k]) & 1u) << k;
        }
        std::size_t c = 0;
        std::size_t out = 0;
        for (std::size_t q = 0; q < num_qubits_; ++q) {
            if (subset_mask & (std::size_t{1} << q)) {
                continue;
            }
            c |= ((i >> q) & 1u) << out;
            ++out;
        }
        reshaped(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = amplitudes_[i];
    }

    const Eigen::MatrixXcd gram = reshaped * reshaped.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("StateVector: eigenvalue decomposition failed");
    }

    std::vector<double> spectrum(static_cast<std::size_t>(solver.eigenvalues().size()));
    double sum = 0.0;
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        double v = solver.eigenvalues()(static_cast<Eigen::Index>(k));
        if (v < kEigenvalueFloor) {
            throw std::runtime_error("StateVector: reduced density matrix eigenvalue " +
                                     std::to_string(v) + " below tolerance");
        }
        v = std::clamp(v, 0.0, 1.0);
        spectrum[k] = v;
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSpectrumSumTol) {
        throw std::runtime_error("StateVector: reduced spectrum sums to " + std::to_string(sum));
    }
    std::sort(spectrum.begin(), spectrum.end(), std::greater<double>());
    return spectrum;
}

}  // namespace wgsrand
