#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace wgsrand {

using Complex = std::complex<double>;

/// Dense state vector of N qubits. Qubit j corresponds to bit j of the
/// basis-state index (qubit 0 is the least significant bit). The amplitude
/// vector always has length 2^N and unit L2 norm; gate application and
/// measurement collapse keep the norm within 1e-12.
///
/// Everything is plain dense arithmetic; the design envelope is N <= 24
/// (bounded by memory). The experiments in this project use N <= 8 and the
/// measurement-based oracle uses 2N <= 16.
class StateVector {
  public:
    /// |00...0>
    explicit StateVector(std::size_t num_qubits);

    /// |++...+>
    static StateVector all_plus(std::size_t num_qubits);

    /// Takes ownership of an amplitude vector of length 2^num_qubits.
    /// Throws std::invalid_argument on a length mismatch or a norm more
    /// than 1e-6 away from 1; smaller deviations are renormalized.
    static StateVector from_amplitudes(std::size_t num_qubits, std::vector<Complex> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }

    const Complex& amplitude(std::size_t basis_index) const { return amplitudes_[basis_index]; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

    double norm() const;
    void normalize();

    /// <this|other>
    Complex inner_product(const StateVector& other) const;

    /// |<this|other>|. States that agree up to a global phase have
    /// overlap 1; this is the only state-equality notion used here because
    /// measurement branches fix states only up to phase.
    double overlap(const StateVector& other) const;

    /// Applies a 2x2 unitary to one qubit. Throws std::invalid_argument if
    /// the qubit is out of range or if ||G^dag G - I||_max > 1e-8.
    void apply_single_qubit(std::size_t qubit, const Eigen::Matrix2cd& gate);

    /// Applies diag(1, 1, 1, e^{-i phi}) to a qubit pair: basis states with
    /// both qubits set pick up e^{-i phi}. Symmetric in (a, b). Throws
    /// std::invalid_argument on equal or out-of-range indices.
    void apply_controlled_phase(std::size_t qubit_a, std::size_t qubit_b, double phi);

    /// Probability that an X-basis measurement of the qubit yields |+>.
    double x_plus_probability(std::size_t qubit) const;

    /// Projective X-basis measurement. Outcome 0 (the |+> branch, +1
    /// eigenvalue) is selected iff random_draw < p_plus, so a draw in
    /// [0, 1) can never select a zero-probability branch. The state
    /// collapses in place to the renormalized projection, with the measured
    /// qubit left in |+> or |->.
    int measure_x_basis(std::size_t qubit, double random_draw);

    /// Eigenvalues of the reduced density matrix on the given qubit subset
    /// (squared Schmidt coefficients), sorted nonincreasing. Values in
    /// [-1e-12, 0) are clamped to 0; anything more negative, or a spectrum
    /// whose sum strays from 1 by more than 1e-10, throws
    /// std::runtime_error.
    std::vector<double> reduced_spectrum(const std::vector<std::size_t>& subset) const;

  private:
    void check_qubit(std::size_t qubit) const;

    std::size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

namespace gates {

inline Eigen::Matrix2cd hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd h;
    h << s, s, s, -s;
    return h;
}

inline Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    return x;
}

inline Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    return z;
}

/// H Z^s: the operator carried onto a row by an X-basis measurement with
/// outcome s.
inline Eigen::Matrix2cd h_z(int s) {
    const double sign = (s & 1) ? -1.0 : 1.0;
    const double c = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    m << c, sign * c, c, -sign * c;
    return m;
}

}  // namespace gates
}  // namespace wgsrand
