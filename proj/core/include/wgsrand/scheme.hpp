#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "wgsrand/rng.hpp"
#include "wgsrand/state_vector.hpp"

namespace wgsrand {

/// Lattice and experiment parameters for the measurement-based random
/// circuit: N rows of qubits, l columns of depth, vertical coupling angle
/// phi, entanglement partition size N_A, and the root RNG seed.
struct SchemeConfig {
    std::size_t rows = 2;           // N
    std::size_t length = 0;         // l, applied column steps
    double phi = 5.0 * M_PI / 8.0;  // vertical coupling angle
    std::size_t partition_size = 1; // N_A, rows 1..N_A form subsystem A
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless 1 <= N_A <= N-1 and
    /// phi in (0, 2*pi].
    void validate() const;
};

/// Measurement outcomes of one column, one bit per row. Bit 0 encodes the
/// +1 eigenvalue (|+>), bit 1 the -1 eigenvalue (|->).
struct OutcomeVector {
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }
    std::uint8_t operator[](std::size_t j) const { return bits[j]; }
};

/// Draws one column's outcome vector: N independent uniform bits. The
/// branch operators H and HZ are both unitary with equal Kraus weight, so
/// every outcome has probability 2^-N and the 2N-qubit measurement never
/// needs to be simulated; mbqc_column_oracle exists to verify exactly this.
/// Consumes one 64-bit word per call, so a stream is positioned purely by
/// how many columns it has produced.
OutcomeVector sample_outcome(const SchemeConfig& config, RngStream& stream);

/// Applies M(S) = tensor_j H Z^{S_j}: the row-local operator selected by
/// one column of X-basis measurements.
void apply_m_operator(StateVector& state, const OutcomeVector& outcome);

/// Applies G(phi): a phi-gate on each vertically adjacent row pair
/// (j, j+1), j = 0..N-2, open chain. All factors are diagonal and commute.
void apply_g_operator(StateVector& state, double phi);

/// One column step, G(phi) * M(S). Unitary for every outcome.
void column_step(StateVector& state, const OutcomeVector& outcome, double phi);

struct RunLog {
    std::vector<OutcomeVector> outcomes;
};

/// Applies config.length column steps with freshly sampled outcomes,
/// returning all outcome vectors. Deterministic given the stream position.
RunLog run_circuit(StateVector& state, const SchemeConfig& config, RngStream& stream);

/// Two-qubit resource gates consumed by a circuit: 2N-1 per column step
/// (N horizontal CZs plus N-1 vertical phi-gates), (2N-1)*l in total.
std::size_t two_qubit_gate_count(std::size_t rows, std::size_t length);

struct OracleResult {
    OutcomeVector outcome;
    StateVector column_state;
    /// Exact Born probability of the |+> outcome for each input-qubit
    /// measurement, evaluated on the partially collapsed joint state.
    std::vector<double> plus_probabilities;
};

/// Literal measurement-based realization of one column step, used as the
/// correctness oracle for sample_outcome + column_step. Builds the
/// 2N-qubit joint system (input register plus one resource column of |+>
/// qubits), applies the vertical phi-gates on the column and a CZ between
/// each input qubit and its row's resource qubit, measures every input
/// qubit in the X basis, and returns the discarded-register column state.
/// The returned state equals column_step(input, S, phi) up to global phase.
/// Requires 2N <= 16.
OracleResult mbqc_column_oracle(const StateVector& input, double phi, RngStream& stream);

/// Generalized one-column transfer: resource qubits prepared in
/// gamma|0> + delta|1>, measurements in the basis (|0> +- e^{i theta}|1>)/sqrt(2),
/// and an arbitrary 4x4 coupling unitary between columns.
struct GeneralizedStep {
    Complex gamma{1.0 / std::sqrt(2.0), 0.0};
    Complex delta{1.0 / std::sqrt(2.0), 0.0};
    double theta = 0.0;
    Eigen::Matrix4cd column_unitary = Eigen::Matrix4cd::Identity();

    /// Throws std::invalid_argument unless |gamma|^2 + |delta|^2 = 1 within
    /// 1e-12 and the column unitary is unitary within 1e-10.
    void validate() const;

    /// The standard scheme: gamma = delta = 1/sqrt(2), theta = 0, CZ coupling.
    static GeneralizedStep standard();

    /// Like standard() but with a diag(1,1,1,e^{-i phi}) coupling.
    static GeneralizedStep phi_column(double phi);

    /// Random step: Haar-random 4x4 unitary, uniform theta, random
    /// normalized (gamma, delta).
    static GeneralizedStep random(RngStream& stream);
};

/// The 2x2 branch operator for measurement outcome s in {0, 1}. For the
/// standard step this is exactly H (s = 0) or HZ (s = 1); in general the
/// two branches satisfy M(0)^dag M(0) + M(1)^dag M(1) = 2I.
Eigen::Matrix2cd generalized_m(const GeneralizedStep& step, int s);

/// How far the generalized step is from giving unitary branch evolution.
/// For a diagonal coupling this is |gamma|^2 u11* u33 + |delta|^2 u22* u44|
/// in magnitude, zero iff both branch operators are proportional to
/// unitaries; otherwise it falls back to max_s ||M(s)^dag M(s) - I||_max of
/// the measurement-normalized branches M(s)/sqrt(2).
double unitarity_defect(const GeneralizedStep& step);

/// Haar-random 4x4 unitary (QR of a complex Gaussian matrix with the phase
/// convention fixed by the sign of R's diagonal).
Eigen::Matrix4cd random_unitary4(RngStream& stream);

}  // namespace wgsrand
