#include "wgsrand/scheme.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace wgsrand {

void SchemeConfig::validate() const {
    if (rows < 1) {
        throw std::invalid_argument("SchemeConfig: need at least one row");
    }
    if (rows > 1 && (partition_size < 1 || partition_size > rows - 1)) {
        throw std::invalid_argument("SchemeConfig: partition size must satisfy 1 <= N_A <= N-1");
    }
    if (!(phi > 0.0) || phi > 2.0 * M_PI) {
        throw std::invalid_argument("SchemeConfig: phi must lie in (0, 2*pi]");
    }
}

OutcomeVector sample_outcome(const SchemeConfig& config, RngStream& stream) {
    const std::uint64_t word = stream.next_u64();
    OutcomeVector outcome;
    outcome.bits.resize(config.rows);
    for (std::size_t j = 0; j < config.rows; ++j) {
        outcome.bits[j] = static_cast<std::uint8_t>((word >> j) & 1u);
    }
    return outcome;
}

void apply_m_operator(StateVector& state, const OutcomeVector& outcome) {
    if (outcome.size() != state.num_qubits()) {
        throw std::invalid_argument("apply_m_operator: outcome length must equal the qubit count");
    }
    for (std::size_t j = 0; j < outcome.size(); ++j) {
        state.apply_single_qubit(j, gates::h_z(outcome[j]));
    }
}

void apply_g_operator(StateVector& state, double phi) {
    for (std::size_t j = 0; j + 1 < state.num_qubits(); ++j) {
        state.apply_controlled_phase(j, j + 1, phi);
    }
}

void column_step(StateVector& state, const OutcomeVector& outcome, double phi) {
    apply_m_operator(state, outcome);
    apply_g_operator(state, phi);
}

RunLog run_circuit(StateVector& state, const SchemeConfig& config, RngStream& stream) {
    if (state.num_qubits() != config.rows) {
        throw std::invalid_argument("run_circuit: state must have config.rows qubits");
    }
    RunLog log;
    log.outcomes.reserve(config.length);
    for (std::size_t k = 0; k < config.length; ++k) {
        OutcomeVector outcome = sample_outcome(config, stream);
        column_step(state, outcome, config.phi);
        log.outcomes.push_back(std::move(outcome));
    }
    return log;
}

std::size_t two_qubit_gate_count(std::size_t rows, std::size_t length) {
    return (2 * rows - 1) * length;
}

OracleResult mbqc_column_oracle(const StateVector& input, double phi, RngStream& stream) {
    const std::size_t n = input.num_qubits();
    if (2 * n > 16) {
        throw std::invalid_argument("mbqc_column_oracle: joint system limited to 16 qubits");
    }

    // Joint register: qubits 0..n-1 carry the input, qubits n..2n-1 the
    // resource column, initially |+>^n.
    const std::size_t joint_dim = std::size_t{1} << (2 * n);
    const double res_amp = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << n));
    std::vector<Complex> joint(joint_dim, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < (std::size_t{1} << n); ++r) {
        for (std::size_t i = 0; i < input.dim(); ++i) {
            joint[(r << n) | i] = input.amplitude(i) * res_amp;
        }
    }
    StateVector system = StateVector::from_amplitudes(2 * n, std::move(joint));

    // Vertical phi-gates between adjacent resource rows, then a CZ from
    // each input qubit to its row's resource qubit.
    for (std::size_t j = 0; j + 1 < n; ++j) {
        system.apply_controlled_phase(n + j, n + j + 1, phi);
    }
    for (std::size_t j = 0; j < n; ++j) {
        system.apply_controlled_phase(j, n + j, M_PI);
    }

    OracleResult result{OutcomeVector{}, StateVector(1), {}};
    result.outcome.bits.resize(n);
    result.plus_probabilities.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        result.plus_probabilities[j] = system.x_plus_probability(j);
        result.outcome.bits[j] =
            static_cast<std::uint8_t>(system.measure_x_basis(j, stream.uniform()));
    }

    // Each measured qubit now factors out as (|0> +- |1>)/sqrt(2); reading
    // the slice with all input bits 0 recovers the column state up to the
    // common factor 2^{-n/2}.
    std::vector<Complex> column(std::size_t{1} << n);
    const double scale = std::sqrt(static_cast<double>(std::size_t{1} << n));
    for (std::size_t r = 0; r < column.size(); ++r) {
        column[r] = system.amplitude(r << n) * scale;
    }
    result.column_state = StateVector::from_amplitudes(n, std::move(column));
    return result;
}

void GeneralizedStep::validate() const {
    const double weight = std::norm(gamma) + std::norm(delta);
    if (std::abs(weight - 1.0) > 1e-12) {
        throw std::invalid_argument("GeneralizedStep: |gamma|^2 + |delta|^2 must equal 1");
    }
    const double defect =
        (column_unitary.adjoint() * column_unitary - Eigen::Matrix4cd::Identity())
            .cwiseAbs()
            .maxCoeff();
    if (defect > 1e-10) {
        throw std::invalid_argument("GeneralizedStep: column unitary defect " +
                                    std::to_string(defect));
    }
}

GeneralizedStep GeneralizedStep::standard() {
    GeneralizedStep step;
    step.column_unitary = Eigen::Matrix4cd::Identity();
    step.column_unitary(3, 3) = Complex{-1.0, 0.0};
    return step;
}

GeneralizedStep GeneralizedStep::phi_column(double phi) {
    GeneralizedStep step;
    step.column_unitary = Eigen::Matrix4cd::Identity();
    step.column_unitary(3, 3) = std::polar(1.0, -phi);
    return step;
}

Eigen::Matrix4cd random_unitary4(RngStream& stream) {
    Eigen::Matrix4cd g;
    for (Eigen::Index r = 0; r < 4; ++r) {
        for (Eigen::Index c = 0; c < 4; ++c) {
            const auto [x, y] = stream.gaussian_pair();
            g(r, c) = Complex{x, y};
        }
    }
    Eigen::HouseholderQR<Eigen::Matrix4cd> qr(g);
    Eigen::Matrix4cd q = qr.householderQ();
    const Eigen::Matrix4cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < 4; ++k) {
        const Complex d = r(k, k);
        const double mag = std::abs(d);
        q.col(k) *= mag > 0.0 ? d / mag : Complex{1.0, 0.0};
    }
    return q;
}

GeneralizedStep GeneralizedStep::random(RngStream& stream) {
    GeneralizedStep step;
    const auto [gr, gi] = stream.gaussian_pair();
    const auto [dr, di] = stream.gaussian_pair();
    Complex gamma{gr, gi};
    Complex delta{dr, di};
    const double w = std::sqrt(std::norm(gamma) + std::norm(delta));
    step.gamma = gamma / w;
    step.delta = delta / w;
    step.theta = 2.0 * M_PI * stream.uniform();
    step.column_unitary = random_unitary4(stream);
    return step;
}

Eigen::Matrix2cd generalized_m(const GeneralizedStep& step, int s) {
    const Complex sigma = ((s & 1) ? -1.0 : 1.0) * std::polar(1.0, -step.theta);
    const Eigen::Matrix4cd& u = step.column_unitary;
    const Complex g = step.gamma;
    const Complex d = step.delta;

    Eigen::Matrix2cd m;
    m(0, 0) = g * (u(0, 0) + sigma * u(2, 0)) + d * (u(0, 1) + sigma * u(2, 1));
    m(0, 1) = g * (u(0, 2) + sigma * u(2, 2)) + d * (u(0, 3) + sigma * u(2, 3));
    m(1, 0) = g * (u(1, 0) + sigma * u(3, 0)) + d * (u(1, 1) + sigma * u(3, 1));
    m(1, 1) = g * (u(1, 2) + sigma * u(3, 2)) + d * (u(1, 3) + sigma * u(3, 3));
    return m;
}

double unitarity_defect(const GeneralizedStep& step) {
    const Eigen::Matrix4cd& u = step.column_unitary;

    double off_diagonal = 0.0;
    for (Eigen::Index r = 0; r < 4; ++r) {
        for (Eigen::Index c = 0; c < 4; ++c) {
            if (r != c) {
                off_diagonal = std::max(off_diagonal, std::abs(u(r, c)));
            }
        }
    }
    if (off_diagonal <= 1e-12) {
        const Complex condition = std::norm(step.gamma) * std::conj(u(0, 0)) * u(2, 2) +
                                  std::norm(step.delta) * std::conj(u(1, 1)) * u(3, 3);
        return std::abs(condition);
    }

    // Non-diagonal coupling: report how far the normalized branches
    // M(s)/sqrt(2) are from isometries.
    double worst = 0.0;
    for (int s = 0; s < 2; ++s) {
        const Eigen::Matrix2cd m = generalized_m(step, s) / std::sqrt(2.0);
        const double defect =
            (2.0 * m.adjoint() * m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
        worst = std::max(worst, defect);
    }
    return worst;
}

}  // namespace wgsrand
