#pragma once

// Brute-force enumeration of the 60 two-qubit stabilizer states, used as an
// independent oracle for the analytic entanglement distribution. Stabilizer
// groups are built from every commuting pair of distinct non-identity
// two-qubit Paulis with all sign choices; rank-one projectors
// (I + sP)(I + tQ)/4 yield the states, which are then deduplicated up to
// global phase.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace wgsrand::testing {

inline std::vector<Eigen::Vector4cd> enumerate_two_qubit_stabilizer_states() {
    using Mat = Eigen::Matrix4cd;
    using Vec = Eigen::Vector4cd;
    const std::complex<double> i{0.0, 1.0};

    std::array<Eigen::Matrix2cd, 4> pauli;
    pauli[0] = Eigen::Matrix2cd::Identity();
    pauli[1] << 0, 1, 1, 0;
    pauli[2] << 0, -i, i, 0;
    pauli[3] << 1, 0, 0, -1;

    std::vector<Mat> two_qubit;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a == 0 && b == 0) {
                continue;
            }
            Mat m;
            for (int r = 0; r < 2; ++r) {
                for (int c = 0; c < 2; ++c) {
                    m.block<2, 2>(2 * r, 2 * c) = pauli[a](r, c) * pauli[b];
                }
            }
            two_qubit.push_back(m);
        }
    }

    std::vector<Vec> states;
    auto already_known = [&](const Vec& v) {
        for (const Vec& w : states) {
            if (std::abs(w.dot(v)) > 1.0 - 1e-9) {
                return true;
            }
        }
        return false;
    };

    for (std::size_t p = 0; p < two_qubit.size(); ++p) {
        for (std::size_t q = p + 1; q < two_qubit.size(); ++q) {
            const Mat commutator = two_qubit[p] * two_qubit[q] - two_qubit[q] * two_qubit[p];
            if (commutator.cwiseAbs().maxCoeff() > 1e-12) {
                continue;
            }
            for (double sp : {1.0, -1.0}) {
                for (double sq : {1.0, -1.0}) {
                    const Mat projector = 0.25 * (Mat::Identity() + sp * two_qubit[p]) *
                                          (Mat::Identity() + sq * two_qubit[q]);
                    if (std::abs(projector.trace().real() - 1.0) > 1e-9) {
                        continue;  // not a maximal stabilizer group
                    }
                    Eigen::Index best = 0;
                    projector.diagonal().cwiseAbs().maxCoeff(&best);
                    Vec v = projector.col(best);
                    v.normalize();
                    if (!already_known(v)) {
                        states.push_back(v);
                    }
                }
            }
        }
    }
    return states;
}

}  // namespace wgsrand::testing
