#pragma once

#include <cstddef>
#include <vector>

#include "wgsrand/rng.hpp"
#include "wgsrand/state_vector.hpp"

namespace wgsrand {

/// Von Neumann entanglement entropy, in bits, of the bipartition
/// A = qubits 0..partition_size-1 against the rest. Always in
/// [0, min(N_A, N - N_A)].
double vn_entropy_bits(const StateVector& state, std::size_t partition_size);

/// Haar-average entanglement entropy in bits of an n_a : n_b bipartition:
///
///   (1/ln 2) * ( sum_{k = 2^{n_b}+1}^{2^{n_a+n_b}} 1/k  -  (2^{n_a}-1) / 2^{n_b+1} )
///
/// with the constant term subtracted once, outside the sum. Requires
/// n_a <= n_b. Strictly between 0 and n_a.
double page_average(std::size_t n_a, std::size_t n_b);

/// Distribution of the integer entanglement entropy S_A of uniformly random
/// stabilizer states on n qubits: entry s is P(S_A = s) for s = 0..n_a.
/// Requires 1 <= n_a <= n - n_a. Evaluated in log space; entries sum to 1.
std::vector<double> stabilizer_entropy_pmf(std::size_t n, std::size_t n_a);

/// State drawn from the Haar measure on n-qubit pure states: independent
/// standard complex Gaussian amplitudes, normalized.
StateVector haar_sample(std::size_t n, RngStream& stream);

/// Density-normalized histogram: sum over bins of density * width is 1.
struct EntanglementHistogram {
    std::vector<double> bin_edges;  // bins + 1 increasing edges
    std::vector<double> densities;
    std::size_t sample_count = 0;
    /// Samples outside [lo, hi]; these were clamped into the boundary bins.
    std::size_t overflow_count = 0;

    std::size_t bins() const { return densities.size(); }
};

EntanglementHistogram build_histogram(const std::vector<double>& samples, std::size_t bins,
                                      double lo, double hi);

struct DistributionDistance {
    double ks;  // two-sample Kolmogorov-Smirnov statistic, on raw samples
    double tv;  // total variation distance on a common binning
};

/// Both distances between two sample sets over the common support
/// [lo, hi]. The caller picks which one to threshold.
DistributionDistance distribution_distance(std::vector<double> a, std::vector<double> b,
                                           double lo, double hi, std::size_t bins = 500);

/// Total variation distance between two histograms over identical binning.
/// Throws std::invalid_argument if the bin edges differ.
double total_variation(const EntanglementHistogram& h1, const EntanglementHistogram& h2);

}  // namespace wgsrand
