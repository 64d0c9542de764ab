#include "wgsrand/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wgsrand {

double vn_entropy_bits(const StateVector& state, std::size_t partition_size) {
    if (partition_size < 1 || partition_size >= state.num_qubits()) {
        throw std::invalid_argument("vn_entropy_bits: need 1 <= N_A <= N-1");
    }
    std::vector<std::size_t> subset(partition_size);
    std::iota(subset.begin(), subset.end(), std::size_t{0});
    const std::vector<double> spectrum = state.reduced_spectrum(subset);

    double entropy = 0.0;
    for (double lambda : spectrum) {
        if (lambda > 0.0) {
            entropy -= lambda * std::log2(lambda);
        }
    }
    return std::max(entropy, 0.0);
}

double page_average(std::size_t n_a, std::size_t n_b) {
    if (n_a < 1 || n_a > n_b) {
        throw std::invalid_argument("page_average: need 1 <= n_a <= n_b");
    }
    if (n_a + n_b > 30) {
        throw std::invalid_argument("page_average: n_a + n_b too large for direct summation");
    }
    const std::size_t d_b = std::size_t{1} << n_b;
    const std::size_t d = std::size_t{1} << (n_a + n_b);
    double harmonic = 0.0;
    for (std::size_t k = d; k > d_b; --k) {
        harmonic += 1.0 / static_cast<double>(k);
    }
    const double d_a = static_cast<double>(std::size_t{1} << n_a);
    const double constant = (d_a - 1.0) / (2.0 * static_cast<double>(d_b));
    return (harmonic - constant) / std::log(2.0);
}

std::vector<double> stabilizer_entropy_pmf(std::size_t n, std::size_t n_a) {
    if (n_a < 1 || 2 * n_a > n) {
        throw std::invalid_argument("stabilizer_entropy_pmf: need 1 <= n_a <= n - n_a");
    }

    auto log_pow2_term = [](double coefficient, std::size_t exponent) {
        // log(2^exponent + coefficient), safe for exponents up to ~1000
        return static_cast<double>(exponent) * std::log(2.0) +
               std::log1p(coefficient * std::pow(2.0, -static_cast<double>(exponent)));
    };

    double log_prefactor = 0.0;
    for (std::size_t i = 1; i <= n_a; ++i) {
        log_prefactor += log_pow2_term(1.0, i);
    }
    for (std::size_t k = n - n_a + 1; k <= n; ++k) {
        log_prefactor -= log_pow2_term(1.0, k);
    }

    std::vector<double> pmf(n_a + 1);
    double log_product = 0.0;
    pmf[0] = std::exp(log_prefactor);
    for (std::size_t j = 1; j <= n_a; ++j) {
        const double log_num1 = log_pow2_term(-1.0, n - n_a + 1 - j);
        // 2^{n_a+j} - 2^{2j-1} = 2^{2j-1} (2^{n_a-j+1} - 1)
        const double log_num2 =
            static_cast<double>(2 * j - 1) * std::log(2.0) + log_pow2_term(-1.0, n_a - j + 1);
        const double log_den = log_pow2_term(-1.0, 2 * j);
        log_product += log_num1 + log_num2 - log_den;
        pmf[j] = std::exp(log_prefactor + log_product);
    }
    return pmf;
}

StateVector haar_sample(std::size_t n, RngStream& stream) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> amps(dim);
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const auto [re, im] = stream.gaussian_pair();
        amps[i] = Complex{re, im};
        norm_sq += re * re + im * im;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Complex& a : amps) {
        a *= inv;
    }
    return StateVector::from_amplitudes(n, std::move(amps));
}

EntanglementHistogram build_histogram(const std::vector<double>& samples, std::size_t bins,
                                      double lo, double hi) {
    if (samples.empty()) {
        throw std::invalid_argument("build_histogram: no samples");
    }
    if (bins < 1 || !(hi > lo)) {
        throw std::invalid_argument("build_histogram: need bins >= 1 and hi > lo");
    }

    EntanglementHistogram hist;
    hist.bin_edges.resize(bins + 1);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t b = 0; b <= bins; ++b) {
        hist.bin_edges[b] = lo + width * static_cast<double>(b);
    }

    std::vector<std::size_t> counts(bins, 0);
    for (double x : samples) {
        if (x < lo || x > hi) {
            ++hist.overflow_count;
        }
        const double clamped = std::clamp(x, lo, hi);
        // Interior edges belong to the bin on their left: a sample exactly
        // on bin_edges[k] counts toward bin k-1.
        const double pos = (clamped - lo) / width;
        std::size_t b = pos <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(pos)) - 1;
        b = std::min(b, bins - 1);
        ++counts[b];
    }

    hist.sample_count = samples.size();
    hist.densities.resize(bins);
    const double scale = 1.0 / (static_cast<double>(samples.size()) * width);
    for (std::size_t b = 0; b < bins; ++b) {
        hist.densities[b] = static_cast<double>(counts[b]) * scale;
    }
    return hist;
}

namespace {

double ks_statistic(std::vector<double>& a, std::vector<double>& b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double ks = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        // Evaluate the CDF difference only after consuming every sample
        // tied at the current value, from both sets.
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) {
            ++i;
        }
        while (j < b.size() && b[j] <= x) {
            ++j;
        }
        ks = std::max(ks, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return ks;
}

}  // namespace

DistributionDistance distribution_distance(std::vector<double> a, std::vector<double> b,
                                           double lo, double hi, std::size_t bins) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("distribution_distance: empty sample set");
    }
    const EntanglementHistogram ha = build_histogram(a, bins, lo, hi);
    const EntanglementHistogram hb = build_histogram(b, bins, lo, hi);
    DistributionDistance result;
    result.tv = total_variation(ha, hb);
    result.ks = ks_statistic(a, b);
    return result;
}

double total_variation(const EntanglementHistogram& h1, const EntanglementHistogram& h2) {
    if (h1.bin_edges != h2.bin_edges) {
        throw std::invalid_argument("total_variation: histograms use different binnings");
    }
    double tv = 0.0;
    for (std::size_t b = 0; b < h1.bins(); ++b) {
        const double width = h1.bin_edges[b + 1] - h1.bin_edges[b];
        tv += 0.5 * std::abs(h1.densities[b] - h2.densities[b]) * width;
    }
    return tv;
}

}  // namespace wgsrand
