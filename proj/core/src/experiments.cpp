#include "wgsrand/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "wgsrand/parallel.hpp"

namespace wgsrand {

namespace {

// Trajectories are grouped into fixed chunks; per-chunk partial results are
// stored by chunk index and reduced in chunk order, so sums do not depend
// on how chunks were scheduled across threads.
std::size_t chunk_size_for(std::size_t trials) {
    const std::size_t max_chunks = 4096;
    return std::max<std::size_t>(32, (trials + max_chunks - 1) / max_chunks);
}

double sample_std_error(double sum, double sum_sq, std::size_t count) {
    if (count < 2) {
        return 0.0;
    }
    const double n = static_cast<double>(count);
    const double mean = sum / n;
    const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    return std::sqrt(var / n);
}

}  // namespace

StateVector make_input(InputKind kind, std::size_t n, RngStream& stream) {
    switch (kind) {
        case InputKind::HaarRandom:
            return haar_sample(n, stream);
        case InputKind::AllZeros:
            return StateVector(n);
        case InputKind::AllPlus:
            return StateVector::all_plus(n);
    }
    throw std::invalid_argument("make_input: unknown input kind");
}

void ExperimentSpec::validate() const {
    scheme.validate();
    if (scheme.rows < 2) {
        throw std::invalid_argument("ExperimentSpec: entropy experiments need at least two rows");
    }
    if (sample_steps < 1 || trajectories < 1 || bins < 1) {
        throw std::invalid_argument("ExperimentSpec: sample_steps, trajectories and bins must be positive");
    }
    if (!(epsilon > 0.0) || window < 1) {
        throw std::invalid_argument("ExperimentSpec: need epsilon > 0 and window >= 1");
    }
}

BurninResult burnin_mean_entropy(const ExperimentSpec& spec) {
    spec.validate();
    RngStream stream(spec.scheme.seed, 0);
    StateVector state = make_input(spec.input_kind, spec.scheme.rows, stream);

    for (std::size_t k = 0; k < spec.burnin_steps; ++k) {
        column_step(state, sample_outcome(spec.scheme, stream), spec.scheme.phi);
    }

    BurninResult result;
    result.first_recorded_step = spec.burnin_steps + 1;
    result.entropies.reserve(spec.sample_steps);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < spec.sample_steps; ++k) {
        column_step(state, sample_outcome(spec.scheme, stream), spec.scheme.phi);
        const double s = vn_entropy_bits(state, spec.scheme.partition_size);
        result.entropies.push_back(s);
        sum += s;
        sum_sq += s * s;
    }
    result.mean = sum / static_cast<double>(spec.sample_steps);
    result.std_error = sample_std_error(sum, sum_sq, spec.sample_steps);
    return result;
}

EntanglementHistogram entropy_histogram_experiment(const ExperimentSpec& spec) {
    spec.validate();
    const double hi = static_cast<double>(spec.scheme.partition_size);

    if (spec.mode == SamplingMode::SingleTrajectory) {
        const BurninResult series = burnin_mean_entropy(spec);
        return build_histogram(series.entropies, spec.bins, 0.0, hi);
    }

    // One endpoint sample per trajectory; slot per trajectory id keeps the
    // result independent of scheduling.
    std::vector<double> samples(spec.trajectories);
    parallel_for_chunks(spec.trajectories, chunk_size_for(spec.trajectories), spec.threads,
                        [&](std::size_t begin, std::size_t end, std::size_t) {
                            for (std::size_t t = begin; t < end; ++t) {
                                RngStream stream(spec.scheme.seed, t);
                                StateVector state =
                                    make_input(spec.input_kind, spec.scheme.rows, stream);
                                for (std::size_t k = 0; k < spec.burnin_steps; ++k) {
                                    column_step(state, sample_outcome(spec.scheme, stream),
                                                spec.scheme.phi);
                                }
                                samples[t] = vn_entropy_bits(state, spec.scheme.partition_size);
                            }
                        });
    return build_histogram(samples, spec.bins, 0.0, hi);
}

ConvergenceCurve convergence_curve(std::size_t n, std::size_t n_a, double phi, std::size_t trials,
                                   std::size_t max_depth, std::uint64_t seed, InputKind input_kind,
                                   std::size_t threads) {
    SchemeConfig config;
    config.rows = n;
    config.phi = phi;
    config.partition_size = n_a;
    config.seed = seed;
    config.validate();
    if (trials < 1 || max_depth < 1) {
        throw std::invalid_argument("convergence_curve: need trials >= 1 and max_depth >= 1");
    }

    const std::size_t chunk = chunk_size_for(trials);
    const std::size_t num_chunks = (trials + chunk - 1) / chunk;
    std::vector<std::vector<double>> chunk_sums(num_chunks);
    std::vector<std::vector<double>> chunk_sq(num_chunks);

    parallel_for_chunks(trials, chunk, threads,
                        [&](std::size_t begin, std::size_t end, std::size_t c) {
                            std::vector<double>& sums = chunk_sums[c];
                            std::vector<double>& sq = chunk_sq[c];
                            sums.assign(max_depth, 0.0);
                            sq.assign(max_depth, 0.0);
                            for (std::size_t t = begin; t < end; ++t) {
                                RngStream stream(seed, t);
                                StateVector state = make_input(input_kind, n, stream);
                                for (std::size_t d = 0; d < max_depth; ++d) {
                                    column_step(state, sample_outcome(config, stream), phi);
                                    const double s = vn_entropy_bits(state, n_a);
                                    sums[d] += s;
                                    sq[d] += s * s;
                                }
                            }
                        });

    ConvergenceCurve curve;
    curve.trials = trials;
    curve.mean_entropy.resize(max_depth);
    curve.std_error.resize(max_depth);
    for (std::size_t d = 0; d < max_depth; ++d) {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (std::size_t c = 0; c < num_chunks; ++c) {
            sum += chunk_sums[c][d];
            sum_sq += chunk_sq[c][d];
        }
        curve.mean_entropy[d] = sum / static_cast<double>(trials);
        curve.std_error[d] = sample_std_error(sum, sum_sq, trials);
    }
    return curve;
}

std::int64_t find_t_epsilon(const ConvergenceCurve& curve, double target, double epsilon,
                            std::size_t window) {
    if (window < 1) {
        throw std::invalid_argument("find_t_epsilon: window must be positive");
    }
    const std::size_t depth = curve.mean_entropy.size();
    if (depth < window) {
        return -1;
    }
    std::size_t run = 0;
    for (std::size_t d = 0; d < depth; ++d) {
        if (std::abs(curve.mean_entropy[d] - target) < epsilon) {
            ++run;
            if (run == window) {
                return static_cast<std::int64_t>(d + 2 - window);  // 1-based window start
            }
        } else {
            run = 0;
        }
    }
    return -1;
}

ConvergenceResult convergence_time(std::size_t n, std::size_t n_a, double phi, double epsilon,
                                   std::size_t trials, std::size_t window, std::size_t max_depth,
                                   std::uint64_t seed, InputKind input_kind, std::size_t threads) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("convergence_time: epsilon must be positive");
    }
    const ConvergenceCurve curve =
        convergence_curve(n, n_a, phi, trials, max_depth, seed, input_kind, threads);
    const double target = page_average(n_a, n - n_a);

    ConvergenceResult result;
    result.n = n;
    result.n_a = n_a;
    result.phi = phi;
    result.epsilon = epsilon;
    result.window = window;
    result.trials = trials;
    result.t_epsilon = find_t_epsilon(curve, target, epsilon, window);
    return result;
}

std::vector<PhiScanRow> phi_scan(std::size_t n, std::size_t n_a, std::span<const double> phis,
                                 std::size_t depth, std::size_t trials, std::uint64_t seed,
                                 InputKind input_kind, std::size_t threads) {
    if (phis.empty()) {
        throw std::invalid_argument("phi_scan: need at least one phi");
    }
    const double target = page_average(n_a, n - n_a);

    std::vector<PhiScanRow> rows;
    rows.reserve(phis.size());
    for (double phi : phis) {
        SchemeConfig config;
        config.rows = n;
        config.phi = phi;
        config.partition_size = n_a;
        config.seed = seed;
        config.validate();

        const std::size_t chunk = chunk_size_for(trials);
        const std::size_t num_chunks = (trials + chunk - 1) / chunk;
        std::vector<double> chunk_sums(num_chunks, 0.0);
        parallel_for_chunks(trials, chunk, threads,
                            [&](std::size_t begin, std::size_t end, std::size_t c) {
                                double sum = 0.0;
                                for (std::size_t t = begin; t < end; ++t) {
                                    RngStream stream(seed, t);
                                    StateVector state = make_input(input_kind, n, stream);
                                    for (std::size_t d = 0; d < depth; ++d) {
                                        column_step(state, sample_outcome(config, stream), phi);
                                    }
                                    sum += vn_entropy_bits(state, n_a);
                                }
                                chunk_sums[c] = sum;
                            });

        double sum = 0.0;
        for (double s : chunk_sums) {
            sum += s;
        }
        PhiScanRow row;
        row.phi = phi;
        row.depth = depth;
        row.trials = trials;
        row.mean_entropy = sum / static_cast<double>(trials);
        row.abs_deviation_from_page = std::abs(row.mean_entropy - target);
        rows.push_back(row);
    }
    return rows;
}

std::string format_g12(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void write_burnin_csv(std::ostream& out, const BurninResult& result) {
    out << "step,entropy_bits\n";
    for (std::size_t i = 0; i < result.entropies.size(); ++i) {
        out << result.first_recorded_step + i << ',' << format_g12(result.entropies[i]) << '\n';
    }
}

void write_histogram_csv(std::ostream& out, const EntanglementHistogram& hist) {
    out << "bin_lo,bin_hi,density\n";
    for (std::size_t b = 0; b < hist.bins(); ++b) {
        out << format_g12(hist.bin_edges[b]) << ',' << format_g12(hist.bin_edges[b + 1]) << ','
            << format_g12(hist.densities[b]) << '\n';
    }
}

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceResult> results) {
    out << "n,n_a,phi,epsilon,window,trials,t_epsilon\n";
    for (const ConvergenceResult& r : results) {
        out << r.n << ',' << r.n_a << ',' << format_g12(r.phi) << ',' << format_g12(r.epsilon)
            << ',' << r.window << ',' << r.trials << ',' << r.t_epsilon << '\n';
    }
}

void write_phiscan_csv(std::ostream& out, std::span<const PhiScanRow> rows) {
    out << "phi,depth,trials,mean_entropy,abs_deviation_from_page\n";
    for (const PhiScanRow& r : rows) {
        out << format_g12(r.phi) << ',' << r.depth << ',' << r.trials << ','
            << format_g12(r.mean_entropy) << ',' << format_g12(r.abs_deviation_from_page) << '\n';
    }
}

void write_outcome_csv(std::ostream& out, const RunLog& log) {
    out << "step,outcomes\n";
    for (std::size_t k = 0; k < log.outcomes.size(); ++k) {
        out << k + 1 << ',';
        for (std::uint8_t bit : log.outcomes[k].bits) {
            out << static_cast<char>('0' + bit);
        }
        out << '\n';
    }
}

}  // namespace wgsrand
