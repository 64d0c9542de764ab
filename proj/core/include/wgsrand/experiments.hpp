#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "wgsrand/entanglement.hpp"
#include "wgsrand/scheme.hpp"

namespace wgsrand {

enum class InputKind { HaarRandom, AllZeros, AllPlus };
enum class SamplingMode { SingleTrajectory, IndependentTrajectories };

/// Initial state for one trajectory. Haar-random inputs draw from the
/// trajectory's stream before any outcome sampling; fixed inputs leave the
/// stream untouched.
StateVector make_input(InputKind kind, std::size_t n, RngStream& stream);

/// Monte Carlo protocol parameters. Trajectory t of root seed s always uses
/// RngStream(s, t), so growing `trajectories` extends a run without
/// reshuffling earlier trajectories.
struct ExperimentSpec {
    SchemeConfig scheme;
    std::size_t burnin_steps = 10'000;
    std::size_t sample_steps = 10'000;
    std::size_t trajectories = 10'000;
    std::size_t bins = 500;
    double epsilon = 0.01;
    std::size_t window = 10;
    InputKind input_kind = InputKind::HaarRandom;
    SamplingMode mode = SamplingMode::SingleTrajectory;
    std::size_t threads = 0;  // 0 = hardware concurrency

    void validate() const;
};

struct BurninResult {
    /// One entropy sample per post-burn-in step; entropies[i] was recorded
    /// after applied step first_recorded_step + i.
    std::vector<double> entropies;
    std::size_t first_recorded_step = 0;
    double mean = 0.0;
    double std_error = 0.0;
};

/// Single trajectory: burnin_steps column steps without recording, then
/// sample_steps further steps recording the entropy after each.
BurninResult burnin_mean_entropy(const ExperimentSpec& spec);

/// Entropy histogram over [0, N_A]. SingleTrajectory mode records one
/// sample per step after burn-in (spec.sample_steps samples);
/// IndependentTrajectories mode records one endpoint sample per trajectory
/// after a per-trajectory burn-in (spec.trajectories samples).
EntanglementHistogram entropy_histogram_experiment(const ExperimentSpec& spec);

/// Trial-averaged entropy after each applied step 1..max_depth.
struct ConvergenceCurve {
    std::vector<double> mean_entropy;
    std::vector<double> std_error;
    std::size_t trials = 0;
};

ConvergenceCurve convergence_curve(std::size_t n, std::size_t n_a, double phi, std::size_t trials,
                                   std::size_t max_depth, std::uint64_t seed,
                                   InputKind input_kind = InputKind::AllPlus,
                                   std::size_t threads = 0);

/// Smallest 1-based depth t such that |mean_entropy[t'] - target| < epsilon
/// for all t' in [t, t + window - 1]; -1 if no such window fits.
std::int64_t find_t_epsilon(const ConvergenceCurve& curve, double target, double epsilon,
                            std::size_t window);

struct ConvergenceResult {
    std::size_t n = 0;
    std::size_t n_a = 0;
    double phi = 0.0;
    double epsilon = 0.0;
    std::size_t window = 0;
    std::size_t trials = 0;
    std::int64_t t_epsilon = -1;  // -1 = not reached within max_depth
};

/// Depth at which the trial-averaged entropy agrees with page_average to
/// accuracy epsilon, sustained over `window` consecutive depths. Starts
/// every trajectory from a fixed product input by default; a Haar-random
/// input makes the question trivial since its ensemble mean is already the
/// Page value.
ConvergenceResult convergence_time(std::size_t n, std::size_t n_a, double phi, double epsilon,
                                   std::size_t trials, std::size_t window, std::size_t max_depth,
                                   std::uint64_t seed, InputKind input_kind = InputKind::AllPlus,
                                   std::size_t threads = 0);

struct PhiScanRow {
    double phi = 0.0;
    std::size_t depth = 0;
    std::size_t trials = 0;
    double mean_entropy = 0.0;
    double abs_deviation_from_page = 0.0;
};

/// Mean endpoint entropy at a fixed depth for each phi, with its absolute
/// deviation from the Page average; a proxy for the convergence rate.
std::vector<PhiScanRow> phi_scan(std::size_t n, std::size_t n_a, std::span<const double> phis,
                                 std::size_t depth, std::size_t trials, std::uint64_t seed,
                                 InputKind input_kind = InputKind::AllPlus,
                                 std::size_t threads = 0);

// CSV emission. All floating-point fields are printed with 12 significant
// digits, rows end in a line feed, and each writer emits a header row.
void write_burnin_csv(std::ostream& out, const BurninResult& result);
void write_histogram_csv(std::ostream& out, const EntanglementHistogram& hist);
void write_convergence_csv(std::ostream& out, std::span<const ConvergenceResult> results);
void write_phiscan_csv(std::ostream& out, std::span<const PhiScanRow> rows);
void write_outcome_csv(std::ostream& out, const RunLog& log);

/// %.12g
std::string format_g12(double value);

}  // namespace wgsrand
