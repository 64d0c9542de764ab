// Command-line front end: every experiment and analytic reference in the
// library, with explicit seeding and CSV output.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wgsrand/angle.hpp"
#include "wgsrand/entanglement.hpp"
#include "wgsrand/experiments.hpp"
#include "wgsrand/scheme.hpp"

namespace {

using namespace wgsrand;

// Computed output is serialized fully before anything touches the
// destination, so a failed run never leaves a partial CSV behind.
void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload << std::flush;
        return;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    file << payload << std::flush;
    if (!file.good()) {
        file.close();
        std::error_code ec;
        std::filesystem::remove(out_path, ec);
        throw std::runtime_error("failed writing output file: " + out_path);
    }
}

InputKind parse_input_kind(const std::string& text) {
    if (text == "haar") {
        return InputKind::HaarRandom;
    }
    if (text == "zeros") {
        return InputKind::AllZeros;
    }
    return InputKind::AllPlus;
}

struct RunFlags {
    std::size_t n = 2;
    std::size_t length = 10;
    std::string phi = "5pi/8";
    std::uint64_t seed = 0;
    std::string input = "haar";
    std::size_t threads = 0;
    std::string out;
};

struct BurninFlags {
    std::size_t n = 6;
    std::size_t n_a = 1;
    std::string phi = "5pi/8";
    std::uint64_t seed = 0;
    std::size_t burnin = 10'000;
    std::size_t samples = 10'000;
    std::string input = "haar";
    std::size_t threads = 0;
    std::string out;
};

struct HistogramFlags {
    std::size_t n = 6;
    std::size_t n_a = 3;
    std::string phi = "5pi/8";
    std::uint64_t seed = 0;
    std::size_t burnin = 10'000;
    std::size_t samples = 10'000;
    std::size_t trials = 10'000;
    std::size_t bins = 500;
    std::string mode = "trajectory";
    std::string input = "haar";
    std::size_t threads = 0;
    std::string out;
};

struct ConvergeFlags {
    std::size_t n = 4;
    std::size_t n_a = 1;
    std::string phi = "5pi/8";
    double epsilon = 0.01;
    std::size_t trials = 10'000;
    std::size_t window = 10;
    std::size_t max_depth = 400;
    std::uint64_t seed = 0;
    std::string input = "plus";
    std::size_t threads = 0;
    std::string out;
};

struct PhiScanFlags {
    std::size_t n = 4;
    std::size_t n_a = 1;
    std::vector<std::string> phis;
    std::size_t length = 50;
    std::size_t trials = 2'000;
    std::uint64_t seed = 0;
    std::string input = "plus";
    std::size_t threads = 0;
    std::string out;
};

struct PageFlags {
    std::size_t n_a = 1;
    std::size_t n_b = 1;
    std::string out;
};

struct StabPmfFlags {
    std::size_t n = 2;
    std::size_t n_a = 1;
    std::string out;
};

struct OracleFlags {
    std::size_t n = 3;
    std::size_t trials = 100;
    std::string phi = "5pi/8";
    std::uint64_t seed = 0;
};

void add_input_option(CLI::App* cmd, std::string& target) {
    cmd->add_option("--input", target, "Input state: haar, zeros or plus")
        ->check(CLI::IsMember({"haar", "zeros", "plus"}))
        ->capture_default_str();
}

int run_oracle_check(const OracleFlags& flags) {
    const double phi = parse_angle(flags.phi);
    std::size_t passed = 0;
    std::size_t total = 0;
    for (std::size_t n = 1; n <= flags.n; ++n) {
        std::size_t fidelity_ok = 0;
        std::size_t prob_ok = 0;
        RngStream stream(flags.seed, n);
        for (std::size_t t = 0; t < flags.trials; ++t) {
            const StateVector input = haar_sample(n, stream);
            const OracleResult oracle = mbqc_column_oracle(input, phi, stream);

            StateVector replay = input;
            column_step(replay, oracle.outcome, phi);
            if (replay.overlap(oracle.column_state) >= 1.0 - 1e-10) {
                ++fidelity_ok;
            }
            bool probs_exact = true;
            for (double p : oracle.plus_probabilities) {
                probs_exact = probs_exact && std::abs(p - 0.5) <= 1e-10;
            }
            if (probs_exact) {
                ++prob_ok;
            }
        }
        std::cout << "oracle-check: n=" << n << " trials=" << flags.trials << " fidelity "
                  << fidelity_ok << "/" << flags.trials << " outcome-prob " << prob_ok << "/"
                  << flags.trials << "\n";
        passed += fidelity_ok + prob_ok;
        total += 2 * flags.trials;
    }
    const bool ok = passed == total;
    std::cout << "oracle-check: " << (ok ? "PASS" : "FAIL") << " (" << passed << "/" << total
              << ")" << std::endl;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random quantum circuits by fixed-basis measurements on weighted graph states"};
    app.require_subcommand(1);

    RunFlags run_flags;
    CLI::App* cmd_run = app.add_subcommand("run", "Run one circuit and emit its outcome log");
    cmd_run->add_option("--n", run_flags.n, "Number of rows (input qubits)")->capture_default_str();
    cmd_run->add_option("--length", run_flags.length, "Circuit depth in column steps")
        ->capture_default_str();
    cmd_run->add_option("--phi", run_flags.phi, "Vertical angle; accepts pi forms like 5pi/8")
        ->capture_default_str();
    cmd_run->add_option("--seed", run_flags.seed, "Root RNG seed")->required();
    add_input_option(cmd_run, run_flags.input);
    cmd_run->add_option("--threads", run_flags.threads,
                        "Worker thread cap (single trajectory; accepted for uniformity)")
        ->capture_default_str();
    cmd_run->add_option("--out", run_flags.out, "Output file (default: stdout)");

    BurninFlags burnin_flags;
    CLI::App* cmd_burnin =
        app.add_subcommand("burnin", "Per-step entropy series after burn-in, single trajectory");
    cmd_burnin->add_option("--n", burnin_flags.n, "Number of rows")->capture_default_str();
    cmd_burnin->add_option("--na", burnin_flags.n_a, "Partition size N_A (rows 1..N_A)")
        ->capture_default_str();
    cmd_burnin->add_option("--phi", burnin_flags.phi, "Vertical angle")->capture_default_str();
    cmd_burnin->add_option("--seed", burnin_flags.seed, "Root RNG seed")->required();
    cmd_burnin->add_option("--burnin", burnin_flags.burnin, "Burn-in steps")->capture_default_str();
    cmd_burnin->add_option("--samples", burnin_flags.samples, "Recorded steps after burn-in")
        ->capture_default_str();
    add_input_option(cmd_burnin, burnin_flags.input);
    cmd_burnin->add_option("--threads", burnin_flags.threads, "Worker thread cap (0 = hardware)")
        ->capture_default_str();
    cmd_burnin->add_option("--out", burnin_flags.out, "Output file (default: stdout)");

    HistogramFlags hist_flags;
    CLI::App* cmd_hist = app.add_subcommand("histogram", "Entropy histogram over [0, N_A]");
    cmd_hist->add_option("--n", hist_flags.n, "Number of rows")->capture_default_str();
    cmd_hist->add_option("--na", hist_flags.n_a, "Partition size N_A")->capture_default_str();
    cmd_hist->add_option("--phi", hist_flags.phi, "Vertical angle")->capture_default_str();
    cmd_hist->add_option("--seed", hist_flags.seed, "Root RNG seed")->required();
    cmd_hist->add_option("--burnin", hist_flags.burnin, "Burn-in steps")->capture_default_str();
    cmd_hist->add_option("--samples", hist_flags.samples, "Samples in trajectory mode")
        ->capture_default_str();
    cmd_hist->add_option("--trials", hist_flags.trials, "Trajectories in independent mode")
        ->capture_default_str();
    cmd_hist->add_option("--bins", hist_flags.bins, "Histogram bins")->capture_default_str();
    cmd_hist->add_option("--mode", hist_flags.mode, "Sampling mode: trajectory or independent")
        ->check(CLI::IsMember({"trajectory", "independent"}))
        ->capture_default_str();
    add_input_option(cmd_hist, hist_flags.input);
    cmd_hist->add_option("--threads", hist_flags.threads, "Worker thread cap (0 = hardware)")
        ->capture_default_str();
    cmd_hist->add_option("--out", hist_flags.out, "Output file (default: stdout)");

    ConvergeFlags conv_flags;
    CLI::App* cmd_conv =
        app.add_subcommand("converge", "Depth where the mean entropy reaches the Page value");
    cmd_conv->add_option("--n", conv_flags.n, "Number of rows")->capture_default_str();
    cmd_conv->add_option("--na", conv_flags.n_a, "Partition size N_A")->capture_default_str();
    cmd_conv->add_option("--phi", conv_flags.phi, "Vertical angle")->capture_default_str();
    cmd_conv->add_option("--epsilon", conv_flags.epsilon, "Accuracy epsilon")
        ->capture_default_str();
    cmd_conv->add_option("--trials", conv_flags.trials, "Trajectories")->capture_default_str();
    cmd_conv->add_option("--window", conv_flags.window, "Consecutive depths required within epsilon")
        ->capture_default_str();
    cmd_conv->add_option("--max-depth", conv_flags.max_depth, "Search depth bound")
        ->capture_default_str();
    cmd_conv->add_option("--seed", conv_flags.seed, "Root RNG seed")->required();
    add_input_option(cmd_conv, conv_flags.input);
    cmd_conv->add_option("--threads", conv_flags.threads, "Worker thread cap (0 = hardware)")
        ->capture_default_str();
    cmd_conv->add_option("--out", conv_flags.out, "Output file (default: stdout)");

    PhiScanFlags scan_flags;
    CLI::App* cmd_scan =
        app.add_subcommand("phiscan", "Mean-entropy deviation from Page per phi at fixed depth");
    cmd_scan->add_option("--n", scan_flags.n, "Number of rows")->capture_default_str();
    cmd_scan->add_option("--na", scan_flags.n_a, "Partition size N_A")->capture_default_str();
    cmd_scan->add_option("--phis", scan_flags.phis, "Angles to scan, comma separated")
        ->delimiter(',')
        ->required();
    cmd_scan->add_option("--length", scan_flags.length, "Circuit depth per trajectory")
        ->capture_default_str();
    cmd_scan->add_option("--trials", scan_flags.trials, "Trajectories per phi")
        ->capture_default_str();
    cmd_scan->add_option("--seed", scan_flags.seed, "Root RNG seed")->required();
    add_input_option(cmd_scan, scan_flags.input);
    cmd_scan->add_option("--threads", scan_flags.threads, "Worker thread cap (0 = hardware)")
        ->capture_default_str();
    cmd_scan->add_option("--out", scan_flags.out, "Output file (default: stdout)");

    PageFlags page_flags;
    CLI::App* cmd_page = app.add_subcommand("page", "Haar-average entanglement entropy in bits");
    cmd_page->add_option("--na", page_flags.n_a, "Smaller partition size")->required();
    cmd_page->add_option("--nb", page_flags.n_b, "Larger partition size")->required();
    cmd_page->add_option("--out", page_flags.out, "Output file (default: stdout)");

    StabPmfFlags stab_flags;
    CLI::App* cmd_stab =
        app.add_subcommand("stabpmf", "Entanglement distribution of random stabilizer states");
    cmd_stab->add_option("--n", stab_flags.n, "Total qubits")->required();
    cmd_stab->add_option("--na", stab_flags.n_a, "Partition size")->required();
    cmd_stab->add_option("--out", stab_flags.out, "Output file (default: stdout)");

    OracleFlags oracle_flags;
    CLI::App* cmd_oracle = app.add_subcommand(
        "oracle-check", "Verify uniform outcome sampling against the measurement-based oracle");
    cmd_oracle->add_option("--n", oracle_flags.n, "Largest register size to check")
        ->capture_default_str();
    cmd_oracle->add_option("--trials", oracle_flags.trials, "Random inputs per register size")
        ->capture_default_str();
    cmd_oracle->add_option("--phi", oracle_flags.phi, "Vertical angle")->capture_default_str();
    cmd_oracle->add_option("--seed", oracle_flags.seed, "Root RNG seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "wgsrand: " << e.what() << std::endl;
        return 2;
    }

    try {
        std::ostringstream csv;
        std::string out_path;

        if (cmd_run->parsed()) {
            SchemeConfig config{run_flags.n, run_flags.length, parse_angle(run_flags.phi), 1,
                                run_flags.seed};
            config.validate();
            RngStream stream(config.seed, 0);
            StateVector state = make_input(parse_input_kind(run_flags.input), config.rows, stream);
            const RunLog log = run_circuit(state, config, stream);
            write_outcome_csv(csv, log);
            std::cerr << "run: " << config.length << " steps, "
                      << two_qubit_gate_count(config.rows, config.length)
                      << " two-qubit resource gates" << std::endl;
            out_path = run_flags.out;
        } else if (cmd_burnin->parsed()) {
            ExperimentSpec spec;
            spec.scheme = SchemeConfig{burnin_flags.n, 0, parse_angle(burnin_flags.phi),
                                       burnin_flags.n_a, burnin_flags.seed};
            spec.burnin_steps = burnin_flags.burnin;
            spec.sample_steps = burnin_flags.samples;
            spec.input_kind = parse_input_kind(burnin_flags.input);
            spec.threads = burnin_flags.threads;
            spec.validate();
            const BurninResult result = burnin_mean_entropy(spec);
            write_burnin_csv(csv, result);
            std::cerr << "burnin: mean " << format_g12(result.mean) << " +- "
                      << format_g12(result.std_error) << " bits" << std::endl;
            out_path = burnin_flags.out;
        } else if (cmd_hist->parsed()) {
            ExperimentSpec spec;
            spec.scheme = SchemeConfig{hist_flags.n, 0, parse_angle(hist_flags.phi), hist_flags.n_a,
                                       hist_flags.seed};
            spec.burnin_steps = hist_flags.burnin;
            spec.sample_steps = hist_flags.samples;
            spec.trajectories = hist_flags.trials;
            spec.bins = hist_flags.bins;
            spec.input_kind = parse_input_kind(hist_flags.input);
            spec.mode = hist_flags.mode == "independent" ? SamplingMode::IndependentTrajectories
                                                         : SamplingMode::SingleTrajectory;
            spec.threads = hist_flags.threads;
            spec.validate();
            const EntanglementHistogram hist = entropy_histogram_experiment(spec);
            write_histogram_csv(csv, hist);
            if (hist.overflow_count > 0) {
                std::cerr << "histogram: " << hist.overflow_count
                          << " samples clamped to the boundary bins" << std::endl;
            }
            out_path = hist_flags.out;
        } else if (cmd_conv->parsed()) {
            const ConvergenceResult result = convergence_time(
                conv_flags.n, conv_flags.n_a, parse_angle(conv_flags.phi), conv_flags.epsilon,
                conv_flags.trials, conv_flags.window, conv_flags.max_depth, conv_flags.seed,
                parse_input_kind(conv_flags.input), conv_flags.threads);
            write_convergence_csv(csv, {&result, 1});
            out_path = conv_flags.out;
        } else if (cmd_scan->parsed()) {
            std::vector<double> phis;
            for (const std::string& text : scan_flags.phis) {
                phis.push_back(parse_angle(text));
            }
            const std::vector<PhiScanRow> rows =
                phi_scan(scan_flags.n, scan_flags.n_a, phis, scan_flags.length, scan_flags.trials,
                         scan_flags.seed, parse_input_kind(scan_flags.input), scan_flags.threads);
            write_phiscan_csv(csv, rows);
            out_path = scan_flags.out;
        } else if (cmd_page->parsed()) {
            csv << format_g12(page_average(page_flags.n_a, page_flags.n_b)) << '\n';
            out_path = page_flags.out;
        } else if (cmd_stab->parsed()) {
            const std::vector<double> pmf = stabilizer_entropy_pmf(stab_flags.n, stab_flags.n_a);
            csv << "s,probability\n";
            for (std::size_t s = 0; s < pmf.size(); ++s) {
                csv << s << ',' << format_g12(pmf[s]) << '\n';
            }
            out_path = stab_flags.out;
        } else if (cmd_oracle->parsed()) {
            return run_oracle_check(oracle_flags);
        }

        write_output(csv.str(), out_path);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "wgsrand: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "wgsrand: " << e.what() << std::endl;
        return 1;
    }
}
