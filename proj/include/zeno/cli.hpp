#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zeno/csv.hpp"
#include "zeno/rng.hpp"

namespace zeno {

enum class Command { ideal, dispersion, thermal, mcwf, trajectory, critical };

std::string_view command_name(Command c);

/// Invalid or missing parameter. The message names the offending key.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was requested; what() holds the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One fully resolved experiment. Sweep bounds left unset take per-command
/// defaults in run().
struct ExperimentConfig {
    Command command = Command::ideal;

    int beamsplitters = 50;
    std::optional<double> theta;
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 1;
    std::optional<std::string> output_path;

    // ideal / dispersion sweeps over N
    std::optional<int> n_min;
    std::optional<int> n_max;
    std::optional<int> n_step;

    // dispersion
    double sigma = 0.01;
    int samples = 5000;

    // thermal
    double nbar = 0.01;
    int cutoff = 2;
    int ancilla_cutoff = 1;
    bool renormalize = false;

    // mcwf / trajectory
    double gamma = 0.001;
    int trajectories = 5000;
    std::uint64_t index = 0;

    // critical
    std::vector<double> gammas{0.0001, 0.0005, 0.001};
};

/// Flat `key = value` lines; `#` starts a comment. Keys are the long flag
/// names without the leading dashes.
std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text);

/// Parses argv. Values from --config fill in any flag not given on the
/// command line; unknown config keys are errors. Throws UsageError or
/// HelpRequested.
ExperimentConfig parse_config(int argc, const char* const* argv);
ExperimentConfig parse_config(const std::vector<std::string>& args);

/// Checks every parameter against the owning module's preconditions.
void validate(const ExperimentConfig& config);

CsvTable run(const ExperimentConfig& config);

}  // namespace zeno
