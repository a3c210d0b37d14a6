#include "zeno/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "zeno/array_models.hpp"
#include "zeno/fock.hpp"
#include "zeno/mcwf.hpp"
#include "zeno/optimizer.hpp"
#include "zeno/thermal.hpp"

namespace zeno {

namespace {

struct CommandInfo {
    Command command;
    const char* name;
    const char* description;
};

constexpr CommandInfo kCommands[] = {
    {Command::ideal, "ideal", "cos^(2N)(theta) for identical splitters: columns N,p1"},
    {Command::dispersion, "dispersion",
     "normally dispersed splitter angles: columns N,p1_mean,stderr,p1_ideal,p1_expected"},
    {Command::thermal, "thermal", "thermal noise at every b port: columns n,p1_exact,p1_approx,leaked"},
    {Command::mcwf, "mcwf", "quantum-jump ensemble with absorption: columns n,p1_mcwf,stderr,p1_bernoulli,p1_eq11"},
    {Command::trajectory, "trajectory", "one quantum-jump trajectory: columns n,p1"},
    {Command::critical, "critical",
     "optimal array length: columns gamma,n_real,n_int,p1_at_max,asymptotic_eq12,asymptotic_paper"},
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::uint64_t resolve_seed(const std::string& text) {
    if (text == "random") {
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    try {
        std::size_t used = 0;
        const auto v = std::stoull(text, &used, 10);
        if (used == text.size() && !text.empty() && text.front() != '-') return v;
    } catch (const std::exception&) {
    }
    throw UsageError("seed: expected an unsigned 64-bit integer or 'random', got '" + text + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("config: cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void require(bool ok, const std::string& key, const std::string& what) {
    if (!ok) throw UsageError(key + ": " + what);
}

int sweep_value(const std::optional<int>& v, int fallback) { return v.value_or(fallback); }

std::int64_t as_int(int v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::string_view command_name(Command c) {
    for (const auto& info : kCommands) {
        if (info.command == c) return info.name;
    }
    return "?";
}

std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const std::string content = trim(line);
        if (content.empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        std::string key = trim(std::string_view(content).substr(0, eq));
        std::string value = trim(std::string_view(content).substr(eq + 1));
        if (key.empty()) throw UsageError("config line " + std::to_string(line_no) + ": empty key");
        entries.emplace_back(std::move(key), std::move(value));
    }
    return entries;
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
    ExperimentConfig cfg;
    std::string seed_text = std::to_string(kDefaultSeed);
    std::string config_path;
    std::string output_path;
    std::optional<double> theta_value;

    CLI::App app{"Single-photon Zeno transmission through lossy beam-splitter arrays", "zeno"};
    app.require_subcommand(1, 1);

    for (const auto& info : kCommands) {
        auto* sub = app.add_subcommand(info.name, info.description);
        sub->add_option("--seed", seed_text, "master seed (unsigned integer or 'random')");
        sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--output", output_path, "CSV output path (default: stdout)");
        sub->add_option("--config", config_path, "flat key = value config file");

        switch (info.command) {
            case Command::ideal:
                sub->add_option("--n-min", cfg.n_min, "smallest N (default 1)");
                sub->add_option("--n-max", cfg.n_max, "largest N (default 100)");
                sub->add_option("--n-step", cfg.n_step, "N increment (default 1)");
                sub->add_option("--theta", theta_value, "fixed angle for every N (default pi/2N)");
                break;
            case Command::dispersion:
                sub->add_option("--n-min", cfg.n_min, "smallest N (default 10)");
                sub->add_option("--n-max", cfg.n_max, "largest N (default 1000)");
                sub->add_option("--n-step", cfg.n_step, "N increment (default 10)");
                sub->add_option("--sigma", cfg.sigma, "standard deviation of theta");
                sub->add_option("--samples", cfg.samples, "arrays sampled per N");
                break;
            case Command::thermal:
                sub->add_option("--beamsplitters", cfg.beamsplitters, "number of splitters N");
                sub->add_option("--theta", theta_value, "splitter angle (default pi/2N)");
                sub->add_option("--nbar", cfg.nbar, "mean thermal photon number");
                sub->add_option("--cutoff", cfg.cutoff, "maximum total photon number kept");
                sub->add_option("--ancilla-cutoff", cfg.ancilla_cutoff, "maximum thermal photons per port");
                sub->add_flag("--renormalize", cfg.renormalize, "renormalize the truncated thermal state");
                break;
            case Command::mcwf:
                sub->add_option("--beamsplitters", cfg.beamsplitters, "number of splitters N");
                sub->add_option("--theta", theta_value, "splitter angle (default pi/2N)");
                sub->add_option("--gamma", cfg.gamma, "absorption probability per splitter");
                sub->add_option("--trajectories", cfg.trajectories, "number of trajectories");
                break;
            case Command::trajectory:
                sub->add_option("--beamsplitters", cfg.beamsplitters, "number of splitters N");
                sub->add_option("--theta", theta_value, "splitter angle (default pi/2N)");
                sub->add_option("--gamma", cfg.gamma, "absorption probability per splitter");
                sub->add_option("--index", cfg.index, "trajectory index within the seeded ensemble");
                break;
            case Command::critical:
                sub->add_option("--gamma", cfg.gammas, "absorption coefficients (comma separated)")
                    ->delimiter(',');
                break;
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CLI::App* active = app.get_subcommands().front();
    for (const auto& info : kCommands) {
        if (active->get_name() == info.name) cfg.command = info.command;
    }

    if (!config_path.empty()) {
        for (const auto& [key, value] : parse_config_text(read_file(config_path))) {
            CLI::Option* opt = active->get_option_no_throw("--" + key);
            if (opt == nullptr || key == "config" || key == "help") {
                throw UsageError("config: unknown key '" + key + "' for command " + active->get_name());
            }
            if (opt->count() > 0) continue;  // command line wins
            try {
                opt->add_result(value);
                opt->run_callback();
            } catch (const CLI::Error& e) {
                throw UsageError(key + ": invalid value '" + value + "' (" + e.what() + ")");
            }
        }
    }

    cfg.seed = resolve_seed(seed_text);
    cfg.theta = theta_value;
    if (!output_path.empty()) cfg.output_path = output_path;
    validate(cfg);
    return cfg;
}

ExperimentConfig parse_config(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return parse_config(args);
}

void validate(const ExperimentConfig& c) {
    require(c.workers >= 1, "workers", "must be >= 1");
    if (c.theta) require(std::isfinite(*c.theta), "theta", "must be finite");

    switch (c.command) {
        case Command::ideal:
        case Command::dispersion: {
            const bool disp = c.command == Command::dispersion;
            const int lo = sweep_value(c.n_min, disp ? 10 : 1);
            const int hi = sweep_value(c.n_max, disp ? 1000 : 100);
            require(lo >= 1, "n-min", "must be >= 1");
            require(hi >= lo, "n-max", "must be >= n-min");
            require(sweep_value(c.n_step, disp ? 10 : 1) >= 1, "n-step", "must be >= 1");
            if (disp) {
                require(c.sigma >= 0.0 && std::isfinite(c.sigma), "sigma", "must be >= 0");
                require(c.samples >= 1, "samples", "must be >= 1");
            }
            break;
        }
        case Command::thermal:
            require(c.beamsplitters >= 1, "beamsplitters", "must be >= 1");
            require(c.nbar >= 0.0 && std::isfinite(c.nbar), "nbar", "must be >= 0");
            require(c.cutoff >= 1, "cutoff", "must be >= 1");
            require(c.ancilla_cutoff >= 0, "ancilla-cutoff", "must be >= 0");
            break;
        case Command::mcwf:
        case Command::trajectory: {
            require(c.beamsplitters >= 1, "beamsplitters", "must be >= 1");
            require(c.gamma >= 0.0 && std::isfinite(c.gamma), "gamma", "must be >= 0");
            if (c.command == Command::mcwf) require(c.trajectories >= 1, "trajectories", "must be >= 1");
            const double theta = c.theta.value_or(zeno_angle(c.beamsplitters));
            require(c.gamma + std::sin(theta) * std::sin(theta) <= 1.0, "gamma",
                    "gamma + sin^2(theta) must not exceed 1");
            break;
        }
        case Command::critical: {
            require(!c.gammas.empty(), "gamma", "at least one value required");
            const double gamma_max = critical_gamma(2.0);
            for (double g : c.gammas) {
                require(g > 0.0 && std::isfinite(g), "gamma", "must be > 0, got " + std::to_string(g));
                require(g <= gamma_max, "gamma",
                        "no optimum with N >= 2 for gamma above " + std::to_string(gamma_max));
            }
            break;
        }
    }
}

CsvTable run(const ExperimentConfig& c) {
    validate(c);
    switch (c.command) {
        case Command::ideal: {
            CsvTable t({"N", "p1"});
            const int hi = sweep_value(c.n_max, 100);
            const int step = sweep_value(c.n_step, 1);
            for (int n = sweep_value(c.n_min, 1); n <= hi; n += step) t.add_row({as_int(n), ideal_p1(n, c.theta)});
            return t;
        }
        case Command::dispersion: {
            CsvTable t({"N", "p1_mean", "stderr", "p1_ideal", "p1_expected"});
            const int hi = sweep_value(c.n_max, 1000);
            const int step = sweep_value(c.n_step, 10);
            for (int n = sweep_value(c.n_min, 10); n <= hi; n += step) {
                DispersionSpec spec{.n_splitters = n, .mean_theta = std::nullopt, .sigma = c.sigma,
                                    .n_samples = c.samples, .seed = c.seed, .workers = c.workers};
                const auto stats = dispersion_ensemble(spec);
                t.add_row({as_int(n), stats.mean(0), stats.standard_error(0), ideal_p1(n),
                           dispersion_expectation(n, c.sigma)});
            }
            return t;
        }
        case Command::thermal: {
            CsvTable t({"n", "p1_exact", "p1_approx", "leaked"});
            ThermalArraySpec spec{.n_splitters = c.beamsplitters, .theta = c.theta, .nbar = c.nbar,
                                  .cutoff = FockCutoff(c.cutoff), .ancilla_max = c.ancilla_cutoff,
                                  .renormalize_ancilla = c.renormalize};
            const double alpha = thermal_mixture(c.nbar, c.ancilla_cutoff, c.renormalize).probs[0];
            const auto ports = propagate_thermal_array(spec);
            for (std::size_t j = 0; j < ports.size(); ++j) {
                const int n = static_cast<int>(j) + 1;
                t.add_row({as_int(n), ports[j].probs[1], thermal_p1_approx(n, spec.resolved_theta(), alpha),
                           ports[j].leaked});
            }
            return t;
        }
        case Command::mcwf: {
            CsvTable t({"n", "p1_mcwf", "stderr", "p1_bernoulli", "p1_eq11"});
            McwfSpec spec{.n_splitters = c.beamsplitters, .gamma = c.gamma, .theta = c.theta,
                          .n_trajectories = c.trajectories, .seed = c.seed, .workers = c.workers};
            const auto stats = run_ensemble(spec);
            for (int n = 1; n <= c.beamsplitters; ++n) {
                const auto i = static_cast<std::size_t>(n - 1);
                t.add_row({as_int(n), stats.mean(i), stats.standard_error(i),
                           bernoulli_p1(n, c.gamma, spec.resolved_theta()),
                           analytic_p1_absorption(n, c.beamsplitters, c.gamma)});
            }
            return t;
        }
        case Command::trajectory: {
            CsvTable t({"n", "p1"});
            McwfSpec spec{.n_splitters = c.beamsplitters, .gamma = c.gamma, .theta = c.theta,
                          .n_trajectories = 1, .seed = c.seed, .workers = 1};
            const auto rec = run_trajectory(spec, c.index);
            for (std::size_t i = 0; i < rec.survival.size(); ++i) {
                t.add_row({static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(rec.survival[i])});
            }
            return t;
        }
        case Command::critical: {
            CsvTable t({"gamma", "n_real", "n_int", "p1_at_max", "asymptotic_eq12", "asymptotic_paper"});
            auto gammas = c.gammas;
            std::sort(gammas.begin(), gammas.end());
            for (double g : gammas) {
                const auto r = solve_critical_n(g);
                t.add_row({g, r.n_real, as_int(r.n_int), r.p1_at_max, r.asymptotic_estimate,
                           printed_asymptotic_critical_n(g)});
            }
            return t;
        }
    }
    throw std::logic_error("run: unhandled command");
}

}  // namespace zeno
