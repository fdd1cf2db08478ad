// meissner-lab: stability charts and vacuum observables of two
// periodically-quenched coupled oscillators.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlab/hill.hpp"
#include "mlab/render.hpp"
#include "mlab/selftest.hpp"
#include "mlab/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitIo = 3;

void add_axis_options(CLI::App* cmd, mlab::AxisSpec& axis, const std::string& label) {
    cmd->add_option("--" + label, axis.name,
                    "swept parameter: epsilon, j0, omega0_sq or omega0")
        ->required();
    cmd->add_option("--" + label + "-min", axis.min, "axis lower bound")->required();
    cmd->add_option("--" + label + "-max", axis.max, "axis upper bound")->required();
    cmd->add_option("--" + label + "-count", axis.count, "grid points on this axis")
        ->required();
}

void add_fixed_options(CLI::App* cmd, mlab::SweepConfig& cfg) {
    cmd->add_option("--epsilon", cfg.fixed_epsilon, "fixed quench amplitude");
    cmd->add_option("--j0", cfg.fixed_j0, "fixed coupling amplitude");
    cmd->add_option("--omega0-sq", cfg.fixed_omega0_sq, "fixed squared frequency");
}

void add_log_base_option(CLI::App* cmd, mlab::LogBase& base) {
    cmd->add_option_function<std::string>(
           "--log-base",
           [&base](const std::string& v) {
               if (v == "natural") base = mlab::LogBase::natural;
               else if (v == "two") base = mlab::LogBase::two;
               else throw CLI::ValidationError("--log-base must be 'natural' or 'two'");
           },
           "logarithm base for E_N: natural (default) or two");
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitIo;
    }
    out << content;
    return out ? kExitOk : kExitIo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Meissner-quenched coupled oscillators: stability maps, "
                 "vacuum excitations and entanglement"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a TOML file");

    mlab::SweepConfig cfg;
    mlab::OscillatorParams point;
    double point_t = 0.0;
    std::string output, input, scalar_column;

    CLI::App* bound = app.add_subcommand("boundness-map",
                                         "grid map of the admissible (bounded) region");
    add_axis_options(bound, cfg.axis1, "axis1");
    add_axis_options(bound, cfg.axis2, "axis2");
    add_fixed_options(bound, cfg);
    bound->add_option("-o,--output", output, "output CSV path (default stdout)");

    CLI::App* stab = app.add_subcommand("stability-map",
                                        "grid map of the Floquet stability classification");
    add_axis_options(stab, cfg.axis1, "axis1");
    add_axis_options(stab, cfg.axis2, "axis2");
    add_fixed_options(stab, cfg);
    stab->add_option("-o,--output", output, "output CSV path (default stdout)");

    CLI::App* dyn = app.add_subcommand("dynamics",
                                       "time series of dilatations and vacuum observables");
    dyn->add_option("--epsilon", point.epsilon, "quench amplitude")->required();
    dyn->add_option("--j0", point.j0, "coupling amplitude")->required();
    dyn->add_option("--omega0-sq", point.omega0_sq, "squared parametric frequency")
        ->required();
    dyn->add_option("--horizon", cfg.horizon, "time horizon (default pi)");
    dyn->add_option("--samples", cfg.samples, "sample count (default 1000)");
    add_log_base_option(dyn, cfg.log_base);
    dyn->add_option("-o,--output", output, "output CSV path (default stdout)");

    CLI::App* pt = app.add_subcommand("point", "JSON report for a single (point, t)");
    pt->add_option("--epsilon", point.epsilon, "quench amplitude")->required();
    pt->add_option("--j0", point.j0, "coupling amplitude")->required();
    pt->add_option("--omega0-sq", point.omega0_sq, "squared parametric frequency")
        ->required();
    pt->add_option("-t,--time", point_t, "evaluation time")->required();
    add_log_base_option(pt, cfg.log_base);
    pt->add_option("-o,--output", output, "output path (default stdout)");

    CLI::App* self = app.add_subcommand("selftest", "run the oracle-equivalence suites");

    CLI::App* render = app.add_subcommand("render", "render a grid CSV into an SVG heatmap");
    render->add_option("-i,--input", input, "grid CSV produced by a map command")
        ->required();
    render->add_option("--scalar", scalar_column,
                       "render a linear ramp over the named column");
    render->add_option("-o,--output", output, "output SVG path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) {
            const auto cells = mlab::boundness_grid(cfg);
            std::ostringstream os;
            mlab::write_boundness_csv(os, cfg, cells);
            return write_output(output, os.str());
        }
        if (stab->parsed()) {
            const auto cells = mlab::stability_grid(cfg);
            std::ostringstream os;
            mlab::write_stability_csv(os, cfg, cells);
            return write_output(output, os.str());
        }
        if (dyn->parsed()) {
            const auto rows = mlab::dynamics_series(point, cfg.horizon, cfg.samples,
                                                    cfg.log_base);
            std::ostringstream os;
            mlab::write_dynamics_csv(os, rows);
            return write_output(output, os.str());
        }
        if (pt->parsed()) {
            if (point_t < 0.0) throw mlab::ConfigError("time: must be >= 0");
            const mlab::ObservableRecord r =
                mlab::observable_record(point, point_t, cfg.log_base);
            const mlab::StabilityResult st = mlab::stability(point);
            nlohmann::ordered_json j;
            j["t"] = r.t;
            j["h1"] = r.h1;
            j["h2"] = r.h2;
            j["nu1"] = r.nu1;
            j["nu2"] = r.nu2;
            j["N1"] = r.n1;
            j["N2"] = r.n2;
            j["M12"] = r.m12;
            j["mu"] = r.mu;
            j["lambda_min"] = r.lambda_min;
            j["E_N"] = r.e_n;
            j["S"] = st.s;
            j["Lambda"] = st.lambda;
            j["class"] = st.stable() ? "stable" : "unstable";
            return write_output(output, j.dump(2) + "\n");
        }
        if (self->parsed()) {
            bool all_ok = true;
            for (const mlab::SuiteResult& s : mlab::run_selftest()) {
                std::printf("%-42s max error %.3e  tolerance %.0e  %s\n",
                            s.name.c_str(), s.max_error, s.tolerance,
                            s.passed ? "PASS" : "FAIL");
                all_ok = all_ok && s.passed;
            }
            return all_ok ? kExitOk : kExitSelftest;
        }
        if (render->parsed()) {
            std::ifstream in(input, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot open '" << input << "'\n";
                return kExitIo;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            return write_output(output, mlab::render_heatmap(buf.str(), scalar_column));
        }
    } catch (const mlab::ForbiddenPointError& e) {
        std::cerr << "error: unbounded or forbidden parameters: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const mlab::ConfigError& e) {
        std::cerr << "error: invalid configuration: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const mlab::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const mlab::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSelftest;
    }
    return kExitOk;
}
