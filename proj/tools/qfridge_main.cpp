// qfridge — steady-state, sampling and performance-curve experiments for
// quantum absorption refrigerators

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qfridge/cli.hpp"

namespace {

using qfridge::cli::RunConfig;

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& config_path,
                        std::string& out_path, std::string& design, std::string& r_list) {
    cmd->add_option("--config", config_path, "key=value configuration file");
    cmd->add_option("--out", out_path, "output path (default: stdout)");
    cmd->add_option("--design", design, "three_level | two_qubit | three_qubit");
    cmd->add_option("--tw", cfg.t_w, "work bath temperature");
    cmd->add_option("--th", cfg.t_h, "hot bath temperature");
    cmd->add_option("--tc", cfg.t_c, "cold bath temperature");
    cmd->add_option("--omega-h", cfg.omega_h, "hot transition frequency");
    cmd->add_option("--omega-c", cfg.omega_c, "cold transition frequency");
    cmd->add_option("--g", cfg.g, "three-body interaction strength (three_qubit)");
    cmd->add_option("--r", cfg.r, "work-bath squeezing parameter");
    cmd->add_option("--r-list", r_list, "comma-separated squeezing values");
    cmd->add_option("--dw", cfg.d_w, "work bath dimensionality");
    cmd->add_option("--dh", cfg.d_h, "hot bath dimensionality");
    cmd->add_option("--dc", cfg.d_c, "cold bath dimensionality");
    cmd->add_option("--gamma0", cfg.gamma0, "rate prefactor (0 = auto)");
    cmd->add_option("--samples", cfg.samples, "number of random draws");
    cmd->add_option("--seed", cfg.seed, "master seed");
    cmd->add_option("--points", cfg.points, "sweep grid size");
    cmd->add_option("--mode", cfg.mode, "fixed_hot | fixed_work");
    cmd->add_option("--threads", cfg.threads, "worker threads for sampling");
    cmd->add_flag("--strict,!--no-strict", cfg.strict,
                  "weak-coupling admissibility gamma_0 <= 1e-2 T (default on)");
}

int run_command(const std::string& name, const RunConfig& base,
                const std::string& config_path, const std::string& out_path,
                const std::string& design, const std::string& r_list, CLI::App* cmd) {
    RunConfig cfg = base;
    // precedence: defaults < config file < command line
    if (!config_path.empty()) cfg.apply(qfridge::cli::parse_config_file(config_path));
    std::map<std::string, std::string> overrides;
    auto keep = [&](const char* flag, const char* key, const std::string& v) {
        if (cmd->count(flag)) overrides[key] = v;
    };
    keep("--design", "design", design);
    keep("--r-list", "r_list", r_list);
    for (const auto& [flag, key] : std::map<std::string, std::string>{
             {"--tw", "t_w"}, {"--th", "t_h"}, {"--tc", "t_c"},
             {"--omega-h", "omega_h"}, {"--omega-c", "omega_c"}, {"--g", "g"},
             {"--r", "r"}, {"--dw", "d_w"}, {"--dh", "d_h"}, {"--dc", "d_c"},
             {"--gamma0", "gamma0"}, {"--samples", "samples"}, {"--seed", "seed"},
             {"--points", "points"}, {"--mode", "mode"}, {"--threads", "threads"}})
        if (cmd->count(flag)) overrides[key] = cmd->get_option(flag)->as<std::string>();
    if (cmd->count("--strict")) overrides["strict"] = base.strict ? "1" : "0";
    cfg.apply(overrides);

    if (out_path.empty()) return qfridge::cli::dispatch(name, cfg, std::cout);
    std::ofstream out(out_path);
    if (!out) throw qfridge::ConfigError("cannot open output file: " + out_path);
    return qfridge::cli::dispatch(name, cfg, out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum absorption refrigerator toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path, out_path, design, r_list;
    auto* steady = app.add_subcommand("steady", "solve one fridge and report currents");
    auto* sample = app.add_subcommand("sample", "efficiency-at-maximum-power histogram data");
    auto* charac = app.add_subcommand("characteristic", "power vs efficiency curves");
    for (auto* cmd : {steady, sample, charac})
        add_common_options(cmd, cfg, config_path, out_path, design, r_list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return run_command(name, cfg, config_path, out_path, design, r_list,
                           app.get_subcommands().front());
    } catch (const qfridge::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
