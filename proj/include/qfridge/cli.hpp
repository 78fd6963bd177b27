// cli.hpp — Run configuration and the three experiment commands

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qfridge/models.hpp"

namespace qfridge::cli {

// Flat key=value configuration; every run echoes its effective values into the
// output header so artifacts are self-describing.
struct RunConfig {
    models::Design design = models::Design::ThreeLevel;
    double t_w = 170.0;
    double t_h = 80.0;
    double t_c = 30.0;
    double omega_h = 50.0;
    double omega_c = 6.0;
    double g = 0.0;
    double r = 0.0;
    std::vector<double> r_list{0.0, 0.5, 1.0, 1.5, 2.0};
    int d_w = 3;
    int d_h = 3;
    int d_c = 3;
    double gamma0 = 0.0;  // 0 means derive defaults per command
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    std::size_t points = 400;
    std::string mode = "fixed_hot";  // or fixed_work
    unsigned threads = 1;
    bool strict = true;  // experiments enforce weak-coupling admissibility by default

    void apply(const std::map<std::string, std::string>& kv);  // ConfigError on bad keys
    void echo(std::ostream& os, const std::string& command) const;
};

std::map<std::string, std::string> parse_config_file(const std::string& path);
std::map<std::string, std::string> parse_config_text(const std::string& text);

// 12 significant digits, '.' decimal separator, locale independent.
std::string format_number(double v);

void run_steady(const RunConfig& config, std::ostream& os);
void run_sample(const RunConfig& config, std::ostream& os);
void run_characteristic(const RunConfig& config, std::ostream& os);

// exit codes: 0 ok, 2 config error, 3 numerical failure
int dispatch(const std::string& command, const RunConfig& config, std::ostream& os);

} // namespace qfridge::cli
