#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qfridge/cli.hpp"

using namespace qfridge;
using cli::RunConfig;

TEST_CASE("config text parsing") {
    const auto kv = cli::parse_config_text(
        "# comment\n"
        "design = two_qubit\n"
        "t_w=120\n"
        "  r_list = 0, 0.5 , 1.0\n"
        "\n"
        "seed = 99\n");
    RunConfig cfg;
    cfg.apply(kv);
    CHECK(cfg.design == models::Design::TwoQubit);
    CHECK(cfg.t_w == 120.0);
    CHECK(cfg.r_list.size() == 3);
    CHECK(cfg.r_list[1] == 0.5);
    CHECK(cfg.seed == 99);

    CHECK_THROWS_AS(cli::parse_config_text("nonsense line"), ConfigError);
    RunConfig bad;
    CHECK_THROWS_AS(bad.apply({{"unknown_key", "1"}}), ConfigError);
    CHECK_THROWS_AS(bad.apply({{"t_w", "abc"}}), ConfigError);
    CHECK_THROWS_AS(bad.apply({{"mode", "sideways"}}), ConfigError);
}

TEST_CASE("number formatting is plain and 12-significant-digit") {
    CHECK(cli::format_number(0.3176470588235294) == "0.317647058824");
    CHECK(cli::format_number(50.0) == "50");
    CHECK(cli::format_number(-1.25e-09) == "-1.25e-09");
}

TEST_CASE("steady run reports the benchmark chiller point") {
    RunConfig cfg;  // defaults: three-level, benchmark temperatures, omega_h=50, omega_c=6
    std::ostringstream out;
    cli::run_steady(cfg, out);
    const std::string text = out.str();
    CHECK(text.find("mode,chiller") != std::string::npos);
    CHECK(text.find("efficiency,0.136363636364") != std::string::npos);
    CHECK(text.find("# design = three_level") != std::string::npos);
    CHECK(text.find("first_law_residual,") != std::string::npos);
}

TEST_CASE("steady run at equal temperatures reports equilibrium") {
    RunConfig cfg;
    cfg.t_w = cfg.t_h = cfg.t_c = 50.0;
    cfg.omega_c = 6.0;
    std::ostringstream out;
    cli::run_steady(cfg, out);
    const std::string text = out.str();
    CHECK(text.find("mode,equilibrium") != std::string::npos);
}

TEST_CASE("identical configuration produces byte-identical output") {
    RunConfig cfg;
    cfg.design = models::Design::TwoQubit;
    cfg.omega_c = 4.0;
    std::ostringstream a, b;
    cli::run_steady(cfg, a);
    cli::run_steady(cfg, b);
    CHECK(a.str() == b.str());

    RunConfig sample_cfg;
    sample_cfg.samples = 24;
    sample_cfg.seed = 7;
    sample_cfg.d_c = 1;
    std::ostringstream s1, s2;
    cli::run_sample(sample_cfg, s1);
    sample_cfg.threads = 3;  // worker count must not change the bytes
    cli::run_sample(sample_cfg, s2);
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().find("# seed = 7") != std::string::npos);
    CHECK(s1.str().find("# max_ratio d_c=1") != std::string::npos);
}

TEST_CASE("sample output respects the dimensional bound in the footer") {
    RunConfig cfg;
    cfg.samples = 60;
    cfg.seed = 3;
    cfg.d_c = 1;
    std::ostringstream out;
    cli::run_sample(cfg, out);
    const std::string text = out.str();
    // parse the max_ratio footer line
    const auto pos = text.find("# max_ratio d_c=1 : ");
    REQUIRE(pos != std::string::npos);
    const double max_ratio = std::stod(text.substr(pos + 20));
    CHECK(max_ratio <= 0.5 + 1e-3);
    CHECK(max_ratio > 0.0);
}

TEST_CASE("characteristic output is blocked by r with zero-power endpoints") {
    RunConfig cfg;
    cfg.points = 24;
    cfg.r_list = {0.0, 1.0};
    std::ostringstream out;
    cli::run_characteristic(cfg, out);
    const std::string text = out.str();
    CHECK(text.find("r,omega_c,efficiency,cooling_power") != std::string::npos);
    CHECK(text.find("# r = 0,") != std::string::npos);
    CHECK(text.find("# r = 1,") != std::string::npos);
    // r blocks appear in order
    CHECK(text.find("# r = 0,") < text.find("# r = 1,"));
}

TEST_CASE("dispatch rejects unknown commands") {
    RunConfig cfg;
    std::ostringstream out;
    CHECK_THROWS_AS(cli::dispatch("warp", cfg, out), ConfigError);
}
