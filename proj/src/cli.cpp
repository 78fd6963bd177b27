#include "qfridge/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qfridge/lindblad.hpp"
#include "qfridge/optimize.hpp"

namespace qfridge::cli {

using baths::Bath;
using baths::BathLabel;
using models::BathTriple;
using models::Design;
using models::FridgeSpec;
using thermo::Temperatures;

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // canonicalize negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for " + key + ": " + v);
    }
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const unsigned long long x = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer value for " + key + ": " + v);
    }
}

std::vector<double> to_double_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double(key, trim(item)));
    if (out.empty()) throw ConfigError("config: empty list for " + key);
    return out;
}

} // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw ConfigError("config: expected key=value, got: " + t);
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw ConfigError("config: empty key in line: " + t);
        kv[key] = value;
    }
    return kv;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

void RunConfig::apply(const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "design") design = models::design_from_string(value);
        else if (key == "t_w") t_w = to_double(key, value);
        else if (key == "t_h") t_h = to_double(key, value);
        else if (key == "t_c") t_c = to_double(key, value);
        else if (key == "omega_h") omega_h = to_double(key, value);
        else if (key == "omega_c") omega_c = to_double(key, value);
        else if (key == "g") g = to_double(key, value);
        else if (key == "r") r = to_double(key, value);
        else if (key == "r_list") r_list = to_double_list(key, value);
        else if (key == "d_w") d_w = static_cast<int>(to_double(key, value));
        else if (key == "d_h") d_h = static_cast<int>(to_double(key, value));
        else if (key == "d_c") d_c = static_cast<int>(to_double(key, value));
        else if (key == "gamma0") gamma0 = to_double(key, value);
        else if (key == "samples") samples = static_cast<std::size_t>(to_u64(key, value));
        else if (key == "seed") seed = to_u64(key, value);
        else if (key == "points") points = static_cast<std::size_t>(to_u64(key, value));
        else if (key == "mode") {
            if (value != "fixed_hot" && value != "fixed_work")
                throw ConfigError("config: mode must be fixed_hot or fixed_work");
            mode = value;
        }
        else if (key == "threads") threads = static_cast<unsigned>(to_u64(key, value));
        else if (key == "strict") strict = value == "1" || value == "true";
        else throw ConfigError("config: unknown key " + key);
    }
}

void RunConfig::echo(std::ostream& os, const std::string& command) const {
    os << "# qfridge " << command << "\n";
    os << "# design = " << models::name(design) << "\n";
    os << "# t_w = " << format_number(t_w) << "\n";
    os << "# t_h = " << format_number(t_h) << "\n";
    os << "# t_c = " << format_number(t_c) << "\n";
    os << "# omega_h = " << format_number(omega_h) << "\n";
    if (command == "steady") {
        os << "# omega_c = " << format_number(omega_c) << "\n";
        os << "# r = " << format_number(r) << "\n";
    }
    if (design == Design::ThreeQubit) os << "# g = " << format_number(g) << "\n";
    if (command == "characteristic") {
        os << "# r_list =";
        for (double v : r_list) os << " " << format_number(v);
        os << "\n# points = " << points << "\n";
    }
    if (command == "sample") {
        os << "# samples = " << samples << "\n";
        os << "# seed = " << seed << "\n";
        os << "# mode = " << mode << "\n";
    }
    os << "# d_w = " << d_w << ", d_h = " << d_h << ", d_c = " << d_c << "\n";
    os << "# gamma0 = " << (gamma0 > 0 ? format_number(gamma0) : "auto") << "\n";
    os << "# strict = " << (strict ? 1 : 0) << "\n";
}

namespace {

double default_gamma0(const RunConfig& c) {
    return c.gamma0 > 0 ? c.gamma0 : 1e-3 * c.t_c;
}

BathTriple make_baths(const RunConfig& c, double gamma0, double r) {
    BathTriple b{Bath(BathLabel::work, c.t_w, c.d_w, gamma0, r),
                 Bath(BathLabel::hot, c.t_h, c.d_h, gamma0),
                 Bath(BathLabel::cold, c.t_c, c.d_c, gamma0)};
    if (c.strict)
        for (const auto& bath : b) baths::require_weak_coupling(bath);
    return b;
}

} // namespace

void run_steady(const RunConfig& config, std::ostream& os) {
    config.echo(os, "steady");
    const double gamma0 = default_gamma0(config);
    const BathTriple b = make_baths(config, gamma0, config.r);
    const FridgeSpec spec =
        FridgeSpec::from_hot(config.design, config.omega_h, config.omega_c, config.g);
    const auto wm = models::build_working_material(spec);
    const auto l = lindblad::build_liouvillian(wm.h, wm.couplings, b);
    const auto rho = lindblad::steady_state(l);

    std::array<double, 3> currents{};
    for (BathLabel label : baths::kAllBaths)
        currents[baths::index(label)] = lindblad::heat_current(l, label, rho, wm.h);
    // noise floor of tr[H L rho] given the steady-state residual tolerance
    const double current_floor = 1e-10 * wm.h.max_abs() * l.total.max_abs();
    const auto rep = thermo::report(currents, {config.t_w, config.t_h, config.t_c},
                                    config.r, spec.omega_w, current_floor);

    os << "quantity,value\n";
    os << "omega_w," << format_number(spec.omega_w) << "\n";
    const auto eig = numerics::hermitian_eigensystem(wm.h);
    for (std::size_t i = 0; i < eig.values.size(); ++i) {
        // populations in the energy eigenbasis
        numerics::Complex p = 0;
        for (std::size_t a = 0; a < l.dim; ++a)
            for (std::size_t c2 = 0; c2 < l.dim; ++c2)
                p += std::conj(eig.vectors(a, i)) * rho(a, c2) * eig.vectors(c2, i);
        os << "population_" << i + 1 << "," << format_number(p.real()) << "\n";
    }
    for (std::size_t i = 0; i < l.dim; ++i)
        for (std::size_t j = 0; j < l.dim; ++j) {
            os << "rho_" << i << "_" << j << "_re," << format_number(rho(i, j).real()) << "\n";
            os << "rho_" << i << "_" << j << "_im," << format_number(rho(i, j).imag()) << "\n";
        }
    os << "current_work," << format_number(currents[0]) << "\n";
    os << "current_hot," << format_number(currents[1]) << "\n";
    os << "current_cold," << format_number(currents[2]) << "\n";
    os << "efficiency," << format_number(rep.efficiency) << "\n";
    os << "entropy_production," << format_number(rep.sigma) << "\n";
    os << "first_law_residual," << format_number(rep.first_law_residual) << "\n";
    os << "carnot," << format_number(rep.carnot) << "\n";
    if (config.r > 0)
        os << "t_work_effective," << format_number(rep.t_work_effective) << "\n";
    os << "mode," << thermo::name(rep.mode) << "\n";
}

void run_sample(const RunConfig& config, std::ostream& os) {
    config.echo(os, "sample");
    optimize::SampleConfig sc;
    sc.design = config.design;
    sc.dimension = config.d_c;
    sc.count = config.samples;
    sc.seed = config.seed;
    sc.fixed = config.mode == "fixed_work" ? optimize::FixedFrequency::work
                                           : optimize::FixedFrequency::hot;
    const auto rows = optimize::run_sampling(sc, config.threads);

    os << "index,design,d_c,t_w,t_h,t_c,omega_h,g,gamma0,omega_c_star,omega_w_star,"
          "power_star,eps_star,eps_carnot,ratio,x_star,status\n";
    double max_ratio = 0.0;
    std::size_t cooled = 0;
    for (const auto& row : rows) {
        os << row.index << "," << models::name(config.design) << "," << config.d_c << ","
           << format_number(row.draw.temps.work) << "," << format_number(row.draw.temps.hot)
           << "," << format_number(row.draw.temps.cold) << ","
           << format_number(row.draw.omega_h) << "," << format_number(row.draw.g) << ","
           << format_number(row.draw.gamma0) << ",";
        if (row.cooled) {
            ++cooled;
            max_ratio = std::max(max_ratio, row.opt.ratio);
            os << format_number(row.opt.omega_c) << "," << format_number(row.opt.omega_w)
               << "," << format_number(row.opt.power) << ","
               << format_number(row.opt.efficiency) << "," << format_number(row.carnot)
               << "," << format_number(row.opt.ratio) << "," << format_number(row.opt.x)
               << ",ok\n";
        } else {
            os << ",,,," << format_number(row.carnot) << ",,,no_cooling\n";
        }
    }
    os << "# cooled = " << cooled << "/" << rows.size() << "\n";
    os << "# max_ratio d_c=" << config.d_c << " : " << format_number(max_ratio) << "\n";
    os << "# bound d_c=" << config.d_c << " : "
       << format_number(static_cast<double>(config.d_c) / (config.d_c + 1)) << "\n";
}

void run_characteristic(const RunConfig& config, std::ostream& os) {
    config.echo(os, "characteristic");
    const double gamma0 = default_gamma0(config);
    if (config.strict) make_baths(config, gamma0, 0.0);
    const auto curves = optimize::performance_characteristic(
        config.design, {config.t_w, config.t_h, config.t_c}, config.omega_h, config.r_list,
        config.d_c, gamma0, config.points);

    os << "r,omega_c,efficiency,cooling_power\n";
    for (const auto& curve : curves) {
        os << "# r = " << format_number(curve.r)
           << ", omega_c_max = " << format_number(curve.omega_c_max)
           << ", carnot_r = " << format_number(curve.carnot)
           << ", max_power = " << format_number(curve.max_power)
           << ", eps_at_max_power = " << format_number(curve.efficiency_at_max) << "\n";
        for (const auto& p : curve.points)
            os << format_number(curve.r) << "," << format_number(p.omega_c) << ","
               << format_number(p.efficiency) << "," << format_number(p.power) << "\n";
    }
}

int dispatch(const std::string& command, const RunConfig& config, std::ostream& os) {
    if (command == "steady") run_steady(config, os);
    else if (command == "sample") run_sample(config, os);
    else if (command == "characteristic") run_characteristic(config, os);
    else throw ConfigError("unknown command: " + command);
    return 0;
}

} // namespace qfridge::cli
