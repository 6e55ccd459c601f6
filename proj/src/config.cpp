#include "esrhd/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "esrhd/cases.hpp"
#include "esrhd/dissipation.hpp"
#include "esrhd/errors.hpp"
#include "esrhd/solver.hpp"
#include "esrhd/timeint.hpp"

namespace esrhd {

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> k{"case", "eos",    "gamma",    "scheme",     "dissipation",
                                            "time_integrator", "cfl", "nx", "ny", "t_final",
                                            "dt_rule",         "output_dir", "output_every", "reference"};
    return k;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    // accepts a/b fractions
    const auto slash = v.find('/');
    try {
        std::size_t pos = 0;
        if (slash != std::string::npos) {
            const double a = std::stod(v.substr(0, slash), &pos);
            const double b = std::stod(v.substr(slash + 1));
            return a / b;
        }
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for '" + key + "': '" + v + "'");
    }
}

int to_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for '" + key + "': '" + v + "'");
    }
}

}  // namespace

void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    if (key == "case") {
        cfg.case_id = v;
    } else if (key == "eos") {
        cfg.eos = v;
    } else if (key == "gamma") {
        cfg.gamma = to_double(key, v);
    } else if (key == "scheme") {
        cfg.scheme = v;
    } else if (key == "dissipation") {
        cfg.dissipation = v;
    } else if (key == "time_integrator") {
        cfg.time_integrator = v;
    } else if (key == "cfl") {
        cfg.cfl = to_double(key, v);
    } else if (key == "nx") {
        cfg.nx = to_int(key, v);
    } else if (key == "ny") {
        cfg.ny = to_int(key, v);
    } else if (key == "t_final") {
        cfg.t_final = to_double(key, v);
    } else if (key == "dt_rule") {
        if (v == "cfl") {
            cfg.dt_rule = DtRule{};
        } else if (v.rfind("power(", 0) == 0 && v.back() == ')') {
            cfg.dt_rule.power = true;
            cfg.dt_rule.s = to_double(key, v.substr(6, v.size() - 7));
        } else {
            throw ConfigError("invalid dt_rule '" + v + "' (valid: cfl, power(<s>))");
        }
    } else if (key == "output_dir") {
        cfg.output_dir = v;
    } else if (key == "output_every") {
        cfg.output_every = OutputEvery{};
        if (v.find_first_of(".,") == std::string::npos) {
            cfg.output_every.steps = to_int(key, v);
        } else {
            std::stringstream ss(v);
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = trim(item);
                if (!item.empty()) cfg.output_every.times.push_back(to_double(key, item));
            }
        }
    } else if (key == "reference") {
        if (v == "on") cfg.reference = true;
        else if (v == "off") cfg.reference = false;
        else throw ConfigError("invalid reference '" + v + "' (valid: on, off)");
    } else {
        std::string valid;
        for (const auto& k : config_keys()) valid += (valid.empty() ? "" : ", ") + k;
        throw ConfigError("unknown config key '" + key + "' (valid: " + valid + ")");
    }
}

RunConfig parse_config_text(const std::string& text, const std::string& source) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(fmt::format("{}:{}: expected key=value, got '{}'", source, lineno, line));
        try {
            set_config_value(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError(fmt::format("{}:{}: {}", source, lineno, e.what()));
        }
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << is.rdbuf();
    return parse_config_text(buf.str(), path);
}

void apply_overrides(RunConfig& cfg, const std::vector<std::string>& overrides) {
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw ConfigError("override '" + o + "' is not key=value");
        set_config_value(cfg, trim(o.substr(0, eq)), o.substr(eq + 1));
    }
}

void validate_config(const RunConfig& cfg) {
    if (cfg.case_id.empty()) throw ConfigError("missing required key 'case'");
    const auto wrap = [](auto&& fn) {
        try {
            fn();
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
    };
    wrap([&] { find_case(cfg.case_id); });
    wrap([&] { Scheme::from_name(cfg.scheme); });
    wrap([&] { dissipation_from_name(cfg.dissipation); });
    if (cfg.time_integrator != "ssprk3" && cfg.time_integrator != "rrk3")
        throw ConfigError("unknown time_integrator '" + cfg.time_integrator + "' (valid: ssprk3, rrk3)");
    const CaseSpec& cs = find_case(cfg.case_id);
    wrap([&] { EosModel::from_name(cfg.eos.value_or(cs.eos), cfg.gamma.value_or(cs.gamma)); });
    if (cfg.cfl && !(*cfg.cfl > 0.0)) throw ConfigError("cfl must be positive");
    if (cfg.nx && *cfg.nx < 1) throw ConfigError("nx must be positive");
    if (cfg.ny && *cfg.ny < 1) throw ConfigError("ny must be positive");
    if (cfg.ny && cs.dim == 1) throw ConfigError("ny given for a 1D case");
    if (cfg.t_final && !(*cfg.t_final > 0.0)) throw ConfigError("t_final must be positive");
    if (cfg.dt_rule.power && !(cfg.dt_rule.s > 0.0)) throw ConfigError("dt_rule power must be positive");
    if (cfg.output_every.steps < 0) throw ConfigError("output_every must be non-negative");
    if (!std::is_sorted(cfg.output_every.times.begin(), cfg.output_every.times.end()))
        throw ConfigError("output_every times must be increasing");
}

std::string to_text(const RunConfig& c) {
    std::string s;
    s += "case = " + c.case_id + "\n";
    if (c.eos) s += "eos = " + *c.eos + "\n";
    if (c.gamma) s += fmt::format("gamma = {:.17g}\n", *c.gamma);
    s += "scheme = " + c.scheme + "\n";
    s += "dissipation = " + c.dissipation + "\n";
    s += "time_integrator = " + c.time_integrator + "\n";
    if (c.cfl) s += fmt::format("cfl = {:.17g}\n", *c.cfl);
    if (c.nx) s += fmt::format("nx = {}\n", *c.nx);
    if (c.ny) s += fmt::format("ny = {}\n", *c.ny);
    if (c.t_final) s += fmt::format("t_final = {:.17g}\n", *c.t_final);
    s += c.dt_rule.power ? fmt::format("dt_rule = power({:.17g})\n", c.dt_rule.s) : "dt_rule = cfl\n";
    s += "output_dir = " + c.output_dir + "\n";
    if (!c.output_every.times.empty()) {
        std::string t;
        for (double x : c.output_every.times) t += (t.empty() ? "" : ",") + fmt::format("{:.17g}", x);
        s += "output_every = " + t + "\n";
    } else {
        s += fmt::format("output_every = {}\n", c.output_every.steps);
    }
    s += std::string("reference = ") + (c.reference ? "on" : "off") + "\n";
    return s;
}

}  // namespace esrhd
