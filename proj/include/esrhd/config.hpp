#pragma once

#include <optional>
#include <string>
#include <vector>

namespace esrhd {

/// Time step rule: CFL-limited, or dt = cfl * dx^s for accuracy studies.
struct DtRule {
    bool power = false;
    double s = 1.0;
};

/// Snapshot cadence: every `steps` steps (0 = final only) and/or at listed times.
struct OutputEvery {
    int steps = 0;
    std::vector<double> times;
};

/// Declarative description of one simulation.
struct RunConfig {
    std::string case_id;
    std::optional<std::string> eos;
    std::optional<double> gamma;
    std::string scheme = "es5";
    std::string dissipation = "rusanov";
    std::string time_integrator = "ssprk3";
    std::optional<double> cfl;
    std::optional<int> nx;
    std::optional<int> ny;
    std::optional<double> t_final;
    DtRule dt_rule;
    std::string output_dir = ".";
    OutputEvery output_every;
    bool reference = false;
};

/// Valid configuration keys.
const std::vector<std::string>& config_keys();

/// Set one key; throws ConfigError naming the key and the valid choices.
void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

/// Parse flat key=value text ('#' starts a comment). Errors carry `source:line`.
RunConfig parse_config_text(const std::string& text, const std::string& source = "<config>");
RunConfig parse_config_file(const std::string& path);

/// Apply "key=value" overrides in order.
void apply_overrides(RunConfig& cfg, const std::vector<std::string>& overrides);

/// Check enumerations, case id and ranges before any compute.
void validate_config(const RunConfig& cfg);

/// Canonical key=value rendering.
std::string to_text(const RunConfig& cfg);

}  // namespace esrhd
