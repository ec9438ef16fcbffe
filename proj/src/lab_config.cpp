#include <fstream>
#include <sstream>
#include <string>

#include "tfplasma/errors.hpp"
#include "tfplasma/lab.hpp"

namespace tfp {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for '" + key + "': " + value);
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer value for '" + key + "': " + value);
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ConfigError("bad boolean value for '" + key + "' (use true/false): " + value);
}

ScenarioKind parse_scenario(const std::string& value) {
    if (value == "manufactured") return ScenarioKind::Manufactured;
    if (value == "soliton1d") return ScenarioKind::Soliton1d;
    if (value == "briowu") return ScenarioKind::BrioWu;
    if (value == "soliton2d") return ScenarioKind::Soliton2d;
    throw ConfigError("unknown scenario: " + value);
}

StepperKind parse_stepper(const std::string& value) {
    if (value == "explicit") return StepperKind::Explicit;
    if (value == "imex") return StepperKind::Imex;
    throw ConfigError("unknown stepper (use explicit/imex): " + value);
}

bool is_phys_key(const std::string& key) {
    return key == "gamma" || key == "lambda_m" || key == "r_hat_g" ||
           key == "lambda_hat_d" || key == "c_hat" || key == "xi" || key == "kappa";
}

} // namespace

ConfigPairs read_config_pairs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    ConfigPairs pairs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(line_no) +
                              ": expected 'key = value', got: " + line);
        }
        pairs.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return pairs;
}

ScenarioConfig make_config(const ConfigPairs& pairs) {
    ScenarioConfig cfg;
    bool scenario_set = false;
    for (const auto& [key, value] : pairs) {
        if (key == "scenario") {
            cfg.scenario = parse_scenario(value);
            scenario_set = true;
        } else if (key == "nx") {
            cfg.nx = parse_int(key, value);
        } else if (key == "ny") {
            cfg.ny = parse_int(key, value);
        } else if (key == "order") {
            cfg.order = parse_int(key, value);
        } else if (key == "rk_order") {
            cfg.rk_order = parse_int(key, value);
        } else if (key == "stepper") {
            cfg.stepper = parse_stepper(value);
        } else if (key == "cfl") {
            cfg.cfl = parse_double(key, value);
        } else if (key == "sigma_src") {
            cfg.sigma_src = parse_double(key, value);
        } else if (key == "t_end") {
            cfg.t_end = parse_double(key, value);
        } else if (key == "snapshot_interval") {
            cfg.snapshot_interval = parse_double(key, value);
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else if (key == "source_enabled") {
            cfg.source_enabled = parse_bool(key, value);
        } else if (is_phys_key(key)) {
            cfg.phys_overrides[key] = parse_double(key, value);
        } else {
            throw ConfigError("unknown config key: " + key);
        }
    }
    if (!scenario_set) throw ConfigError("config must set 'scenario'");
    cfg.validate();
    return cfg;
}

void ScenarioConfig::validate() const {
    if (nx <= 0) throw ConfigError("nx must be positive");
    if (scenario == ScenarioKind::Soliton2d && ny <= 0) throw ConfigError("ny must be positive");
    if (order != 1 && order != 2) throw ConfigError("order must be 1 or 2");
    if (rk_order != 2 && rk_order != 3) throw ConfigError("rk_order must be 2 or 3");
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must be in (0, 1]");
    if (!(sigma_src > 0.0 && sigma_src <= 1.0)) throw ConfigError("sigma_src must be in (0, 1]");
    if (!(t_end > 0.0)) throw ConfigError("t_end must be positive");
    if (snapshot_interval < 0.0) throw ConfigError("snapshot_interval must be >= 0");
}

} // namespace tfp
