#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tfplasma/errors.hpp"
#include "tfplasma/lab.hpp"

namespace {

tfp::ConfigPairs overrides_to_pairs(const std::vector<std::string>& overrides) {
    tfp::ConfigPairs pairs;
    for (const std::string& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) {
            throw tfp::ConfigError("override must look like key=value: " + o);
        }
        pairs.emplace_back(o.substr(0, eq), o.substr(eq + 1));
    }
    return pairs;
}

void print_report(const tfp::ScenarioConfig& cfg, const tfp::RunReport& report) {
    std::cout << "scenario=" << tfp::scenario_name(cfg.scenario)
              << " steps=" << report.steps_taken
              << " wall_seconds=" << report.wall_seconds;
    if (report.final_l1_error) {
        std::cout << " l1_error=" << *report.final_l1_error;
    }
    std::cout << "\noutputs in " << cfg.output_dir << std::endl;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-fluid plasma experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;

    CLI::App* cmd_run = app.add_subcommand("run", "Run one configured scenario");
    cmd_run->add_option("--config", config_path, "Config file")->required();
    cmd_run->add_option("--override", overrides, "key=value config override (repeatable)");

    std::string sweep_key;
    std::string sweep_values;
    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "Run a scenario over a list of parameter values");
    cmd_sweep->add_option("--config", config_path, "Config file")->required();
    cmd_sweep->add_option("--key", sweep_key, "Config key to sweep")->required();
    cmd_sweep->add_option("--values", sweep_values, "Comma-separated values")->required();
    cmd_sweep->add_option("--override", overrides, "key=value config override (repeatable)");

    CLI11_PARSE(app, argc, argv);

    try {
        tfp::ConfigPairs pairs = tfp::read_config_pairs(config_path);
        for (auto& p : overrides_to_pairs(overrides)) pairs.push_back(std::move(p));

        if (cmd_run->parsed()) {
            const tfp::ScenarioConfig cfg = tfp::make_config(pairs);
            const tfp::RunReport report = tfp::run(cfg);
            print_report(cfg, report);
            return 0;
        }

        // sweep
        const std::vector<std::string> values = split_csv(sweep_values);
        if (values.empty()) throw tfp::ConfigError("sweep needs at least one value");
        std::vector<std::string> rows;
        for (const std::string& value : values) {
            tfp::ConfigPairs run_pairs = pairs;
            run_pairs.emplace_back(sweep_key, value);
            const tfp::ScenarioConfig cfg = tfp::make_config(run_pairs);
            std::cout << sweep_key << "=" << value << " ..." << std::flush;
            const tfp::RunReport report = tfp::run(cfg);
            std::cout << " steps=" << report.steps_taken
                      << " wall_seconds=" << report.wall_seconds << std::endl;
            rows.push_back(tfp::sweep_csv_row(std::stod(value), report));
        }
        const tfp::ScenarioConfig base = tfp::make_config(pairs);
        const std::string path = base.output_dir + "/sweep.csv";
        std::ofstream out(path);
        if (!out) throw tfp::ConfigError("cannot write " + path);
        out << tfp::sweep_csv_header(sweep_key) << '\n';
        for (const std::string& row : rows) out << row << '\n';
        std::cout << "wrote " << path << std::endl;
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
