#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "driftkit/config.hpp"
#include "driftkit/errors.hpp"
#include "driftkit/generator.hpp"
#include "driftkit/report.hpp"
#include "driftkit/stream_io.hpp"
#include "driftkit/sweep.hpp"

namespace {

using namespace driftkit;

int cmd_gen(const std::string& spec_path, const std::string& out_path) {
    const StreamSpec spec = load_stream_spec(spec_path);
    const std::vector<Sample> stream = generate_synthetic_stream(spec);
    save_stream(out_path, stream);
    std::cout << "wrote " << stream.size() << " samples over " << spec.months << " months to "
              << out_path << "\n";
    return 0;
}

int cmd_validate(const std::string& in_path) {
    const std::vector<Sample> stream = load_stream(in_path);
    if (stream.empty()) {
        std::cout << in_path << ": empty stream\n";
        return 0;
    }
    std::size_t goodware = 0;
    std::size_t malware = 0;
    for (const Sample& s : stream) {
        (s.true_class == ClassLabel::Malware ? malware : goodware) += 1;
    }
    std::cout << in_path << ": " << stream.size() << " samples, dimension "
              << stream.front().features.size() << ", months " << stream.front().timestamp << ".."
              << stream.back().timestamp << ", " << goodware << " goodware / " << malware
              << " malware\n";
    return 0;
}

void print_summary(const ExperimentReport& report) {
    std::cout << report.experiment_id << ": " << report.totals.windows << " windows, "
              << report.totals.retrain_count << " retrainings, mean A_mean "
              << report.totals.mean_a_mean << ", manual labels " << report.totals.manual_labels
              << " (" << report.totals.initial_manual_labels << " initial)\n";
}

int cmd_run(const std::string& config_path, std::string out_path, const std::string& csv_path) {
    const ExperimentConfig config = load_experiment_config(config_path);
    if (out_path.empty()) out_path = config.output_path;
    if (out_path.empty()) {
        throw ConfigError("run: no output path (--out flag or config 'output')");
    }
    const std::vector<Sample> stream = resolve_stream(config);
    const ExperimentReport report = run_experiment(config, stream);
    emit_report({report}, out_path, ReportFormat::Json);
    if (!csv_path.empty()) emit_report({report}, csv_path, ReportFormat::Csv);
    print_summary(report);
    std::cout << "report written to " << out_path << "\n";
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& grid_path,
              const std::string& out_dir) {
    const ExperimentConfig base = load_experiment_config(config_path);
    const SweepGrid grid = load_sweep_grid(grid_path);
    const std::vector<ExperimentReport> reports = run_sweep(base, grid);

    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "report_%03zu.json", i);
        emit_report({reports[i]}, (std::filesystem::path(out_dir) / name).string(),
                    ReportFormat::Json);
        print_summary(reports[i]);
    }
    // The sweep index is written once, by the coordinator, at the end.
    emit_report(reports, (std::filesystem::path(out_dir) / "index.csv").string(),
                ReportFormat::Csv);
    std::cout << reports.size() << " report(s) written to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"driftkit - drift-aware retraining workbench for batch binary classifiers"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string stream_out;
    CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic stream from a JSON spec");
    gen->add_option("--spec", spec_path, "Stream spec JSON file")->required();
    gen->add_option("--out", stream_out, "Output stream CSV path")->required();

    std::string run_config;
    std::string run_out;
    std::string run_csv;
    CLI::App* run = app.add_subcommand("run", "Run one experiment from a JSON config");
    run->add_option("--config", run_config, "Experiment config JSON file")->required();
    run->add_option("--out", run_out, "Report JSON path (defaults to the config's 'output')");
    run->add_option("--csv", run_csv, "Also write a per-window CSV");

    std::string sweep_config;
    std::string sweep_grid;
    std::string sweep_out;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter grid over a base config");
    sweep->add_option("--config", sweep_config, "Base experiment config JSON file")->required();
    sweep->add_option("--grid", sweep_grid, "Parameter grid JSON file")->required();
    sweep->add_option("--out", sweep_out, "Output directory")->required();

    std::string validate_in;
    CLI::App* validate = app.add_subcommand("validate", "Validate a stream CSV file");
    validate->add_option("--in", validate_in, "Stream CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(spec_path, stream_out);
        if (run->parsed()) return cmd_run(run_config, run_out, run_csv);
        if (sweep->parsed()) return cmd_sweep(sweep_config, sweep_grid, sweep_out);
        if (validate->parsed()) return cmd_validate(validate_in);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
