// wco: weighted composition operators on discrete measure spaces.
// Subcommands: report, aluthge, oracle, gallery. JSON in, JSON out.

#include "wco/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_input_flags(CLI::App* cmd, wco::cli::InputSpec* input,
                     std::vector<std::string>* raw_params) {
    cmd->add_option("--space", input->space_file, "space document (JSON file)");
    cmd->add_option("--gallery", input->gallery, "gallery family name");
    cmd->add_option("--param", *raw_params, "family parameter K=V (repeatable)");
    cmd->add_option("--window", input->window, "window size for gallery families");
}

int parse_params(const std::vector<std::string>& raw, wco::cli::InputSpec* input) {
    for (const auto& kv : raw) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: --param expects K=V, got " << kv << "\n";
            return wco::cli::kInputError;
        }
        input->params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (input->space_file.empty() == input->gallery.empty()) {
        std::cerr << "error: give exactly one of --space or --gallery\n";
        return wco::cli::kInputError;
    }
    return wco::cli::kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted composition operators: transforms, criteria, oracle checks"};
    app.require_subcommand(1);

    wco::cli::ReportOptions report;
    std::vector<std::string> report_params;
    auto* cmd_report = app.add_subcommand("report", "run property checks, emit a JSON report");
    add_input_flags(cmd_report, &report.input, &report_params);
    cmd_report->add_option("--check", report.checks, "check name (repeatable)")->required();
    double p_val = 0, q_val = 0, alpha_val = 0;
    auto* p_opt = cmd_report->add_option("--p", p_val, "exponent p");
    auto* q_opt = cmd_report->add_option("--q", q_val, "exponent q");
    auto* a_opt = cmd_report->add_option("--alpha", alpha_val, "transform parameter alpha");
    cmd_report->add_flag("--exact", report.exact, "exact rational arithmetic where supported");
    std::string report_out;
    auto* report_out_opt = cmd_report->add_option("--out", report_out, "also write to file");

    wco::cli::AluthgeOptions aluthge;
    std::vector<std::string> aluthge_params;
    auto* cmd_aluthge =
        app.add_subcommand("aluthge", "emit w_alpha, h_alpha, perp set and closedness");
    add_input_flags(cmd_aluthge, &aluthge.input, &aluthge_params);
    cmd_aluthge->add_option("--alpha", aluthge.alpha, "transform parameter alpha")->required();
    cmd_aluthge->add_flag("--exact", aluthge.exact, "exact rational arithmetic where supported");
    std::string aluthge_out;
    auto* aluthge_out_opt = cmd_aluthge->add_option("--out", aluthge_out, "also write to file");

    wco::cli::OracleOptions oracle;
    wco::cli::InputSpec oracle_input;
    std::vector<std::string> oracle_params;
    auto* cmd_oracle =
        app.add_subcommand("oracle", "run all oracle/criterion agreement suites");
    add_input_flags(cmd_oracle, &oracle_input, &oracle_params);
    cmd_oracle->add_option("--alpha", oracle.alphas, "alpha values (repeatable)");
    cmd_oracle->add_option("--p", oracle.ps, "p values (repeatable)");
    cmd_oracle->add_option("--seed", oracle.seed, "PRNG seed");
    cmd_oracle->add_option("--random", oracle.n_random, "number of random spaces");
    cmd_oracle->add_option("--max-dim", oracle.max_dim, "max dimension of random spaces");
    std::string oracle_out;
    auto* oracle_out_opt = cmd_oracle->add_option("--out", oracle_out, "also write to file");

    auto* cmd_gallery = app.add_subcommand("gallery", "list or build example families");
    auto* cmd_list = cmd_gallery->add_subcommand("list", "list families and parameters");
    wco::cli::GalleryBuildOptions build;
    std::vector<std::string> build_params;
    auto* cmd_build = cmd_gallery->add_subcommand("build", "emit a family window as JSON");
    cmd_build->add_option("name", build.name, "family name")->required();
    cmd_build->add_option("--param", build_params, "family parameter K=V (repeatable)");
    cmd_build->add_option("--window", build.window, "window size");
    std::string build_out;
    auto* build_out_opt = cmd_build->add_option("--out", build_out, "also write to file");

    CLI11_PARSE(app, argc, argv);

    if (cmd_report->parsed()) {
        if (int rc = parse_params(report_params, &report.input)) return rc;
        if (*p_opt) report.p = p_val;
        if (*q_opt) report.q = q_val;
        if (*a_opt) report.alpha = alpha_val;
        if (*report_out_opt) report.out_file = report_out;
        return wco::cli::run_report(report, std::cout, std::cerr);
    }
    if (cmd_aluthge->parsed()) {
        if (int rc = parse_params(aluthge_params, &aluthge.input)) return rc;
        if (*aluthge_out_opt) aluthge.out_file = aluthge_out;
        return wco::cli::run_aluthge(aluthge, std::cout, std::cerr);
    }
    if (cmd_oracle->parsed()) {
        if (!oracle_input.space_file.empty() || !oracle_input.gallery.empty()) {
            if (int rc = parse_params(oracle_params, &oracle_input)) return rc;
            oracle.input = oracle_input;
        }
        if (*oracle_out_opt) oracle.out_file = oracle_out;
        return wco::cli::run_oracle(oracle, std::cout, std::cerr);
    }
    if (cmd_gallery->parsed()) {
        if (cmd_list->parsed()) return wco::cli::run_gallery_list(std::cout);
        if (cmd_build->parsed()) {
            for (const auto& kv : build_params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "error: --param expects K=V, got " << kv << "\n";
                    return wco::cli::kInputError;
                }
                build.params[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            if (*build_out_opt) build.out_file = build_out;
            return wco::cli::run_gallery_build(build, std::cout, std::cerr);
        }
        std::cerr << "error: gallery needs a subcommand (list | build)\n";
        return wco::cli::kInputError;
    }
    return wco::cli::kInputError;
}
