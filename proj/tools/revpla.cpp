// revpla: reversible PLA synthesis, verification, and power-gating analysis.
//
// Exit codes: 0 success, 1 verification failure (equivalence
// counterexamples or audit violations), 2 input/format/usage errors.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "revpla/revpla.hpp"

namespace {

using namespace revpla;

enum class OutputFormat { Text, Json, Csv };

struct CommonOptions {
    std::string format = "text";
    std::string out_path;
    bool timestamps = false;
};

void add_common_options(CLI::App& cmd, CommonOptions& opts, bool allow_csv) {
    cmd.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember(allow_csv ? std::vector<std::string>{"text", "json", "csv"}
                                        : std::vector<std::string>{"text", "json"}))
        ->capture_default_str();
    cmd.add_option("--out", opts.out_path, "Write the report to a file instead of stdout");
    cmd.add_flag("--timestamps", opts.timestamps, "Include a timestamp in the report body");
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    return OutputFormat::Text;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

PlaSpec load_pla(const std::string& path) {
    auto in = open_input(path);
    try {
        return parse_pla(in);
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

ParamFileContents load_params(const std::string& path) {
    auto in = open_input(path);
    try {
        return parse_params(in);
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

CalibrationTable load_calibration(const std::string& name) {
    if (name == "table1") return CalibrationTable::table1();
    auto in = open_input(name);
    try {
        return parse_calibration(in);
    } catch (const FormatError& e) {
        throw FormatError(name + ": " + e.what());
    }
}

std::string current_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buffer[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buffer;
}

void emit(const std::string& body, const CommonOptions& opts) {
    if (opts.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + opts.out_path);
    out << body;
}

void finalize(Report& report, const CommonOptions& opts) {
    if (opts.timestamps) report.timestamp = current_timestamp();
}

/// Fills the power section from parameters and an optional calibration.
/// The wattmeter table needs a calibration with exactly `lines` entries;
/// otherwise only the leakage chain is reported.
void fill_power(Report& report, const ParamFileContents& params, const CalibrationTable& calib,
                unsigned lines) {
    PowerReport power;
    if (calib.num_lines() == lines) {
        power = power_table(lines, calib);
    } else {
        report.power_note = "calibration has " + std::to_string(calib.num_lines()) +
                            " lines but the function has " + std::to_string(lines) +
                            " inputs; table skipped";
        power.num_lines = lines;
    }
    power.leakage = leakage_report(params.device);
    if (params.activity) {
        power.average_power_w = total_average_power(*params.activity, params.device.vdd);
    }
    report.power = power;
}

int run_synth(const std::string& pla_path, const CommonOptions& opts) {
    const PlaSpec spec = load_pla(pla_path);
    const RplaNetlist netlist = attach_sleep(synthesize(spec));
    Report report;
    report.netlist = netlist_metrics(netlist);
    if (parse_format(opts.format) == OutputFormat::Text) {
        report.netlist_dump = to_netlist_text(netlist);
    }
    finalize(report, opts);
    emit(parse_format(opts.format) == OutputFormat::Json ? render_json(report)
                                                         : render_text(report),
         opts);
    return 0;
}

int run_sim(const std::string& pla_path, const std::string& vector_bits, const std::string& mode,
            const CommonOptions& opts) {
    const PlaSpec spec = load_pla(pla_path);
    if (vector_bits.size() != spec.num_inputs) {
        throw std::invalid_argument("--vector must have exactly " +
                                    std::to_string(spec.num_inputs) + " bits");
    }
    const std::uint32_t word = bits_to_word(vector_bits);
    const SimMode sim_mode = mode == "sleep" ? SimMode::Sleep : SimMode::Active;
    const RplaNetlist netlist = attach_sleep(synthesize(spec));
    const std::vector<SimValue> values = simulate(netlist, word, sim_mode);

    Report report;
    report.netlist = netlist_metrics(netlist);
    report.sim = SimResult{vector_bits, sim_mode, sim_values_to_string(values)};
    finalize(report, opts);
    emit(parse_format(opts.format) == OutputFormat::Json ? render_json(report)
                                                         : render_text(report),
         opts);
    return 0;
}

int run_check(const std::string& pla_path, const CommonOptions& opts) {
    const PlaSpec spec = load_pla(pla_path);
    const RplaNetlist netlist = attach_sleep(synthesize(spec));
    Report report;
    report.netlist = netlist_metrics(netlist);
    report.equivalence = verify_equivalence(netlist, spec);
    report.audit = audit_reversibility(netlist);
    finalize(report, opts);
    emit(parse_format(opts.format) == OutputFormat::Json ? render_json(report)
                                                         : render_text(report),
         opts);
    return report.equivalence->pass && report.audit->clean() ? 0 : 1;
}

int run_power(const std::string& param_path, const std::string& calib_name,
              const CommonOptions& opts) {
    const ParamFileContents params = load_params(param_path);
    const CalibrationTable calib = load_calibration(calib_name);
    Report report;
    fill_power(report, params, calib, calib.num_lines());
    finalize(report, opts);
    switch (parse_format(opts.format)) {
        case OutputFormat::Json: emit(render_json(report), opts); break;
        case OutputFormat::Csv: emit(render_power_csv(*report.power), opts); break;
        default: emit(render_text(report), opts); break;
    }
    return 0;
}

int run_report(const std::string& pla_path, const std::string& param_path,
               const std::string& calib_name, const CommonOptions& opts) {
    const PlaSpec spec = load_pla(pla_path);
    const ParamFileContents params = load_params(param_path);
    const CalibrationTable calib = load_calibration(calib_name);
    const RplaNetlist netlist = attach_sleep(synthesize(spec));

    Report report;
    report.netlist = netlist_metrics(netlist);
    report.equivalence = verify_equivalence(netlist, spec);
    report.audit = audit_reversibility(netlist);
    fill_power(report, params, calib, spec.num_inputs);
    finalize(report, opts);
    emit(parse_format(opts.format) == OutputFormat::Json ? render_json(report)
                                                         : render_text(report),
         opts);
    return report.equivalence->pass && report.audit->clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reversible PLA synthesis, verification, and power-gating analysis"};
    app.require_subcommand(1);

    std::string pla_path;
    std::string vector_bits;
    std::string mode = "active";
    std::string param_path;
    std::string calib_name = "table1";
    CommonOptions synth_opts, sim_opts, check_opts, power_opts, report_opts;

    CLI::App* synth_cmd = app.add_subcommand("synth", "Synthesize a PLA into a gated netlist");
    synth_cmd->add_option("pla", pla_path, "PLA function file")->required();
    add_common_options(*synth_cmd, synth_opts, false);

    CLI::App* sim_cmd = app.add_subcommand("sim", "Synthesize and simulate one input vector");
    sim_cmd->add_option("pla", pla_path, "PLA function file")->required();
    sim_cmd->add_option("--vector", vector_bits, "Input vector bits, line 1 first")->required();
    sim_cmd->add_option("--mode", mode, "Footer state")
        ->check(CLI::IsMember({"active", "sleep"}))
        ->capture_default_str();
    add_common_options(*sim_cmd, sim_opts, false);

    CLI::App* check_cmd =
        app.add_subcommand("check", "Exhaustive equivalence check plus reversibility audit");
    check_cmd->add_option("pla", pla_path, "PLA function file")->required();
    add_common_options(*check_cmd, check_opts, false);

    CLI::App* power_cmd = app.add_subcommand("power", "Leakage model and wattmeter power table");
    power_cmd->add_option("--params", param_path, "Device parameter file")->required();
    power_cmd->add_option("--calib", calib_name, "Calibration file or 'table1'")
        ->capture_default_str();
    add_common_options(*power_cmd, power_opts, true);

    CLI::App* report_cmd = app.add_subcommand("report", "Full structured report for one function");
    report_cmd->add_option("pla", pla_path, "PLA function file")->required();
    report_cmd->add_option("--params", param_path, "Device parameter file")->required();
    report_cmd->add_option("--calib", calib_name, "Calibration file or 'table1'")
        ->capture_default_str();
    add_common_options(*report_cmd, report_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (synth_cmd->parsed()) return run_synth(pla_path, synth_opts);
        if (sim_cmd->parsed()) return run_sim(pla_path, vector_bits, mode, sim_opts);
        if (check_cmd->parsed()) return run_check(pla_path, check_opts);
        if (power_cmd->parsed()) return run_power(param_path, calib_name, power_opts);
        if (report_cmd->parsed()) return run_report(pla_path, param_path, calib_name, report_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
