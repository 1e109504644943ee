#pragma once

/// @file report.hpp
/// @brief Deterministic rendering of run reports as text, json, or csv.
/// Identical inputs always produce byte-identical output; timestamps are
/// included only when explicitly requested.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "revpla/bits.hpp"
#include "revpla/netlist.hpp"
#include "revpla/power.hpp"
#include "revpla/sim.hpp"

namespace revpla {

struct NetlistMetrics {
    unsigned inputs = 0;
    unsigned outputs = 0;
    std::uint64_t gates = 0;
    std::uint64_t feynman = 0;
    std::uint64_t mux = 0;
    std::uint64_t quantum_cost = 0;
    std::uint64_t garbage = 0;
    std::uint64_t ancilla = 0;
    std::uint64_t minterms = 0;
    std::uint64_t wires = 0;
};

[[nodiscard]] inline NetlistMetrics netlist_metrics(const RplaNetlist& netlist) {
    const GateCounts counts = count_gates(netlist);
    NetlistMetrics metrics;
    metrics.inputs = netlist.num_inputs;
    metrics.outputs = netlist.num_outputs;
    metrics.gates = counts.total();
    metrics.feynman = counts.feynman;
    metrics.mux = counts.mux;
    metrics.quantum_cost = quantum_cost(netlist);
    metrics.garbage = netlist.garbage_wires.size();
    metrics.ancilla = netlist.constant_inputs.size();
    metrics.minterms = netlist.minterm_wires.size();
    metrics.wires = netlist.num_wires();
    return metrics;
}

struct SimResult {
    std::string input_bits;
    SimMode mode = SimMode::Active;
    std::string output_bits;
};

/// One run's emitted content; sections are filled per subcommand.
struct Report {
    std::optional<NetlistMetrics> netlist;
    std::optional<std::string> netlist_dump;  ///< text format only
    std::optional<SimResult> sim;
    std::optional<EquivalenceReport> equivalence;
    std::optional<AuditReport> audit;
    std::optional<PowerReport> power;
    std::optional<std::string> power_note;  ///< shown when the table is unavailable
    std::optional<std::string> timestamp;
};

/// Fixed human-readable numeric rendering: up to six significant digits.
[[nodiscard]] inline std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

/// Percentage with one decimal, e.g. 0.40812 -> "40.8%".
[[nodiscard]] inline std::string format_percent(double ratio) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.1f%%", ratio * 100.0);
    return buffer;
}

namespace detail {

inline void render_power_text(const PowerReport& power, std::string& out) {
    const unsigned n = power.num_lines;
    if (!power.rows.empty()) {
        out += "power table (pW)\n";
        out += "vector";
        for (unsigned i = 1; i <= n; ++i) out += " ungated_pm" + std::to_string(i);
        for (unsigned i = 1; i <= n; ++i) out += " gated_pm" + std::to_string(i);
        out += '\n';
        for (const PowerRow& row : power.rows) {
            out += word_to_bits(row.input_word, n);
            for (double v : row.ungated_pw) out += ' ' + format_number(v);
            for (double v : row.gated_pw) out += ' ' + format_number(v);
            out += '\n';
        }
        out += "per-line gated/ungated consumption ratio:\n";
        for (unsigned i = 0; i < n; ++i) {
            const double ratio = power.per_line_ratio[i];
            out += "  pm" + std::to_string(i + 1) + ": " + format_number(ratio) + " (" +
                   format_percent(ratio) + "), reduction " + format_number(1.0 - ratio) + " (" +
                   format_percent(1.0 - ratio) + ")\n";
        }
        const double ratio = power.consumption_ratio;
        out += "all-ones vector ratio: " + format_number(ratio) + " (" + format_percent(ratio) +
               "), reduction " + format_number(1.0 - ratio) + " (" + format_percent(1.0 - ratio) +
               ")\n";
    }
    if (power.leakage) {
        const LeakageReport& l = *power.leakage;
        out += "leakage model:\n";
        out += "  vgnd_raw = " + format_number(l.vgnd_raw) + " V\n";
        out += "  vgnd = " + format_number(l.vgnd) + " V (clamped: ";
        out += l.clamped ? "yes" : "no";
        out += ")\n";
        out += "  circuit_leakage = " + format_number(l.circuit_leakage_a) + " A\n";
        out += "  sleep_active_ratio = " + format_number(l.sleep_active) + "\n";
        out += "  balance_residual = " + format_number(l.balance_residual_a) + " A\n";
    }
    if (power.average_power_w) {
        out += "average_power = " + format_number(*power.average_power_w) + " W\n";
    }
}

}  // namespace detail

[[nodiscard]] inline std::string render_text(const Report& report) {
    std::string out;
    if (report.netlist) {
        const NetlistMetrics& m = *report.netlist;
        out += "netlist: inputs=" + std::to_string(m.inputs) +
               " outputs=" + std::to_string(m.outputs) + " gates=" + std::to_string(m.gates) +
               " (feynman=" + std::to_string(m.feynman) + " mux=" + std::to_string(m.mux) +
               ") quantum_cost=" + std::to_string(m.quantum_cost) +
               " garbage=" + std::to_string(m.garbage) + " ancilla=" + std::to_string(m.ancilla) +
               " minterms=" + std::to_string(m.minterms) + " wires=" + std::to_string(m.wires) +
               "\n";
    }
    if (report.sim) {
        out += "sim: input=" + report.sim->input_bits;
        out += " mode=";
        out += report.sim->mode == SimMode::Active ? "active" : "sleep";
        out += " outputs=" + report.sim->output_bits + "\n";
    }
    if (report.equivalence) {
        const EquivalenceReport& eq = *report.equivalence;
        const std::uint64_t matched = eq.vectors_checked - eq.counterexamples.size();
        if (eq.pass) {
            out += "PASS, " + std::to_string(matched) + "/" + std::to_string(eq.vectors_checked) +
                   " vectors\n";
        } else {
            out += "FAIL, " + std::to_string(matched) + "/" + std::to_string(eq.vectors_checked) +
                   " vectors, " + std::to_string(eq.counterexamples.size()) + " counterexamples\n";
            const unsigned n = report.netlist ? report.netlist->inputs : 0;
            const unsigned m = report.netlist ? report.netlist->outputs : 0;
            for (const Counterexample& cex : eq.counterexamples) {
                out += "  counterexample: input=" +
                       (n ? word_to_bits(cex.input_word, n) : std::to_string(cex.input_word)) +
                       " expected=" + (m ? word_to_bits(cex.expected, m) : std::to_string(cex.expected)) +
                       " got=" + (m ? word_to_bits(cex.got, m) : std::to_string(cex.got)) + "\n";
            }
        }
    }
    if (report.audit) {
        if (report.audit->clean()) {
            out += "audit: clean\n";
        } else {
            out += "audit: " + std::to_string(report.audit->violations.size()) + " violations\n";
            for (const AuditViolation& v : report.audit->violations) {
                out += "  [" + v.check + "] " + v.message + "\n";
            }
        }
    }
    if (report.power) detail::render_power_text(*report.power, out);
    if (report.power_note) out += "power table: " + *report.power_note + "\n";
    if (report.netlist_dump) out += *report.netlist_dump;
    if (report.timestamp) out += "timestamp: " + *report.timestamp + "\n";
    return out;
}

[[nodiscard]] inline std::string render_json(const Report& report) {
    nlohmann::json doc = nlohmann::json::object();
    if (report.netlist) {
        const NetlistMetrics& m = *report.netlist;
        doc["netlist"] = {{"inputs", m.inputs},     {"outputs", m.outputs},
                          {"gates", m.gates},       {"feynman", m.feynman},
                          {"mux", m.mux},           {"quantum_cost", m.quantum_cost},
                          {"garbage", m.garbage},   {"ancilla", m.ancilla},
                          {"minterms", m.minterms}, {"wires", m.wires}};
    }
    if (report.sim) {
        doc["sim"] = {{"input", report.sim->input_bits},
                      {"mode", report.sim->mode == SimMode::Active ? "active" : "sleep"},
                      {"outputs", report.sim->output_bits}};
    }
    if (report.equivalence) {
        const EquivalenceReport& eq = *report.equivalence;
        nlohmann::json counterexamples = nlohmann::json::array();
        const unsigned n = report.netlist ? report.netlist->inputs : 0;
        const unsigned m = report.netlist ? report.netlist->outputs : 0;
        for (const Counterexample& cex : eq.counterexamples) {
            counterexamples.push_back(
                {{"input", n ? word_to_bits(cex.input_word, n) : std::to_string(cex.input_word)},
                 {"expected", m ? word_to_bits(cex.expected, m) : std::to_string(cex.expected)},
                 {"got", m ? word_to_bits(cex.got, m) : std::to_string(cex.got)}});
        }
        doc["equivalence"] = {{"pass", eq.pass},
                              {"vectors", eq.vectors_checked},
                              {"counterexamples", counterexamples}};
    }
    if (report.audit) {
        nlohmann::json violations = nlohmann::json::array();
        for (const AuditViolation& v : report.audit->violations) {
            violations.push_back({{"check", v.check}, {"message", v.message}});
        }
        doc["audit"] = {{"clean", report.audit->clean()}, {"violations", violations}};
    }
    if (report.power) {
        const PowerReport& power = *report.power;
        nlohmann::json table = nlohmann::json::array();
        for (const PowerRow& row : power.rows) {
            table.push_back({{"vector", word_to_bits(row.input_word, power.num_lines)},
                             {"ungated_pw", row.ungated_pw},
                             {"gated_pw", row.gated_pw}});
        }
        nlohmann::json power_doc = {{"lines", power.num_lines}, {"table", table}};
        if (!power.rows.empty()) {
            std::vector<double> reductions;
            reductions.reserve(power.per_line_ratio.size());
            for (double r : power.per_line_ratio) reductions.push_back(1.0 - r);
            power_doc["per_line_ratio"] = power.per_line_ratio;
            power_doc["per_line_reduction"] = reductions;
            power_doc["ratio"] = power.consumption_ratio;
            power_doc["reduction"] = 1.0 - power.consumption_ratio;
        } else {
            power_doc["ratio"] = nullptr;
        }
        if (power.leakage) {
            const LeakageReport& l = *power.leakage;
            power_doc["leakage"] = {{"vdd", l.vdd},
                                    {"vgnd_raw", l.vgnd_raw},
                                    {"vgnd", l.vgnd},
                                    {"clamped", l.clamped},
                                    {"circuit_leakage_a", l.circuit_leakage_a},
                                    {"sleep_active_ratio", l.sleep_active},
                                    {"balance_residual_a", l.balance_residual_a}};
        }
        if (power.average_power_w) power_doc["average_power_w"] = *power.average_power_w;
        if (report.power_note) power_doc["note"] = *report.power_note;
        doc["power"] = power_doc;
    }
    if (report.timestamp) doc["timestamp"] = *report.timestamp;
    return doc.dump(2) + "\n";
}

/// Power table as csv rows `vector,pm_index,ungated_pw,gated_pw`.
[[nodiscard]] inline std::string render_power_csv(const PowerReport& power) {
    std::string out = "vector,pm_index,ungated_pw,gated_pw\n";
    for (const PowerRow& row : power.rows) {
        const std::string vector = word_to_bits(row.input_word, power.num_lines);
        for (unsigned i = 0; i < power.num_lines; ++i) {
            out += vector + ',' + std::to_string(i + 1) + ',' + format_number(row.ungated_pw[i]) +
                   ',' + format_number(row.gated_pw[i]) + '\n';
        }
    }
    return out;
}

}  // namespace revpla
