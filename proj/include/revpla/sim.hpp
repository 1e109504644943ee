#pragma once

/// @file sim.hpp
/// @brief Topological netlist simulator for Active/Sleep modes, exhaustive
/// equivalence checking against a PlaSpec, and the reversibility audit.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "revpla/bits.hpp"
#include "revpla/gates.hpp"
#include "revpla/netlist.hpp"
#include "revpla/plaspec.hpp"

namespace revpla {

enum class SimMode : std::uint8_t { Active, Sleep };

/// Three-valued logic level. Undefined models floating nodes of a plane
/// whose footer switch is off; it never appears in Active-mode results.
enum class SimValue : std::uint8_t { Zero, One, Undefined };

[[nodiscard]] constexpr char sim_value_char(SimValue value) {
    switch (value) {
        case SimValue::Zero: return '0';
        case SimValue::One: return '1';
        default: return 'X';
    }
}

[[nodiscard]] inline std::string sim_values_to_string(const std::vector<SimValue>& values) {
    std::string s;
    s.reserve(values.size());
    for (SimValue v : values) s.push_back(sim_value_char(v));
    return s;
}

/// Core evaluator with an explicit footer state per plane. A wire is
/// Undefined when the plane owning it is asleep or when anything on its
/// support path is Undefined. Supports netlists with up to 32 primary
/// inputs (word interface).
[[nodiscard]] inline std::vector<SimValue> simulate_planes(const RplaNetlist& netlist,
                                                           std::uint32_t input_word,
                                                           bool and_asleep, bool or_asleep) {
    if (netlist.num_inputs == 0 || netlist.num_inputs > 32) {
        throw std::invalid_argument("simulation supports 1 to 32 primary inputs");
    }
    if (netlist.primary_inputs.size() != netlist.num_inputs) {
        throw std::invalid_argument("malformed netlist: primary input list does not match width");
    }
    if (netlist.num_inputs < 32 && input_word >= (std::uint64_t{1} << netlist.num_inputs)) {
        throw std::invalid_argument("input word does not fit in " +
                                    std::to_string(netlist.num_inputs) + " bits");
    }
    const auto plane_asleep = [&](const std::optional<Plane>& plane) {
        return plane && (*plane == Plane::And ? and_asleep : or_asleep);
    };
    const auto wire_plane = [&](WireId wire) -> std::optional<Plane> {
        return wire < netlist.wire_planes.size() ? netlist.wire_planes[wire] : std::nullopt;
    };

    std::vector<SimValue> values(netlist.num_wires(), SimValue::Undefined);
    for (unsigned j = 0; j < netlist.primary_inputs.size(); ++j) {
        values.at(netlist.primary_inputs[j]) =
            word_bit(input_word, j, netlist.num_inputs) ? SimValue::One : SimValue::Zero;
    }
    for (WireId wire = 0; wire < netlist.num_wires(); ++wire) {
        const WireOrigin origin = netlist.wire_origins[wire];
        if (origin == WireOrigin::Constant0 || origin == WireOrigin::Constant1) {
            values[wire] = plane_asleep(wire_plane(wire))
                               ? SimValue::Undefined
                               : (origin == WireOrigin::Constant1 ? SimValue::One : SimValue::Zero);
        }
    }

    for (const GateInstance& gate : netlist.gates) {
        const unsigned arity = gate_arity(gate.kind);
        if (gate.inputs.size() != arity || gate.outputs.size() != arity) {
            throw std::invalid_argument("malformed gate: input/output count does not match arity");
        }
        const bool asleep = (gate.plane == Plane::And) ? and_asleep : or_asleep;
        bool defined = !asleep;
        bool in[3] = {false, false, false};
        for (unsigned i = 0; i < arity && defined; ++i) {
            const SimValue v = values.at(gate.inputs[i]);
            if (v == SimValue::Undefined) {
                defined = false;
            } else {
                in[i] = v == SimValue::One;
            }
        }
        if (!defined) continue;  // outputs stay Undefined
        if (gate.kind == GateKind::Feynman) {
            const auto out = eval_feynman(in[0], in[1]);
            values.at(gate.outputs[0]) = out.p ? SimValue::One : SimValue::Zero;
            values.at(gate.outputs[1]) = out.q ? SimValue::One : SimValue::Zero;
        } else {
            const auto out = eval_mux(in[0], in[1], in[2]);
            values.at(gate.outputs[0]) = out.p ? SimValue::One : SimValue::Zero;
            values.at(gate.outputs[1]) = out.q ? SimValue::One : SimValue::Zero;
            values.at(gate.outputs[2]) = out.r ? SimValue::One : SimValue::Zero;
        }
    }

    std::vector<SimValue> outputs;
    outputs.reserve(netlist.primary_outputs.size());
    for (WireId wire : netlist.primary_outputs) outputs.push_back(values.at(wire));
    return outputs;
}

/// Evaluates one input vector. Active drives every footer on regardless of
/// recorded domain states; Sleep turns the footer of every present sleep
/// domain off. A netlist without domains has no footers to cut, so Sleep
/// behaves like Active there.
[[nodiscard]] inline std::vector<SimValue> simulate(const RplaNetlist& netlist,
                                                    std::uint32_t input_word, SimMode mode) {
    bool and_asleep = false;
    bool or_asleep = false;
    if (mode == SimMode::Sleep) {
        for (const SleepDomain& domain : netlist.sleep_domains) {
            (domain.plane == Plane::And ? and_asleep : or_asleep) = true;
        }
    }
    return simulate_planes(netlist, input_word, and_asleep, or_asleep);
}

struct Counterexample {
    std::uint32_t input_word = 0;
    std::uint32_t expected = 0;
    std::uint32_t got = 0;  ///< Undefined output bits render as 0 but always count as mismatch
};

struct EquivalenceReport {
    bool pass = true;
    std::uint64_t vectors_checked = 0;
    std::vector<Counterexample> counterexamples;  ///< ascending by input word
};

/// Exhaustively compares Active-mode simulation with eval_spec over all
/// 2^n input words. Large spaces fan out across worker threads; the
/// result is identical regardless of worker count.
[[nodiscard]] inline EquivalenceReport verify_equivalence(const RplaNetlist& netlist,
                                                          const PlaSpec& spec) {
    if (netlist.num_inputs != spec.num_inputs || netlist.num_outputs != spec.num_outputs) {
        throw std::invalid_argument("netlist and spec disagree on input/output counts");
    }
    if (spec.num_inputs > kMaxInputs) {
        throw std::invalid_argument("exhaustive equivalence supports at most " +
                                    std::to_string(kMaxInputs) + " inputs");
    }
    const std::uint32_t count = std::uint32_t{1} << spec.num_inputs;
    const unsigned m = spec.num_outputs;

    const auto check_range = [&](std::uint32_t begin, std::uint32_t end,
                                 std::vector<Counterexample>& out) {
        for (std::uint32_t word = begin; word < end; ++word) {
            const std::vector<SimValue> sim = simulate(netlist, word, SimMode::Active);
            const std::uint32_t expected = eval_spec(spec, word);
            bool mismatch = false;
            std::uint32_t got = 0;
            for (unsigned j = 0; j < m; ++j) {
                const SimValue want = word_bit(expected, j, m) ? SimValue::One : SimValue::Zero;
                if (sim[j] == SimValue::One) got |= 1u << (m - 1 - j);
                if (sim[j] != want) mismatch = true;
            }
            if (mismatch) out.push_back(Counterexample{word, expected, got});
        }
    };

    EquivalenceReport report;
    report.vectors_checked = count;
    const unsigned workers =
        count >= 4096 ? std::max(1u, std::min(std::thread::hardware_concurrency(), 16u)) : 1u;
    if (workers == 1) {
        check_range(0, count, report.counterexamples);
    } else {
        std::vector<std::vector<Counterexample>> partial(workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        const std::uint32_t chunk = count / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint32_t begin = w * chunk;
            const std::uint32_t end = (w + 1 == workers) ? count : begin + chunk;
            threads.emplace_back(
                [&check_range, begin, end, &slot = partial[w]] { check_range(begin, end, slot); });
        }
        for (auto& t : threads) t.join();
        for (auto& slot : partial) {
            report.counterexamples.insert(report.counterexamples.end(), slot.begin(), slot.end());
        }
    }
    report.pass = report.counterexamples.empty();
    return report;
}

struct AuditViolation {
    std::string check;  ///< "bijectivity" | "arity" | "driver" | "consumer" | "acyclicity"
    std::string message;
};

struct AuditReport {
    std::vector<AuditViolation> violations;

    [[nodiscard]] bool clean() const { return violations.empty(); }
};

/// Structural reversibility audit: per-kind bijectivity, per-gate arity
/// equality, single-driver and single-consumer wiring, acyclicity.
/// Violations are report entries, not exceptions.
[[nodiscard]] inline AuditReport audit_reversibility(const RplaNetlist& netlist) {
    AuditReport report;
    const auto flag = [&report](const char* check, std::string message) {
        report.violations.push_back(AuditViolation{check, std::move(message)});
    };
    const std::size_t num_wires = netlist.num_wires();

    // (a) every gate kind used realizes a bijection
    bool kind_seen[2] = {false, false};
    for (const GateInstance& gate : netlist.gates) {
        kind_seen[gate.kind == GateKind::Mux ? 1 : 0] = true;
    }
    for (GateKind kind : {GateKind::Feynman, GateKind::Mux}) {
        if (kind_seen[kind == GateKind::Mux ? 1 : 0] && !check_bijective(truth_table(kind))) {
            flag("bijectivity", std::string{gate_kind_name(kind)} + " gate is not bijective");
        }
    }

    // (b) arity equality per gate
    for (std::size_t g = 0; g < netlist.gates.size(); ++g) {
        const GateInstance& gate = netlist.gates[g];
        const unsigned arity = gate_arity(gate.kind);
        if (gate.inputs.size() != gate.outputs.size()) {
            flag("arity", "gate " + std::to_string(g) + " has " +
                              std::to_string(gate.inputs.size()) + " inputs but " +
                              std::to_string(gate.outputs.size()) + " outputs");
        } else if (gate.inputs.size() != arity) {
            flag("arity", "gate " + std::to_string(g) + " has " +
                              std::to_string(gate.inputs.size()) + " lines, expected " +
                              std::to_string(arity));
        }
    }

    // driver / consumer bookkeeping
    std::vector<unsigned> drivers(num_wires, 0);
    std::vector<unsigned> consumers(num_wires, 0);
    for (std::size_t w = 0; w < num_wires; ++w) {
        if (netlist.wire_origins[w] != WireOrigin::GateOutput) drivers[w] = 1;
    }
    for (std::size_t g = 0; g < netlist.gates.size(); ++g) {
        for (WireId wire : netlist.gates[g].outputs) {
            if (wire >= num_wires) {
                flag("driver", "gate " + std::to_string(g) + " drives unknown wire " +
                                   std::to_string(wire));
            } else {
                drivers[wire] += 1;
            }
        }
        for (WireId wire : netlist.gates[g].inputs) {
            if (wire >= num_wires) {
                flag("consumer", "gate " + std::to_string(g) + " reads unknown wire " +
                                     std::to_string(wire));
            } else {
                consumers[wire] += 1;
            }
        }
    }
    for (std::size_t w = 0; w < num_wires; ++w) {
        if (drivers[w] == 0) {
            flag("driver", "wire " + std::to_string(w) + " has no driver");
        } else if (drivers[w] > 1) {
            flag("driver",
                 "wire " + std::to_string(w) + " has " + std::to_string(drivers[w]) + " drivers");
        }
        if (consumers[w] > 1) {
            flag("consumer", "wire " + std::to_string(w) + " feeds " +
                                 std::to_string(consumers[w]) + " gate inputs");
        }
    }
    for (WireId wire : netlist.primary_outputs) {
        if (wire < num_wires && consumers[wire] > 0) {
            flag("consumer",
                 "primary output wire " + std::to_string(wire) + " also feeds a gate input");
        }
    }

    // (d) every gate input is driven by an earlier gate, a primary input,
    // or a constant
    std::vector<bool> produced(num_wires, false);
    for (std::size_t g = 0; g < netlist.gates.size(); ++g) {
        for (WireId wire : netlist.gates[g].inputs) {
            if (wire < num_wires && netlist.wire_origins[wire] == WireOrigin::GateOutput &&
                !produced[wire]) {
                flag("acyclicity", "gate " + std::to_string(g) + " reads wire " +
                                       std::to_string(wire) +
                                       " which is not driven by an earlier gate");
            }
        }
        for (WireId wire : netlist.gates[g].outputs) {
            if (wire < num_wires) produced[wire] = true;
        }
    }

    return report;
}

}  // namespace revpla
