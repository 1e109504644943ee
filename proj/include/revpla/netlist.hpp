#pragma once

/// @file netlist.hpp
/// @brief Gate-level RPLA netlist: wires, gate instances, plane tags and
/// footer sleep domains.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revpla/gates.hpp"

namespace revpla {

using WireId = std::uint32_t;

enum class WireOrigin : std::uint8_t { PrimaryInput, Constant0, Constant1, GateOutput };

/// The two arrays of the PLA.
enum class Plane : std::uint8_t { And, Or };

[[nodiscard]] constexpr std::string_view plane_name(Plane plane) {
    return plane == Plane::And ? "and" : "or";
}

enum class SwitchKind : std::uint8_t { Footer };
enum class SleepState : std::uint8_t { Active, Sleep };

/// Power-gating domain covering every gate of one plane. The footer switch
/// sits between the plane and ground; turning it off floats the plane's
/// virtual ground node.
struct SleepDomain {
    Plane plane;
    SwitchKind switch_kind = SwitchKind::Footer;
    SleepState state = SleepState::Active;
};

/// One reversible gate with its wire bindings. Input and output lists both
/// have the gate's arity.
struct GateInstance {
    GateKind kind;
    std::vector<WireId> inputs;
    std::vector<WireId> outputs;
    Plane plane;
};

/// Gate list in topological order plus wire bookkeeping.
///
/// Wiring discipline: every wire has exactly one driver (a primary input,
/// a constant, or one gate output) and feeds at most one gate input.
/// Fan-out exists only through explicit Feynman copy gates. Every gate
/// output that is neither consumed nor a primary output is a garbage wire.
struct RplaNetlist {
    unsigned num_inputs = 0;
    unsigned num_outputs = 0;
    std::vector<GateInstance> gates;
    std::vector<WireOrigin> wire_origins;           ///< indexed by WireId
    std::vector<std::optional<Plane>> wire_planes;  ///< plane owning each wire, if any
    std::vector<WireId> primary_inputs;
    std::vector<WireId> primary_outputs;
    std::vector<WireId> minterm_wires;  ///< 2^n product-term wires, index = minterm
    std::vector<WireId> garbage_wires;
    std::vector<std::pair<WireId, bool>> constant_inputs;  ///< ancilla wires and their values
    std::vector<SleepDomain> sleep_domains;

    [[nodiscard]] std::size_t num_wires() const { return wire_origins.size(); }
};

struct GateCounts {
    std::uint64_t feynman = 0;
    std::uint64_t mux = 0;

    [[nodiscard]] std::uint64_t total() const { return feynman + mux; }
};

[[nodiscard]] inline GateCounts count_gates(const RplaNetlist& netlist) {
    GateCounts counts;
    for (const GateInstance& gate : netlist.gates) {
        (gate.kind == GateKind::Feynman ? counts.feynman : counts.mux) += 1;
    }
    return counts;
}

/// Sum of per-gate quantum costs; additive under netlist concatenation.
[[nodiscard]] inline std::uint64_t quantum_cost(const RplaNetlist& netlist) {
    std::uint64_t cost = 0;
    for (const GateInstance& gate : netlist.gates) {
        cost += quantum_cost(gate.kind);
    }
    return cost;
}

/// Line-oriented text dump: header directives followed by one gate per
/// line (kind, input wires, output wires, plane tag).
[[nodiscard]] inline std::string to_netlist_text(const RplaNetlist& netlist) {
    std::string out;
    const auto append_list = [&out](std::string_view head, const std::vector<WireId>& wires) {
        out += head;
        for (WireId w : wires) {
            out += ' ';
            out += std::to_string(w);
        }
        out += '\n';
    };
    append_list(".inputs", netlist.primary_inputs);
    append_list(".outputs", netlist.primary_outputs);
    append_list(".minterms", netlist.minterm_wires);
    out += ".constants";
    for (const auto& [wire, value] : netlist.constant_inputs) {
        out += ' ';
        out += std::to_string(wire);
        out += value ? "=1" : "=0";
    }
    out += '\n';
    append_list(".garbage", netlist.garbage_wires);
    for (const SleepDomain& domain : netlist.sleep_domains) {
        out += ".sleep ";
        out += plane_name(domain.plane);
        out += " footer ";
        out += domain.state == SleepState::Active ? "active" : "sleep";
        out += '\n';
    }
    for (const GateInstance& gate : netlist.gates) {
        out += gate_kind_name(gate.kind);
        for (WireId w : gate.inputs) {
            out += ' ';
            out += std::to_string(w);
        }
        out += " ->";
        for (WireId w : gate.outputs) {
            out += ' ';
            out += std::to_string(w);
        }
        out += ' ';
        out += plane_name(gate.plane);
        out += '\n';
    }
    out += ".end\n";
    return out;
}

}  // namespace revpla
