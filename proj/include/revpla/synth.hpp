#pragma once

/// @file synth.hpp
/// @brief Full-decode RPLA synthesis: reversible AND plane (all 2^n
/// minterms), reversible OR plane (sum of selected minterms per output),
/// and footer sleep-domain attachment.
///
/// Construction rules:
///  - fan-out only through explicit Feynman copy gates (B = 0),
///  - complements through Feynman NOT gates (B = 1),
///  - product terms through linear MUX AND chains (C = 0),
///  - sums through linear MUX OR chains (B = 1),
///  - every constant binding is a fresh ancilla wire,
///  - every unconsumed non-output gate wire is garbage; no uncomputation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "revpla/bits.hpp"
#include "revpla/netlist.hpp"
#include "revpla/plaspec.hpp"

namespace revpla {

/// Incremental netlist construction enforcing the single-driver and
/// single-consumer wiring discipline. Gates are appended in topological
/// order by construction; misuse throws std::logic_error.
class NetlistBuilder {
  public:
    WireId add_primary_input() {
        const WireId wire = new_wire(WireOrigin::PrimaryInput, std::nullopt);
        netlist_.primary_inputs.push_back(wire);
        return wire;
    }

    /// Fresh ancilla wire holding a constant, owned by `plane`.
    WireId add_constant(bool value, Plane plane) {
        const WireId wire = new_wire(value ? WireOrigin::Constant1 : WireOrigin::Constant0, plane);
        netlist_.constant_inputs.emplace_back(wire, value);
        return wire;
    }

    std::array<WireId, 2> add_feynman(WireId a, WireId b, Plane plane) {
        consume(a);
        consume(b);
        const std::array<WireId, 2> outs{new_wire(WireOrigin::GateOutput, plane),
                                         new_wire(WireOrigin::GateOutput, plane)};
        netlist_.gates.push_back(GateInstance{GateKind::Feynman, {a, b}, {outs[0], outs[1]}, plane});
        return outs;
    }

    std::array<WireId, 3> add_mux(WireId a, WireId b, WireId c, Plane plane) {
        consume(a);
        consume(b);
        consume(c);
        const std::array<WireId, 3> outs{new_wire(WireOrigin::GateOutput, plane),
                                         new_wire(WireOrigin::GateOutput, plane),
                                         new_wire(WireOrigin::GateOutput, plane)};
        netlist_.gates.push_back(
            GateInstance{GateKind::Mux, {a, b, c}, {outs[0], outs[1], outs[2]}, plane});
        return outs;
    }

    /// Closes the netlist: records primary outputs and minterm wires, then
    /// labels every unconsumed non-output gate wire as garbage.
    [[nodiscard]] RplaNetlist finish(std::vector<WireId> primary_outputs,
                                     std::vector<WireId> minterm_wires = {}) {
        std::vector<bool> is_output(netlist_.num_wires(), false);
        for (WireId wire : primary_outputs) {
            if (wire >= netlist_.num_wires()) throw std::logic_error("unknown primary output wire");
            if (consumed_[wire]) throw std::logic_error("primary output wire is consumed by a gate");
            is_output[wire] = true;
        }
        for (WireId wire = 0; wire < netlist_.num_wires(); ++wire) {
            if (netlist_.wire_origins[wire] == WireOrigin::GateOutput && !consumed_[wire] &&
                !is_output[wire]) {
                netlist_.garbage_wires.push_back(wire);
            }
        }
        netlist_.num_inputs = static_cast<unsigned>(netlist_.primary_inputs.size());
        netlist_.num_outputs = static_cast<unsigned>(primary_outputs.size());
        netlist_.primary_outputs = std::move(primary_outputs);
        netlist_.minterm_wires = std::move(minterm_wires);
        return std::move(netlist_);
    }

  private:
    WireId new_wire(WireOrigin origin, std::optional<Plane> plane) {
        const WireId wire = static_cast<WireId>(netlist_.num_wires());
        netlist_.wire_origins.push_back(origin);
        netlist_.wire_planes.push_back(plane);
        consumed_.push_back(false);
        return wire;
    }

    void consume(WireId wire) {
        if (wire >= netlist_.num_wires()) throw std::logic_error("unknown wire");
        if (consumed_[wire]) throw std::logic_error("wire consumed twice");
        consumed_[wire] = true;
    }

    RplaNetlist netlist_;
    std::vector<bool> consumed_;
};

namespace detail {

/// `count` usable instances of `source` via a linear Feynman copy chain;
/// count - 1 gates. The chain runs along the P line; the tapped Q copies
/// come first in the result, the surviving through-line last.
inline std::vector<WireId> copy_instances(NetlistBuilder& nb, WireId source, std::size_t count,
                                          Plane plane) {
    std::vector<WireId> instances;
    instances.reserve(count);
    WireId through = source;
    for (std::size_t i = 1; i < count; ++i) {
        const auto [p, q] = nb.add_feynman(through, nb.add_constant(false, plane), plane);
        instances.push_back(q);
        through = p;
    }
    if (count > 0) instances.push_back(through);
    return instances;
}

/// Builds all 2^n minterm wires from the given primary-input wires.
/// Per input: one Feynman NOT supplies the complement, then copy chains
/// distribute each literal polarity to its 2^(n-1) product terms, and
/// linear MUX AND chains (C = 0) reduce the n literals of each minterm.
inline std::vector<WireId> build_minterm_decoder(NetlistBuilder& nb,
                                                 const std::vector<WireId>& inputs) {
    const unsigned n = static_cast<unsigned>(inputs.size());
    const std::size_t per_polarity = std::size_t{1} << (n - 1);

    // literals[j][polarity]: instance queue for input j; [0] = complement
    std::vector<std::array<std::vector<WireId>, 2>> literals(n);
    std::vector<std::array<std::size_t, 2>> next(n, {0, 0});
    for (unsigned j = 0; j < n; ++j) {
        const auto [pos, neg] = nb.add_feynman(inputs[j], nb.add_constant(true, Plane::And),
                                               Plane::And);
        literals[j][1] = copy_instances(nb, pos, per_polarity, Plane::And);
        literals[j][0] = copy_instances(nb, neg, per_polarity, Plane::And);
    }

    const auto take_literal = [&](unsigned j, bool polarity) {
        auto& queue = literals[j][polarity ? 1 : 0];
        return queue[next[j][polarity ? 1 : 0]++];
    };

    std::vector<WireId> minterms;
    minterms.reserve(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        WireId partial = take_literal(0, word_bit(m, 0, n));
        for (unsigned j = 1; j < n; ++j) {
            const auto [p, q, r] = nb.add_mux(take_literal(j, word_bit(m, j, n)), partial,
                                              nb.add_constant(false, Plane::And), Plane::And);
            partial = r;
        }
        minterms.push_back(partial);
    }
    return minterms;
}

/// OR-reduces term wires with a linear MUX OR chain (B = 1). An empty
/// term list yields a fresh constant-0 ancilla routed straight through.
inline WireId or_chain(NetlistBuilder& nb, const std::vector<WireId>& terms) {
    if (terms.empty()) return nb.add_constant(false, Plane::Or);
    WireId partial = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) {
        const auto [p, q, r] = nb.add_mux(partial, nb.add_constant(true, Plane::Or), terms[i],
                                          Plane::Or);
        partial = r;
    }
    return partial;
}

/// Fans each product-term line out to the outputs consuming it (explicit
/// Feynman copies) and OR-reduces per output.
inline std::vector<WireId> build_or_reduction(NetlistBuilder& nb,
                                              const std::vector<WireId>& term_wires,
                                              const std::vector<std::vector<std::uint32_t>>& sets) {
    std::vector<std::size_t> consumers(term_wires.size(), 0);
    for (const auto& set : sets) {
        for (std::uint32_t index : set) consumers[index] += 1;
    }
    std::vector<std::vector<WireId>> instances(term_wires.size());
    std::vector<std::size_t> used(term_wires.size(), 0);
    for (std::size_t i = 0; i < term_wires.size(); ++i) {
        if (consumers[i] > 0) {
            instances[i] = copy_instances(nb, term_wires[i], consumers[i], Plane::Or);
        }
    }
    std::vector<WireId> outputs;
    outputs.reserve(sets.size());
    for (const auto& set : sets) {
        std::vector<WireId> terms;
        terms.reserve(set.size());
        for (std::uint32_t index : set) terms.push_back(instances[index][used[index]++]);
        outputs.push_back(or_chain(nb, terms));
    }
    return outputs;
}

inline void check_input_count(unsigned n) {
    if (n < 1 || n > kMaxInputs) {
        throw std::invalid_argument("input count must be between 1 and " +
                                    std::to_string(kMaxInputs));
    }
}

inline std::vector<std::vector<std::uint32_t>> normalize_minterm_sets(
    unsigned n, std::vector<std::vector<std::uint32_t>> sets) {
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (auto& set : sets) {
        for (std::uint32_t index : set) {
            if (index >= limit) {
                throw std::invalid_argument("minterm index " + std::to_string(index) +
                                            " out of range for " + std::to_string(n) + " inputs");
            }
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    return sets;
}

}  // namespace detail

/// Full-decode reversible AND plane packaged as an observable netlist:
/// n primary inputs, 2^n primary outputs where output i is minterm i
/// (exactly one output is 1 for any input word).
[[nodiscard]] inline RplaNetlist build_and_plane(unsigned n) {
    detail::check_input_count(n);
    NetlistBuilder nb;
    std::vector<WireId> inputs;
    inputs.reserve(n);
    for (unsigned j = 0; j < n; ++j) inputs.push_back(nb.add_primary_input());
    std::vector<WireId> minterms = detail::build_minterm_decoder(nb, inputs);
    return nb.finish(minterms, minterms);
}

/// Standalone reversible OR plane: 2^n primary inputs standing for the
/// product-term lines, one primary output per minterm set. Shared lines
/// fan out through explicit Feynman copies; an empty set becomes a
/// constant-0 output.
[[nodiscard]] inline RplaNetlist build_or_plane(unsigned n,
                                                std::vector<std::vector<std::uint32_t>> minterm_sets) {
    detail::check_input_count(n);
    const auto sets = detail::normalize_minterm_sets(n, std::move(minterm_sets));
    NetlistBuilder nb;
    std::vector<WireId> term_lines;
    term_lines.reserve(std::size_t{1} << n);
    for (std::uint32_t i = 0; i < (1u << n); ++i) term_lines.push_back(nb.add_primary_input());
    std::vector<WireId> outputs = detail::build_or_reduction(nb, term_lines, sets);
    return nb.finish(std::move(outputs), std::move(term_lines));
}

/// Composes the full-decode AND plane with the OR plane for the given
/// function. For every input word the synthesized netlist simulates to
/// eval_spec; sleep domains are not yet attached.
[[nodiscard]] inline RplaNetlist synthesize(const PlaSpec& spec) {
    detail::check_input_count(spec.num_inputs);
    if (spec.num_outputs < 1 || spec.num_outputs > kMaxInputs) {
        throw std::invalid_argument("output count must be between 1 and " +
                                    std::to_string(kMaxInputs));
    }
    for (const Cube& cube : spec.cubes) {
        if (cube.inputs.size() != spec.num_inputs || cube.outputs.size() != spec.num_outputs) {
            throw std::invalid_argument("cube width does not match the declared input/output counts");
        }
    }

    NetlistBuilder nb;
    std::vector<WireId> inputs;
    inputs.reserve(spec.num_inputs);
    for (unsigned j = 0; j < spec.num_inputs; ++j) inputs.push_back(nb.add_primary_input());
    std::vector<WireId> minterms = detail::build_minterm_decoder(nb, inputs);

    std::vector<std::vector<std::uint32_t>> sets;
    sets.reserve(spec.num_outputs);
    for (unsigned j = 0; j < spec.num_outputs; ++j) sets.push_back(minterm_set(spec, j));
    std::vector<WireId> outputs = detail::build_or_reduction(nb, minterms, sets);
    return nb.finish(std::move(outputs), std::move(minterms));
}

/// Returns a copy with one Active footer domain per plane. Attaching
/// domains does not change the logic function in Active mode.
[[nodiscard]] inline RplaNetlist attach_sleep(RplaNetlist netlist) {
    if (!netlist.sleep_domains.empty()) {
        throw std::invalid_argument("netlist already has sleep domains attached");
    }
    netlist.sleep_domains.push_back(SleepDomain{Plane::And, SwitchKind::Footer, SleepState::Active});
    netlist.sleep_domains.push_back(SleepDomain{Plane::Or, SwitchKind::Footer, SleepState::Active});
    return netlist;
}

}  // namespace revpla
