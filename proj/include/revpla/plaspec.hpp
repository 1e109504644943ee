#pragma once

/// @file plaspec.hpp
/// @brief Two-level PLA function format: parser, serializer, and the
/// brute-force sum-of-products evaluator used as the synthesis oracle.
///
/// The accepted text format is a strict subset of the classical PLA
/// interchange format:
///
///     .i <n>        mandatory, number of inputs (1..16)
///     .o <m>        mandatory, number of outputs (1..16)
///     .p <count>    optional, must match the number of cube lines
///     <in> <out>    one cube per line; <in> over {0,1,-}, <out> over {0,1}
///     .e            terminator; anything after it is ignored
///
/// `#` starts a comment; blank lines are skipped; `\n` and `\r\n` both work.
/// Overlapping cubes OR together.

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "revpla/bits.hpp"
#include "revpla/errors.hpp"

namespace revpla {

/// One product-term line of a PLA file.
struct Cube {
    std::string inputs;   ///< over {0,1,-}; '-' matches either value
    std::string outputs;  ///< over {0,1}
};

/// A parsed Boolean function specification: n inputs, m outputs, ordered
/// cube list. Immutable after parsing.
struct PlaSpec {
    unsigned num_inputs = 0;
    unsigned num_outputs = 0;
    std::vector<Cube> cubes;
};

namespace detail {

inline unsigned parse_width_directive(const std::string& arg, const char* what, unsigned line) {
    unsigned value = 0;
    std::size_t pos = 0;
    try {
        const int v = std::stoi(arg, &pos);
        if (v <= 0) throw std::out_of_range("");
        value = static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw FormatError(std::string{what} + " expects a positive integer", line);
    }
    if (pos != arg.size()) {
        throw FormatError(std::string{what} + " expects a positive integer", line);
    }
    if (value > kMaxInputs) {
        throw FormatError(std::string{what} + " exceeds the maximum of " +
                              std::to_string(kMaxInputs),
                          line);
    }
    return value;
}

}  // namespace detail

[[nodiscard]] inline PlaSpec parse_pla(std::istream& in) {
    PlaSpec spec;
    bool saw_inputs = false;
    bool saw_outputs = false;
    long declared_cubes = -1;
    unsigned line_no = 0;

    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = detail::trim(raw);
        if (line.empty()) continue;

        std::istringstream fields(line);
        std::string first, second, extra;
        fields >> first >> second >> extra;

        if (first == ".i" || first == ".o" || first == ".p") {
            if (second.empty() || !extra.empty()) {
                throw FormatError(first + " expects exactly one argument", line_no);
            }
            if (first == ".i") {
                if (saw_inputs) throw FormatError("duplicate .i directive", line_no);
                spec.num_inputs = detail::parse_width_directive(second, ".i", line_no);
                saw_inputs = true;
            } else if (first == ".o") {
                if (saw_outputs) throw FormatError("duplicate .o directive", line_no);
                spec.num_outputs = detail::parse_width_directive(second, ".o", line_no);
                saw_outputs = true;
            } else {
                if (declared_cubes >= 0) throw FormatError("duplicate .p directive", line_no);
                std::size_t pos = 0;
                long count = -1;
                try {
                    count = std::stol(second, &pos);
                } catch (const std::exception&) {
                    pos = 0;
                }
                if (pos != second.size() || count < 0) {
                    throw FormatError(".p expects a nonnegative integer", line_no);
                }
                declared_cubes = count;
            }
            continue;
        }
        if (first == ".e") break;  // anything after the terminator is ignored
        if (first[0] == '.') {
            throw FormatError("unknown directive '" + first + "'", line_no);
        }

        // Cube line.
        if (!saw_inputs || !saw_outputs) {
            throw FormatError("cube appears before .i/.o declarations", line_no);
        }
        if (second.empty() || !extra.empty()) {
            throw FormatError("cube line expects <inputs> <outputs>", line_no);
        }
        if (first.size() != spec.num_inputs) {
            throw FormatError("cube input field has " + std::to_string(first.size()) +
                                  " characters, expected " + std::to_string(spec.num_inputs),
                              line_no);
        }
        if (second.size() != spec.num_outputs) {
            throw FormatError("cube output field has " + std::to_string(second.size()) +
                                  " characters, expected " + std::to_string(spec.num_outputs),
                              line_no);
        }
        for (char c : first) {
            if (c != '0' && c != '1' && c != '-') {
                throw FormatError(std::string{"invalid character '"} + c + "' in cube input field",
                                  line_no);
            }
        }
        for (char c : second) {
            if (c != '0' && c != '1') {
                throw FormatError(std::string{"invalid character '"} + c + "' in cube output field",
                                  line_no);
            }
        }
        spec.cubes.push_back(Cube{first, second});
    }

    if (!saw_inputs) throw FormatError("missing .i directive");
    if (!saw_outputs) throw FormatError("missing .o directive");
    if (declared_cubes >= 0 && declared_cubes != static_cast<long>(spec.cubes.size())) {
        throw FormatError(".p declares " + std::to_string(declared_cubes) + " cubes but " +
                          std::to_string(spec.cubes.size()) + " are present");
    }
    return spec;
}

[[nodiscard]] inline PlaSpec parse_pla(std::string_view text) {
    std::istringstream in{std::string{text}};
    return parse_pla(in);
}

[[nodiscard]] inline std::string to_pla_text(const PlaSpec& spec) {
    std::string out;
    out += ".i " + std::to_string(spec.num_inputs) + "\n";
    out += ".o " + std::to_string(spec.num_outputs) + "\n";
    out += ".p " + std::to_string(spec.cubes.size()) + "\n";
    for (const Cube& cube : spec.cubes) {
        out += cube.inputs + " " + cube.outputs + "\n";
    }
    out += ".e\n";
    return out;
}

/// True iff the cube's input field matches the given input word.
[[nodiscard]] inline bool cube_matches(const Cube& cube, std::uint32_t input_word) {
    const unsigned n = static_cast<unsigned>(cube.inputs.size());
    for (unsigned i = 0; i < n; ++i) {
        const char c = cube.inputs[i];
        if (c == '-') continue;
        if ((c == '1') != word_bit(input_word, i, n)) return false;
    }
    return true;
}

/// Sum-of-products evaluation: output bit j is the OR over matching cubes
/// whose output field has 1 at position j. This is the ground-truth oracle
/// every synthesized netlist is verified against.
[[nodiscard]] inline std::uint32_t eval_spec(const PlaSpec& spec, std::uint32_t input_word) {
    if (spec.num_inputs < 1 || spec.num_inputs > 32 || spec.num_outputs < 1 ||
        spec.num_outputs > 32) {
        throw std::invalid_argument("input/output counts must be between 1 and 32");
    }
    if (spec.num_inputs < 32 && input_word >= (std::uint32_t{1} << spec.num_inputs)) {
        throw std::invalid_argument("input word does not fit in " +
                                    std::to_string(spec.num_inputs) + " bits");
    }
    std::uint32_t out = 0;
    for (const Cube& cube : spec.cubes) {
        if (cube.inputs.size() != spec.num_inputs || cube.outputs.size() != spec.num_outputs) {
            throw std::invalid_argument("cube width does not match the declared input/output counts");
        }
        if (!cube_matches(cube, input_word)) continue;
        for (unsigned j = 0; j < spec.num_outputs; ++j) {
            if (cube.outputs[j] == '1') out |= 1u << (spec.num_outputs - 1 - j);
        }
    }
    return out;
}

/// All minterm indices in [0, 2^n) at which the given output is 1,
/// ascending.
[[nodiscard]] inline std::vector<std::uint32_t> minterm_set(const PlaSpec& spec,
                                                            unsigned output_index) {
    if (output_index >= spec.num_outputs) {
        throw std::out_of_range("output index " + std::to_string(output_index) +
                                " out of range for " + std::to_string(spec.num_outputs) +
                                " outputs");
    }
    if (spec.num_inputs > kMaxInputs) {
        throw std::invalid_argument("exhaustive enumeration supports at most " +
                                    std::to_string(kMaxInputs) + " inputs");
    }
    std::vector<std::uint32_t> minterms;
    const std::uint32_t count = std::uint32_t{1} << spec.num_inputs;
    for (std::uint32_t word = 0; word < count; ++word) {
        if (word_bit(eval_spec(spec, word), output_index, spec.num_outputs)) {
            minterms.push_back(word);
        }
    }
    return minterms;
}

}  // namespace revpla
