#pragma once

/// @file gates.hpp
/// @brief Reversible gate library: Feynman and MUX gate semantics, truth
/// tables, bijectivity checking, and per-gate quantum cost.

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace revpla {

/// The two reversible gate types used in the RPLA planes.
enum class GateKind : std::uint8_t { Feynman, Mux };

[[nodiscard]] constexpr std::string_view gate_kind_name(GateKind kind) {
    return kind == GateKind::Feynman ? "feynman" : "mux";
}

/// Number of input lines, which always equals the number of output lines.
[[nodiscard]] constexpr unsigned gate_arity(GateKind kind) {
    return kind == GateKind::Feynman ? 2u : 3u;
}

/// Quantum cost of one gate instance: Feynman counts 1, MUX counts 4.
/// Cost does not depend on constant bindings.
[[nodiscard]] constexpr unsigned quantum_cost(GateKind kind) {
    return kind == GateKind::Feynman ? 1u : 4u;
}

struct FeynmanOutputs {
    bool p;  ///< P = A
    bool q;  ///< Q = A xor B
};

/// 2x2 Feynman (controlled-not) gate. With B = 0 it copies A onto both
/// lines; with B = 1 its Q line is NOT A.
[[nodiscard]] constexpr FeynmanOutputs eval_feynman(bool a, bool b) {
    return {a, a != b};
}

struct MuxOutputs {
    bool p;  ///< P = A
    bool q;  ///< Q = A xor B xor C
    bool r;  ///< R = (not A and C) xor (A and B)
};

/// 3x3 MUX gate. The R line is configurable: with C = 0 it computes
/// A and B; with B = 1 it computes A or C.
[[nodiscard]] constexpr MuxOutputs eval_mux(bool a, bool b, bool c) {
    return {a, (a != b) != c, (!a && c) != (a && b)};
}

/// Exhaustive input-to-output map of an n-line gate. Row i is the output
/// word for input word i; line 0 is the most significant bit of both words.
struct TruthTable {
    unsigned arity = 0;
    std::vector<std::uint32_t> rows;
};

[[nodiscard]] inline TruthTable truth_table(GateKind kind) {
    const unsigned n = gate_arity(kind);
    TruthTable table{n, {}};
    table.rows.reserve(std::size_t{1} << n);
    for (std::uint32_t word = 0; word < (1u << n); ++word) {
        std::uint32_t out = 0;
        if (kind == GateKind::Feynman) {
            const auto g = eval_feynman((word >> 1) & 1u, word & 1u);
            out = (static_cast<std::uint32_t>(g.p) << 1) | static_cast<std::uint32_t>(g.q);
        } else {
            const auto g = eval_mux((word >> 2) & 1u, (word >> 1) & 1u, word & 1u);
            out = (static_cast<std::uint32_t>(g.p) << 2) | (static_cast<std::uint32_t>(g.q) << 1) |
                  static_cast<std::uint32_t>(g.r);
        }
        table.rows.push_back(out);
    }
    return table;
}

/// True iff the output words are pairwise distinct n-bit words, i.e. the
/// table realizes a permutation of its input space.
[[nodiscard]] inline bool check_bijective(const TruthTable& table) {
    if (table.arity == 0 || table.arity > 31 ||
        table.rows.size() != (std::size_t{1} << table.arity)) {
        throw std::invalid_argument("truth table is not well-formed");
    }
    std::vector<bool> seen(table.rows.size(), false);
    for (std::uint32_t out : table.rows) {
        if (out >= seen.size() || seen[out]) return false;
        seen[out] = true;
    }
    return true;
}

}  // namespace revpla
