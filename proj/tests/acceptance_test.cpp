// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. REVPLA_BIN and REVPLA_DATA_DIR are injected by the
// build.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "revpla/revpla.hpp"
#include "test_util.hpp"

using namespace revpla;

namespace {

const std::string kBin = REVPLA_BIN;
const std::string kData = REVPLA_DATA_DIR;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<void(Check&)> run;
};

// --- criterion 1: gate truth tables and bijectivity ------------------------

void check_gate_laws(Check& check) {
    const TruthTable feynman = truth_table(GateKind::Feynman);
    check.require(feynman.rows.size() == 4, "Feynman table must have 4 rows");
    for (std::uint32_t w = 0; w < 4; ++w) {
        const std::uint32_t a = (w >> 1) & 1, b = w & 1;
        const std::uint32_t expected = (a << 1) | (a ^ b);
        check.require(feynman.rows[w] == expected,
                      "Feynman row " + std::to_string(w) + " disagrees with P=A, Q=A^B");
    }

    const TruthTable mux = truth_table(GateKind::Mux);
    check.require(mux.rows.size() == 8, "MUX table must have 8 rows");
    for (std::uint32_t w = 0; w < 8; ++w) {
        const std::uint32_t a = (w >> 2) & 1, b = (w >> 1) & 1, c = w & 1;
        const std::uint32_t expected = (a << 2) | ((a ^ b ^ c) << 1) | (((~a & c) ^ (a & b)) & 1);
        check.require(mux.rows[w] == expected,
                      "MUX row " + std::to_string(w) + " disagrees with the output equations");
    }

    check.require(check_bijective(feynman), "Feynman table must be bijective");
    check.require(check_bijective(mux), "MUX table must be bijective");
}

// --- criterion 2: constant-binding configuration lemmas ---------------------

void check_config_lemmas(Check& check) {
    for (bool a : {false, true}) {
        for (bool b : {false, true}) {
            check.require(eval_mux(a, b, false).r == (a && b), "MUX(C=0).r must compute AND");
            check.require(eval_mux(a, true, b).r == (a || b), "MUX(B=1).r must compute OR");
        }
        check.require(eval_feynman(a, true).q == !a, "Feynman(B=1).q must compute NOT");
        check.require(eval_feynman(a, false).q == a, "Feynman(B=0).q must copy");
    }
}

// --- criterion 3: all 256 single-output 3-input functions -------------------

PlaSpec spec_for_minterm_mask(unsigned n, std::uint32_t mask) {
    PlaSpec spec;
    spec.num_inputs = n;
    spec.num_outputs = 1;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (mask & (1u << m)) spec.cubes.push_back(Cube{word_to_bits(m, n), "1"});
    }
    return spec;
}

void check_synthesis_equivalence(Check& check) {
    std::uint64_t comparisons = 0;
    for (std::uint32_t mask = 0; mask < 256; ++mask) {
        const PlaSpec spec = spec_for_minterm_mask(3, mask);
        const RplaNetlist netlist = synthesize(spec);
        for (std::uint32_t word = 0; word < 8; ++word) {
            const auto values = simulate(netlist, word, SimMode::Active);
            const bool got = values[0] == SimValue::One;
            const bool expected = eval_spec(spec, word) == 1;
            ++comparisons;
            check.require(got == expected, "function mask " + std::to_string(mask) +
                                               " disagrees on word " + std::to_string(word));
        }
    }
    check.require(comparisons == 2048, "expected 2048 comparisons");
}

// --- criterion 4: one-hot minterm decode ------------------------------------

void check_one_hot_decode(Check& check) {
    for (unsigned n = 1; n <= 4; ++n) {
        const RplaNetlist plane = build_and_plane(n);
        for (std::uint32_t word = 0; word < (1u << n); ++word) {
            const auto values = simulate(plane, word, SimMode::Active);
            unsigned ones = 0;
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (values[i] == SimValue::One) {
                    ++ones;
                    check.require(i == word, "hot minterm index must equal the input word");
                }
            }
            check.require(ones == 1, "exactly one minterm wire must be hot (n=" +
                                         std::to_string(n) + ", word=" + std::to_string(word) +
                                         ")");
        }
    }
}

// --- criterion 5: stock power table reproduction via the CLI ----------------

void check_power_table_cli(Check& check) {
    const auto result = testutil::run_command(kBin + " power --params " + kData +
                                              "/dev.cfg --calib table1");
    check.require(result.exit_code == 0, "power subcommand must exit 0");

    const char* expected_rows[] = {
        "000 0 0 0 0 0 0",
        "001 0 0 221.91 0 0 90.57",
        "010 0 221.92 0 0 90.57 0",
        "011 0 221.92 221.91 0 90.57 90.57",
        "100 187.71 0 0 90.57 0 0",
        "101 187.71 0 221.91 90.57 0 90.57",
        "110 187.71 221.92 0 90.57 90.57 0",
        "111 187.71 221.92 221.91 90.57 90.57 90.57",
    };
    for (const char* row : expected_rows) {
        check.require(result.output.find(std::string{row} + "\n") != std::string::npos,
                      std::string{"missing table row: "} + row);
    }

    const std::string needle = "pm2: ";
    const auto pos = result.output.find(needle);
    check.require(pos != std::string::npos, "per-line ratio for pm2 must be reported");
    if (pos != std::string::npos) {
        const double ratio = std::stod(result.output.substr(pos + needle.size()));
        check.require(std::abs(ratio - 0.4081) <= 1e-4,
                      "pm2 consumption ratio must be 0.4081 +/- 0.0001, got " +
                          std::to_string(ratio));
        const auto line_end = result.output.find('\n', pos);
        const std::string line = result.output.substr(pos, line_end - pos);
        check.require(line.find("40.8%") != std::string::npos,
                      "pm2 ratio line must carry the 40.8% label");
    }
}

// --- criterion 6: virtual-ground slope vs footer gate bias ------------------

void check_virtual_ground_slope(Check& check) {
    testutil::DetRng rng(101);
    for (int round = 0; round < 120; ++round) {
        DeviceParams p;
        p.i0 = rng.uniform(1e-10, 1e-8);
        p.wl_circuit = rng.uniform(0.5, 20.0);
        p.wl_footer = rng.uniform(0.5, 20.0);
        p.vth_circuit = rng.uniform(0.1, 0.6);
        p.vth_footer = rng.uniform(0.1, 0.8);
        p.eta = rng.uniform(0.05, 0.5);
        p.ss = rng.uniform(0.06, 0.15);
        p.vdd = rng.uniform(0.6, 1.5);
        p.vg_footer = rng.uniform(-0.2, 0.4);

        const double delta = 1e-3;
        DeviceParams shifted = p;
        shifted.vg_footer += delta;
        const double slope = (virtual_ground(shifted) - virtual_ground(p)) / delta;
        const double expected = -1.0 / (2.0 * p.eta);
        check.require(std::abs(slope - expected) <= std::abs(expected) * 1e-9,
                      "finite-difference slope must equal -1/(2*eta) within rel 1e-9");
    }
}

// --- criterion 7: sleep/active ratio boundary and monotonicity --------------

void check_sleep_active_ratio(Check& check) {
    check.require(sleep_active_ratio(0.1, 1.0, 1.0, 0.1) == 1.0,
                  "ratio must equal 1 exactly at vgnd = vdd");
    testutil::DetRng rng(103);
    for (int round = 0; round < 5; ++round) {
        const double eta = rng.uniform(0.05, 0.5);
        const double vdd = rng.uniform(0.6, 1.5);
        const double ss = rng.uniform(0.06, 0.15);
        double previous = 0.0;
        for (int step = 0; step <= 120; ++step) {
            const double vgnd = step == 120 ? vdd : vdd * step / 120.0;
            const double ratio = sleep_active_ratio(eta, vdd, vgnd, ss);
            check.require(ratio > 0.0 && ratio <= 1.0, "ratio must lie in (0, 1] for vgnd <= vdd");
            check.require(ratio > previous, "ratio must be strictly increasing in vgnd");
            previous = ratio;
        }
    }
}

// --- criterion 8: leakage balance root via bisection -------------------------

void check_leakage_balance(Check& check) {
    testutil::DetRng rng(107);
    int sampled = 0;
    while (sampled < 12) {
        DeviceParams p;
        p.i0 = rng.uniform(1e-10, 1e-8);
        p.wl_circuit = rng.uniform(1.0, 8.0);
        p.wl_footer = p.wl_circuit * rng.uniform(0.5, 2.0);
        p.vth_circuit = rng.uniform(0.25, 0.35);
        p.vth_footer = p.vth_circuit + 0.1;
        p.eta = rng.uniform(0.2, 0.5);
        p.ss = 0.1;
        p.vdd = 1.0;
        p.vg_footer = 0.15;

        double lo = 0.0;
        double hi = p.vdd;
        double f_lo = leakage_balance_residual(p, lo);
        const double f_hi = leakage_balance_residual(p, hi);
        check.require(f_lo > 0.0 && f_hi < 0.0, "sampled parameters must bracket the balance");

        double previous = f_lo;
        for (int step = 1; step <= 100; ++step) {
            const double vgnd = p.vdd * step / 100.0;
            const double residual = leakage_balance_residual(p, vgnd);
            check.require(residual < previous, "residual must be monotone decreasing in vgnd");
            previous = residual;
        }

        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double f_mid = leakage_balance_residual(p, mid);
            if ((f_lo <= 0.0) == (f_mid <= 0.0)) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        const double root = 0.5 * (lo + hi);
        check.require(std::abs(leakage_balance_residual(p, root)) < 1e-18,
                      "bisection must drive |residual| below 1e-18 A");
        ++sampled;
    }
}

// --- criterion 9: reversibility audit and mutation detection ----------------

void check_reversibility_audit(Check& check) {
    for (std::uint32_t mask = 0; mask < 256; ++mask) {
        const RplaNetlist netlist = synthesize(spec_for_minterm_mask(3, mask));
        check.require(audit_reversibility(netlist).clean(),
                      "synthesized netlist must pass the audit (mask " + std::to_string(mask) +
                          ")");
    }

    // injected wire duplication: one wire feeding two gate inputs
    RplaNetlist duplicated = synthesize(spec_for_minterm_mask(3, 0b10000001));
    bool injected = false;
    for (GateInstance& gate : duplicated.gates) {
        if (gate.kind == GateKind::Mux && gate.plane == Plane::And) {
            gate.inputs[2] = duplicated.gates.front().inputs[0];
            injected = true;
            break;
        }
    }
    check.require(injected, "mutation hook must find an AND-plane MUX gate");
    bool found_consumer = false;
    for (const AuditViolation& v : audit_reversibility(duplicated).violations) {
        found_consumer = found_consumer || v.check == "consumer";
    }
    check.require(found_consumer, "wire duplication must be flagged as a consumer violation");

    // injected cycle: an early gate reads a later gate's output
    RplaNetlist cyclic = synthesize(spec_for_minterm_mask(3, 0b01111110));
    if (cyclic.gates.size() >= 2) {
        cyclic.gates.front().inputs[0] = cyclic.gates.back().outputs[0];
    }
    bool found_cycle = false;
    for (const AuditViolation& v : audit_reversibility(cyclic).violations) {
        found_cycle = found_cycle || v.check == "acyclicity";
    }
    check.require(found_cycle, "forward wiring must be flagged as an acyclicity violation");
}

// --- criterion 10: deterministic report emission -----------------------------

void check_determinism(Check& check) {
    const std::string command =
        kBin + " report " + kData + "/full_adder.pla --params " + kData + "/dev.cfg";
    const auto text_a = testutil::run_command(command);
    const auto text_b = testutil::run_command(command);
    check.require(text_a.exit_code == 0, "report must exit 0");
    check.require(text_a.output == text_b.output, "text reports must be byte-identical");

    const auto json_a = testutil::run_command(command + " --format json");
    const auto json_b = testutil::run_command(command + " --format json");
    check.require(json_a.output == json_b.output, "json reports must be byte-identical");
    check.require(!text_a.output.empty() && !json_a.output.empty(), "reports must not be empty");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "gate truth tables and bijectivity", 1.0, check_gate_laws},
        {2, "constant-binding configuration lemmas", 1.0, check_config_lemmas},
        {3, "synthesis equivalence over all 256 3-input functions", 5.0,
         check_synthesis_equivalence},
        {4, "one-hot minterm decode for n = 1..4", 5.0, check_one_hot_decode},
        {5, "stock power table and 40.8% ratio via the CLI", 1.0, check_power_table_cli},
        {6, "virtual-ground slope -1/(2*eta)", 1.0, check_virtual_ground_slope},
        {7, "sleep/active ratio boundary and monotonicity", 1.0, check_sleep_active_ratio},
        {8, "leakage balance root by bisection", 1.0, check_leakage_balance},
        {9, "reversibility audit and mutation detection", 5.0, check_reversibility_audit},
        {10, "byte-identical report runs", 30.0, check_determinism},
    };

    bool all_ok = true;
    for (const Criterion& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string{"unexpected exception: "} + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.require(seconds < criterion.budget_seconds,
                      "runtime " + std::to_string(seconds) + "s exceeds " +
                          std::to_string(criterion.budget_seconds) + "s budget");

        std::printf("[%s] criterion %2d: %s (%.3fs)%s%s\n", check.ok ? "PASS" : "FAIL",
                    criterion.id, criterion.name.c_str(), seconds, check.ok ? "" : " - ",
                    check.ok ? "" : check.detail.c_str());
        all_ok = all_ok && check.ok;
    }
    return all_ok ? 0 : 1;
}
