#pragma once

/// @file power.hpp
/// @brief Analytic footer power-gating model (subthreshold current,
/// circuit/footer leakage balance, virtual ground, sleep/active ratio,
/// four-component average power) plus the per-input-vector wattmeter
/// table with its calibrated defaults.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "revpla/bits.hpp"

namespace revpla {

/// Electrical parameters of the gated logic block and its footer switch.
/// Voltages in volts, currents in amperes, ss in volts per decade.
struct DeviceParams {
    double i0 = 1e-9;         ///< subthreshold current scale
    double wl_circuit = 1.0;  ///< W/L ratio of the logic circuit
    double wl_footer = 1.0;   ///< W/L ratio of the footer device
    double vth_circuit = 0.3; ///< threshold voltage of the logic circuit
    double vth_footer = 0.4;  ///< threshold voltage of the footer device
    double eta = 0.1;         ///< drain-induced barrier lowering coefficient
    double ss = 0.1;          ///< subthreshold slope
    double vdd = 1.0;         ///< supply voltage
    double vg_footer = 0.0;   ///< footer gate bias (below vth_footer in sleep)
};

inline void validate(const DeviceParams& p) {
    const auto require_positive = [](double value, const char* name) {
        if (!(value > 0.0) || !std::isfinite(value)) {
            throw std::invalid_argument(std::string{name} + " must be positive and finite");
        }
    };
    require_positive(p.i0, "i0");
    require_positive(p.wl_circuit, "wl_circuit");
    require_positive(p.wl_footer, "wl_footer");
    require_positive(p.eta, "eta");
    require_positive(p.ss, "ss");
    require_positive(p.vdd, "vdd");
    if (!std::isfinite(p.vth_circuit) || !std::isfinite(p.vth_footer) ||
        !std::isfinite(p.vg_footer)) {
        throw std::invalid_argument("threshold and gate voltages must be finite");
    }
}

/// Subthreshold drain current I = i0 * (W/L) * 10^((vg - vth + eta*vds)/ss).
/// Strictly increasing in vg and (for eta > 0) in vds, decreasing in vth.
[[nodiscard]] inline double subthreshold_current(double i0, double wl, double vg, double vth,
                                                 double eta, double vds, double ss) {
    if (!(i0 > 0.0)) throw std::invalid_argument("i0 must be positive");
    if (!(wl > 0.0)) throw std::invalid_argument("wl must be positive");
    if (!(ss > 0.0)) throw std::invalid_argument("ss must be positive");
    return i0 * wl * std::pow(10.0, ((vg - vth) + eta * vds) / ss);
}

/// Virtual-ground level of the gated block,
///   vgnd = (-vg + ss*log10(wl_circuit/wl_footer)
///           + (vth_footer - vth_circuit + eta*vdd)) / (2*eta),
/// i.e. affine in the footer gate bias with slope -1/(2*eta). The value
/// can land outside [0, vdd]; leakage_report clamps before using it.
[[nodiscard]] inline double virtual_ground(const DeviceParams& p) {
    validate(p);
    return (-p.vg_footer + p.ss * std::log10(p.wl_circuit / p.wl_footer) +
            (p.vth_footer - p.vth_circuit + p.eta * p.vdd)) /
           (2.0 * p.eta);
}

/// Circuit leakage minus footer leakage at a candidate virtual-ground
/// level; zero exactly at the balance point. The circuit conducts with its
/// gate at 0 and vds = vdd - vgnd; the footer conducts with its gate at
/// vg_footer and vds = vgnd. Strictly decreasing in vgnd.
[[nodiscard]] inline double leakage_balance_residual(const DeviceParams& p, double vgnd) {
    validate(p);
    const double circuit =
        p.i0 * p.wl_circuit * std::pow(10.0, (-p.vth_circuit + p.eta * (p.vdd - vgnd)) / p.ss);
    const double footer =
        p.i0 * p.wl_footer * std::pow(10.0, ((p.vg_footer - p.vth_footer) + p.eta * vgnd) / p.ss);
    return circuit - footer;
}

/// Sleep-to-active current ratio 10^(-(eta*(vdd - vgnd))/ss). Lies in
/// (0, 1] whenever vgnd <= vdd and equals 1 exactly at vgnd = vdd.
[[nodiscard]] inline double sleep_active_ratio(double eta, double vdd, double vgnd, double ss) {
    if (!(ss > 0.0)) throw std::invalid_argument("ss must be positive");
    return std::pow(10.0, -(eta * (vdd - vgnd)) / ss);
}

/// Switching-activity inputs of the four-component average power equation.
struct ActivityParams {
    double alpha = 0.0;           ///< 0->1 transition probability, in [0, 1]
    double c_load = 0.0;          ///< load capacitance (F)
    double f_clk = 0.0;           ///< clock frequency (Hz)
    double i_shortcircuit = 0.0;  ///< short-circuit current (A)
    double i_leakage = 0.0;       ///< subthreshold leakage current (A)
    double i_static = 0.0;        ///< static current (A)
};

inline void validate(const ActivityParams& a) {
    const auto require_nonnegative = [](double value, const char* name) {
        if (!(value >= 0.0) || !std::isfinite(value)) {
            throw std::invalid_argument(std::string{name} + " must be nonnegative and finite");
        }
    };
    require_nonnegative(a.alpha, "alpha");
    require_nonnegative(a.c_load, "c_load");
    require_nonnegative(a.f_clk, "f_clk");
    require_nonnegative(a.i_shortcircuit, "i_shortcircuit");
    require_nonnegative(a.i_leakage, "i_leakage");
    require_nonnegative(a.i_static, "i_static");
    if (a.alpha > 1.0) throw std::invalid_argument("alpha must not exceed 1");
}

/// Average power as the literal four-term sum
///   alpha*c_load*vdd^2*f_clk + i_sc*vdd + i_leakage*vdd + i_static*vdd.
[[nodiscard]] inline double total_average_power(const ActivityParams& a, double vdd) {
    validate(a);
    return a.alpha * a.c_load * vdd * vdd * a.f_clk + a.i_shortcircuit * vdd +
           a.i_leakage * vdd + a.i_static * vdd;
}

/// Per-input-line wattmeter calibration in picowatts: the reading of
/// wattmeter PM_i when line i is at logic 1, for the ungated (plain CMOS)
/// and the gated design. A line at logic 0 always reads 0.
struct CalibrationTable {
    std::vector<double> per_line_cmos_pw;
    std::vector<double> per_line_gated_pw;

    [[nodiscard]] unsigned num_lines() const {
        return static_cast<unsigned>(per_line_cmos_pw.size());
    }

    /// Built-in three-line calibration shipped with the tool.
    [[nodiscard]] static CalibrationTable table1() {
        return CalibrationTable{{187.71, 221.92, 221.91}, {90.57, 90.57, 90.57}};
    }
};

/// Results of the analytic leakage chain.
struct LeakageReport {
    double vdd = 0.0;
    double vgnd_raw = 0.0;           ///< closed-form virtual ground, unclamped
    double vgnd = 0.0;               ///< clamped into [0, vdd]
    bool clamped = false;
    double circuit_leakage_a = 0.0;  ///< logic-block subthreshold current, gate at 0
    double sleep_active = 0.0;       ///< sleep/active current ratio at vgnd
    double balance_residual_a = 0.0; ///< circuit-footer mismatch at vgnd
};

[[nodiscard]] inline LeakageReport leakage_report(const DeviceParams& p) {
    validate(p);
    LeakageReport report;
    report.vdd = p.vdd;
    report.vgnd_raw = virtual_ground(p);
    report.vgnd = std::clamp(report.vgnd_raw, 0.0, p.vdd);
    report.clamped = report.vgnd != report.vgnd_raw;
    report.circuit_leakage_a = subthreshold_current(p.i0, p.wl_circuit, 0.0, p.vth_circuit, p.eta,
                                                    p.vdd - report.vgnd, p.ss);
    report.sleep_active = sleep_active_ratio(p.eta, p.vdd, report.vgnd, p.ss);
    report.balance_residual_a = leakage_balance_residual(p, report.vgnd);
    return report;
}

/// Wattmeter readings for one input vector: one value per line, for the
/// ungated and the gated design.
struct PowerRow {
    std::uint32_t input_word = 0;
    std::vector<double> ungated_pw;
    std::vector<double> gated_pw;
};

/// Power table over all 2^n input vectors plus derived ratios. A reading
/// is zero exactly when its input line is at logic 0 in that vector.
struct PowerReport {
    unsigned num_lines = 0;
    std::vector<PowerRow> rows;
    std::vector<double> per_line_ratio;        ///< gated/ungated, per line
    double consumption_ratio = 0.0;            ///< all-ones-vector aggregate
    std::optional<LeakageReport> leakage;
    std::optional<double> average_power_w;     ///< filled when activity params are known
};

/// Expands a calibration into the full 2^n-row wattmeter table. Ungated
/// calibration entries must be strictly positive (they are per-line ratio
/// denominators); gated entries must be nonnegative.
[[nodiscard]] inline PowerReport power_table(unsigned n, const CalibrationTable& calib) {
    if (n < 1 || n > kMaxInputs) {
        throw std::invalid_argument("line count must be between 1 and " +
                                    std::to_string(kMaxInputs));
    }
    if (calib.per_line_cmos_pw.size() != n || calib.per_line_gated_pw.size() != n) {
        throw std::invalid_argument("calibration lists must have exactly " + std::to_string(n) +
                                    " entries");
    }
    for (unsigned i = 0; i < n; ++i) {
        if (!(calib.per_line_cmos_pw[i] > 0.0) || !std::isfinite(calib.per_line_cmos_pw[i])) {
            throw std::invalid_argument("ungated calibration entries must be positive");
        }
        if (!(calib.per_line_gated_pw[i] >= 0.0) || !std::isfinite(calib.per_line_gated_pw[i])) {
            throw std::invalid_argument("gated calibration entries must be nonnegative");
        }
    }

    PowerReport report;
    report.num_lines = n;
    report.rows.reserve(std::size_t{1} << n);
    for (std::uint32_t word = 0; word < (1u << n); ++word) {
        PowerRow row;
        row.input_word = word;
        row.ungated_pw.reserve(n);
        row.gated_pw.reserve(n);
        for (unsigned i = 0; i < n; ++i) {
            const bool active = word_bit(word, i, n);
            row.ungated_pw.push_back(active ? calib.per_line_cmos_pw[i] : 0.0);
            row.gated_pw.push_back(active ? calib.per_line_gated_pw[i] : 0.0);
        }
        report.rows.push_back(std::move(row));
    }

    report.per_line_ratio.reserve(n);
    double gated_sum = 0.0;
    double ungated_sum = 0.0;
    for (unsigned i = 0; i < n; ++i) {
        report.per_line_ratio.push_back(calib.per_line_gated_pw[i] / calib.per_line_cmos_pw[i]);
        gated_sum += calib.per_line_gated_pw[i];
        ungated_sum += calib.per_line_cmos_pw[i];
    }
    report.consumption_ratio = gated_sum / ungated_sum;
    return report;
}

}  // namespace revpla
