#pragma once

/// @file config.hpp
/// @brief Flat `key = value` parameter and calibration files. `#` starts a
/// comment; keys match the DeviceParams/ActivityParams field names.

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "revpla/bits.hpp"
#include "revpla/errors.hpp"
#include "revpla/power.hpp"

namespace revpla {

namespace detail {

struct KeyValue {
    std::string text;
    unsigned line = 0;
};

inline std::map<std::string, KeyValue> parse_key_values(std::istream& in) {
    std::map<std::string, KeyValue> entries;
    std::string raw;
    unsigned line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw FormatError("expected 'key = value'", line_no);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw FormatError("empty key", line_no);
        if (value.empty()) throw FormatError("empty value for '" + key + "'", line_no);
        if (entries.count(key)) throw FormatError("duplicate key '" + key + "'", line_no);
        entries[key] = KeyValue{value, line_no};
    }
    return entries;
}

inline double parse_double(const std::string& text, const std::string& key, unsigned line) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw FormatError("value for '" + key + "' is not a number", line);
    }
    if (pos != text.size()) throw FormatError("value for '" + key + "' is not a number", line);
    return value;
}

inline std::vector<double> parse_double_list(const std::string& text, const std::string& key,
                                             unsigned line) {
    std::vector<double> values;
    std::string item;
    std::istringstream pieces(text);
    while (std::getline(pieces, item, ',')) {
        values.push_back(parse_double(trim(item), key, line));
    }
    if (values.empty()) throw FormatError("value for '" + key + "' is an empty list", line);
    return values;
}

}  // namespace detail

struct ParamFileContents {
    DeviceParams device;
    std::optional<ActivityParams> activity;
};

/// Reads a device parameter file. All nine DeviceParams keys are
/// mandatory; the six ActivityParams keys are optional but must appear as
/// a complete group. Unknown keys are rejected.
[[nodiscard]] inline ParamFileContents parse_params(std::istream& in) {
    auto entries = detail::parse_key_values(in);
    ParamFileContents contents;

    const auto take = [&entries](const char* key, double& into) {
        const auto it = entries.find(key);
        if (it == entries.end()) return false;
        into = detail::parse_double(it->second.text, key, it->second.line);
        entries.erase(it);
        return true;
    };
    const auto require = [&take](const char* key, double& into) {
        if (!take(key, into)) {
            throw FormatError(std::string{"missing parameter '"} + key + "'");
        }
    };

    DeviceParams& d = contents.device;
    require("i0", d.i0);
    require("wl_circuit", d.wl_circuit);
    require("wl_footer", d.wl_footer);
    require("vth_circuit", d.vth_circuit);
    require("vth_footer", d.vth_footer);
    require("eta", d.eta);
    require("ss", d.ss);
    require("vdd", d.vdd);
    require("vg_footer", d.vg_footer);

    ActivityParams a;
    unsigned present = 0;
    present += take("alpha", a.alpha);
    present += take("c_load", a.c_load);
    present += take("f_clk", a.f_clk);
    present += take("i_shortcircuit", a.i_shortcircuit);
    present += take("i_leakage", a.i_leakage);
    present += take("i_static", a.i_static);
    if (present == 6) {
        contents.activity = a;
    } else if (present != 0) {
        throw FormatError("activity parameters are incomplete: all of alpha, c_load, f_clk, "
                          "i_shortcircuit, i_leakage, i_static are required together");
    }

    if (!entries.empty()) {
        const auto& [key, kv] = *entries.begin();
        throw FormatError("unknown key '" + key + "'", kv.line);
    }
    validate(contents.device);
    if (contents.activity) validate(*contents.activity);
    return contents;
}

/// Reads a wattmeter calibration file: comma-separated picowatt lists
/// `ungated_pw` and `gated_pw` of equal length.
[[nodiscard]] inline CalibrationTable parse_calibration(std::istream& in) {
    auto entries = detail::parse_key_values(in);
    CalibrationTable calib;

    const auto require_list = [&entries](const char* key) {
        const auto it = entries.find(key);
        if (it == entries.end()) {
            throw FormatError(std::string{"missing calibration list '"} + key + "'");
        }
        auto values = detail::parse_double_list(it->second.text, key, it->second.line);
        entries.erase(it);
        return values;
    };
    calib.per_line_cmos_pw = require_list("ungated_pw");
    calib.per_line_gated_pw = require_list("gated_pw");
    if (!entries.empty()) {
        const auto& [key, kv] = *entries.begin();
        throw FormatError("unknown key '" + key + "'", kv.line);
    }
    if (calib.per_line_cmos_pw.size() != calib.per_line_gated_pw.size()) {
        throw FormatError("ungated_pw and gated_pw must have the same length");
    }
    return calib;
}

}  // namespace revpla
