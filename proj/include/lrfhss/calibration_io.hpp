#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lrfhss/calibration.hpp"
#include "lrfhss/errors.hpp"

namespace lrfhss {

inline constexpr int kCalibrationSchemaVersion = 1;

namespace detail {

using cal_json = nlohmann::ordered_json;

[[noreturn]] inline void parse_fail(const std::string& path, const std::string& reason) {
    throw ParseError(path + ": " + reason);
}

inline const cal_json& object_at(const cal_json& parent, const char* key,
                                 const std::string& path) {
    if (!parent.contains(key)) {
        parse_fail(path, std::string("missing required key '") + key + "'");
    }
    const cal_json& value = parent.at(key);
    if (!value.is_object()) {
        parse_fail(path + "." + key, "expected an object");
    }
    return value;
}

inline void reject_unknown_keys(const cal_json& obj,
                                std::initializer_list<const char*> allowed,
                                const std::string& path) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            parse_fail(path, "unknown key '" + item.key() + "'");
        }
    }
}

inline double number_at(const cal_json& obj, const char* key, const std::string& path) {
    if (!obj.contains(key)) {
        parse_fail(path, std::string("missing required key '") + key + "'");
    }
    const cal_json& value = obj.at(key);
    if (!value.is_number()) {
        parse_fail(path + "." + key, "expected a number");
    }
    return value.get<double>();
}

inline std::string string_at(const cal_json& obj, const char* key,
                             const std::string& path) {
    if (!obj.contains(key)) {
        parse_fail(path, std::string("missing required key '") + key + "'");
    }
    const cal_json& value = obj.at(key);
    if (!value.is_string()) {
        parse_fail(path + "." + key, "expected a string");
    }
    return value.get<std::string>();
}

inline StatePoint state_point_at(const cal_json& states, const char* key,
                                 const std::string& path) {
    const cal_json& obj = object_at(states, key, path);
    const std::string sub = path + "." + key;
    reject_unknown_keys(obj, {"duration_ms", "current_ma"}, sub);
    return StatePoint{number_at(obj, "duration_ms", sub), number_at(obj, "current_ma", sub)};
}

inline std::vector<CurvePoint> curve_at(const cal_json& obj, const char* key,
                                        const std::string& path) {
    if (!obj.contains(key)) {
        parse_fail(path, std::string("missing required key '") + key + "'");
    }
    const cal_json& value = obj.at(key);
    const std::string sub = path + "." + key;
    if (!value.is_array()) {
        parse_fail(sub, "expected an array of [x, y] pairs");
    }
    std::vector<CurvePoint> points;
    points.reserve(value.size());
    for (const cal_json& entry : value) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            parse_fail(sub, "every entry must be a [x, y] number pair");
        }
        points.push_back(CurvePoint{entry[0].get<double>(), entry[1].get<double>()});
    }
    return points;
}

}  // namespace detail

/// Parses and validates a calibration document. The schema is strict:
/// unknown keys anywhere are rejected so typos cannot silently fall back
/// to defaults. Errors name the offending field.
inline RadioCalibration load_calibration(std::string_view text) {
    using detail::parse_fail;
    detail::cal_json doc;
    try {
        doc = detail::cal_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("calibration: ") + e.what());
    }
    if (!doc.is_object()) {
        parse_fail("calibration", "top level must be an object");
    }
    detail::reject_unknown_keys(doc,
                                {"schema_version", "states", "tx_current",
                                 "transition_time_ms", "pa_switch_threshold_dbm", "notes"},
                                "calibration");

    const double version = detail::number_at(doc, "schema_version", "calibration");
    if (version != kCalibrationSchemaVersion) {
        parse_fail("calibration.schema_version", "unsupported version");
    }
    if (doc.contains("notes") && !doc.at("notes").is_string()) {
        parse_fail("calibration.notes", "expected a string");
    }

    const detail::cal_json& states = detail::object_at(doc, "states", "calibration");
    detail::reject_unknown_keys(states,
                                {"wake_up", "standby", "fs", "radio_prepare", "radio_off",
                                 "standby_final", "sleep"},
                                "calibration.states");

    RadioCalibration cal;
    cal.wake_up = detail::state_point_at(states, "wake_up", "calibration.states");
    cal.radio_prepare = detail::state_point_at(states, "radio_prepare", "calibration.states");
    cal.radio_off = detail::state_point_at(states, "radio_off", "calibration.states");

    const detail::cal_json& standby =
        detail::object_at(states, "standby", "calibration.states");
    detail::reject_unknown_keys(standby, {"curve", "current_ma"},
                                "calibration.states.standby");
    cal.standby_current_ma =
        detail::number_at(standby, "current_ma", "calibration.states.standby");
    cal.standby_duration_curve =
        detail::curve_at(standby, "curve", "calibration.states.standby");

    const detail::cal_json& fs = detail::object_at(states, "fs", "calibration.states");
    detail::reject_unknown_keys(fs, {"curve", "current_ma"}, "calibration.states.fs");
    cal.fs_current_ma = detail::number_at(fs, "current_ma", "calibration.states.fs");
    cal.fs_duration_curve = detail::curve_at(fs, "curve", "calibration.states.fs");

    const detail::cal_json& standby_final =
        detail::object_at(states, "standby_final", "calibration.states");
    detail::reject_unknown_keys(standby_final, {"duration_ms"},
                                "calibration.states.standby_final");
    cal.standby_final_duration_ms =
        detail::number_at(standby_final, "duration_ms", "calibration.states.standby_final");

    const detail::cal_json& sleep = detail::object_at(states, "sleep", "calibration.states");
    detail::reject_unknown_keys(sleep, {"current_ma"}, "calibration.states.sleep");
    cal.sleep_current_ma = detail::number_at(sleep, "current_ma", "calibration.states.sleep");

    if (!doc.contains("tx_current")) {
        parse_fail("calibration", "missing required key 'tx_current'");
    }
    const detail::cal_json& tx = doc.at("tx_current");
    if (!tx.is_array()) {
        parse_fail("calibration.tx_current", "expected an array");
    }
    for (std::size_t i = 0; i < tx.size(); ++i) {
        const detail::cal_json& entry = tx[i];
        const std::string sub = "calibration.tx_current[" + std::to_string(i) + "]";
        if (!entry.is_object()) {
            parse_fail(sub, "expected an object");
        }
        detail::reject_unknown_keys(entry, {"p_tx_dbm", "dr", "i_tx_ma", "pa"}, sub);
        TxCurrentPoint point;
        point.p_tx_dbm = detail::number_at(entry, "p_tx_dbm", sub);
        point.i_tx_ma = detail::number_at(entry, "i_tx_ma", sub);
        const std::string dr_name = detail::string_at(entry, "dr", sub);
        const auto dr = parse_data_rate(dr_name);
        if (!dr) {
            parse_fail(sub + ".dr", "unknown data rate '" + dr_name + "'");
        }
        point.dr = *dr;
        const std::string pa_name = detail::string_at(entry, "pa", sub);
        const auto pa = parse_power_amplifier(pa_name);
        if (!pa) {
            parse_fail(sub + ".pa", "expected 'LPA' or 'HPA', got '" + pa_name + "'");
        }
        point.pa = *pa;
        cal.tx_current_curve.push_back(point);
    }

    cal.transition_time_ms = detail::number_at(doc, "transition_time_ms", "calibration");
    if (doc.contains("pa_switch_threshold_dbm")) {
        cal.pa_switch_threshold_dbm =
            detail::number_at(doc, "pa_switch_threshold_dbm", "calibration");
    }

    validate(cal);
    return cal;
}

/// Emits a document that load_calibration() reads back field-for-field.
inline std::string serialize_calibration(const RadioCalibration& cal) {
    using detail::cal_json;
    const auto curve_json = [](const std::vector<CurvePoint>& curve) {
        cal_json out = cal_json::array();
        for (const auto& p : curve) {
            out.push_back(cal_json::array({p.x, p.y}));
        }
        return out;
    };
    cal_json doc;
    doc["schema_version"] = kCalibrationSchemaVersion;
    doc["states"] = {
        {"wake_up",
         {{"duration_ms", cal.wake_up.duration_ms}, {"current_ma", cal.wake_up.current_ma}}},
        {"standby",
         {{"curve", curve_json(cal.standby_duration_curve)},
          {"current_ma", cal.standby_current_ma}}},
        {"fs",
         {{"curve", curve_json(cal.fs_duration_curve)}, {"current_ma", cal.fs_current_ma}}},
        {"radio_prepare",
         {{"duration_ms", cal.radio_prepare.duration_ms},
          {"current_ma", cal.radio_prepare.current_ma}}},
        {"radio_off",
         {{"duration_ms", cal.radio_off.duration_ms},
          {"current_ma", cal.radio_off.current_ma}}},
        {"standby_final", {{"duration_ms", cal.standby_final_duration_ms}}},
        {"sleep", {{"current_ma", cal.sleep_current_ma}}},
    };
    cal_json tx = cal_json::array();
    for (const auto& p : cal.tx_current_curve) {
        tx.push_back({{"p_tx_dbm", p.p_tx_dbm},
                      {"dr", std::string(to_string(p.dr))},
                      {"i_tx_ma", p.i_tx_ma},
                      {"pa", std::string(to_string(p.pa))}});
    }
    doc["tx_current"] = std::move(tx);
    doc["transition_time_ms"] = cal.transition_time_ms;
    doc["pa_switch_threshold_dbm"] = cal.pa_switch_threshold_dbm;
    return doc.dump(2) + "\n";
}

}  // namespace lrfhss
