#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrfhss/datarate.hpp"
#include "lrfhss/errors.hpp"
#include "lrfhss/interpolate.hpp"

namespace lrfhss {

/// Sub-GHz transmit chains carry two amplifiers; the radio picks one from
/// the configured transmit power. Their current characteristics are
/// discontinuous at the switch, so interpolation never crosses regions.
enum class PowerAmplifier { lpa, hpa };

inline std::string_view to_string(PowerAmplifier pa) {
    return pa == PowerAmplifier::lpa ? "LPA" : "HPA";
}

inline std::optional<PowerAmplifier> parse_power_amplifier(std::string_view name) {
    if (name == "LPA") return PowerAmplifier::lpa;
    if (name == "HPA") return PowerAmplifier::hpa;
    return std::nullopt;
}

/// One measured point of the transmit-current characteristic.
struct TxCurrentPoint {
    double p_tx_dbm = 0.0;
    DataRate dr = DataRate::DR8;
    double i_tx_ma = 0.0;
    PowerAmplifier pa = PowerAmplifier::lpa;
    bool operator==(const TxCurrentPoint&) const = default;
};

struct StatePoint {
    double duration_ms = 0.0;
    double current_ma = 0.0;
    bool operator==(const StatePoint&) const = default;
};

/// Measured per-device timings and currents for the transmission state
/// machine. Scalars cover the states whose duration is configuration
/// independent; the standby and frequency-synthesis durations and the
/// transmit current are payload- or power-dependent and stored as curves.
///
/// The standby current is shared by the initial and final standby states.
struct RadioCalibration {
    StatePoint wake_up{};
    double standby_current_ma = 0.0;
    double standby_final_duration_ms = 0.0;
    double fs_current_ma = 0.0;
    StatePoint radio_prepare{};
    StatePoint radio_off{};
    double sleep_current_ma = 0.0;
    double transition_time_ms = 0.0;  ///< current dip per hop change
    std::vector<TxCurrentPoint> tx_current_curve{};
    std::vector<CurvePoint> standby_duration_curve{};  ///< payload bytes -> ms
    std::vector<CurvePoint> fs_duration_curve{};       ///< payload bytes -> ms
    double pa_switch_threshold_dbm = 14.0;  ///< HPA applies strictly above this
    bool operator==(const RadioCalibration&) const = default;
};

namespace detail {

inline void check(bool ok, std::string_view field, std::string_view reason) {
    if (!ok) {
        throw ValidationError(std::string(field) + ": " + std::string(reason));
    }
}

inline void check_duration_curve(std::span<const CurvePoint> points,
                                 std::string_view field) {
    check(points.size() >= 2, field, "needs at least 2 points");
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        check(points[i].x < points[i + 1].x, field,
              "abscissae must be strictly increasing");
    }
    for (const auto& p : points) {
        check(p.y >= 0.0, field, "durations must be non-negative");
    }
}

inline std::string tx_group_name(DataRate cls, PowerAmplifier pa) {
    return "tx_current[" + std::string(to_string(cls)) + "/" +
           std::string(to_string(pa)) + "]";
}

}  // namespace detail

/// Checks every value invariant; throws ValidationError naming the
/// offending field. All operations below assume a validated calibration.
inline void validate(const RadioCalibration& cal) {
    using detail::check;
    check(cal.wake_up.current_ma > 0.0, "states.wake_up.current_ma",
          "currents must be positive");
    check(cal.standby_current_ma > 0.0, "states.standby.current_ma",
          "currents must be positive");
    check(cal.fs_current_ma > 0.0, "states.fs.current_ma", "currents must be positive");
    check(cal.radio_prepare.current_ma > 0.0, "states.radio_prepare.current_ma",
          "currents must be positive");
    check(cal.radio_off.current_ma > 0.0, "states.radio_off.current_ma",
          "currents must be positive");
    check(cal.sleep_current_ma > 0.0, "states.sleep.current_ma",
          "currents must be positive");

    check(cal.wake_up.duration_ms >= 0.0, "states.wake_up.duration_ms",
          "durations must be non-negative");
    check(cal.radio_prepare.duration_ms >= 0.0, "states.radio_prepare.duration_ms",
          "durations must be non-negative");
    check(cal.radio_off.duration_ms >= 0.0, "states.radio_off.duration_ms",
          "durations must be non-negative");
    check(cal.standby_final_duration_ms >= 0.0, "states.standby_final.duration_ms",
          "durations must be non-negative");
    check(cal.transition_time_ms >= 0.0, "transition_time_ms",
          "durations must be non-negative");

    check(cal.sleep_current_ma < cal.standby_current_ma, "states.sleep.current_ma",
          "sleep current must stay below the standby current");

    detail::check_duration_curve(cal.standby_duration_curve, "states.standby.curve");
    detail::check_duration_curve(cal.fs_duration_curve, "states.fs.curve");

    check(!cal.tx_current_curve.empty(), "tx_current", "needs at least 2 points");
    for (const auto& p : cal.tx_current_curve) {
        check(p.i_tx_ma > 0.0, "tx_current.i_tx_ma", "currents must be positive");
        check(p.i_tx_ma > cal.standby_current_ma, "tx_current.i_tx_ma",
              "transmit current must exceed the standby current");
        if (p.pa == PowerAmplifier::lpa) {
            check(p.p_tx_dbm <= cal.pa_switch_threshold_dbm, "tx_current.pa",
                  "LPA points must lie at or below pa_switch_threshold_dbm");
        } else {
            check(p.p_tx_dbm > cal.pa_switch_threshold_dbm, "tx_current.pa",
                  "HPA points must lie above pa_switch_threshold_dbm");
        }
    }
    // Each amplifier region present for a data-rate class must be an
    // interpolation-ready curve on its own.
    for (const DataRate cls : {DataRate::DR8, DataRate::DR9}) {
        for (const PowerAmplifier pa : {PowerAmplifier::lpa, PowerAmplifier::hpa}) {
            std::vector<double> xs;
            for (const auto& p : cal.tx_current_curve) {
                if (canonical(p.dr) == cls && p.pa == pa) {
                    xs.push_back(p.p_tx_dbm);
                }
            }
            if (xs.empty()) {
                continue;
            }
            const auto group = detail::tx_group_name(cls, pa);
            check(xs.size() >= 2, group, "needs at least 2 points");
            for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
                check(xs[i] < xs[i + 1], group, "abscissae must be strictly increasing");
            }
        }
    }
}

/// Transmit current at the given power for the profile's data-rate class.
/// Interpolates piecewise-linearly between calibration points of the
/// amplifier region the power falls in; never bridges the LPA/HPA gap.
inline double tx_current(const RadioCalibration& cal, double p_tx_dbm,
                         const DataRateProfile& dr) {
    validate(dr);
    const DataRate cls = canonical(dr.id);
    const PowerAmplifier region = p_tx_dbm > cal.pa_switch_threshold_dbm
                                      ? PowerAmplifier::hpa
                                      : PowerAmplifier::lpa;
    std::vector<CurvePoint> points;
    bool class_has_points = false;
    for (const auto& p : cal.tx_current_curve) {
        if (canonical(p.dr) != cls) {
            continue;
        }
        class_has_points = true;
        if (p.pa == region) {
            points.push_back(CurvePoint{p.p_tx_dbm, p.i_tx_ma});
        }
    }
    if (points.empty()) {
        if (!class_has_points) {
            throw MissingCalibrationError("tx_current: no calibration points for " +
                                          std::string(to_string(cls)) + "-class rates");
        }
        throw SpanError("tx_current: no " + std::string(to_string(region)) +
                        " points for " + std::string(to_string(cls)) + "-class at " +
                        format_number(p_tx_dbm) + " dBm; extrapolation refused");
    }
    return piecewise_linear(points, p_tx_dbm, detail::tx_group_name(cls, region));
}

/// States whose duration depends on the payload length.
enum class TimedState { standby, fs };

inline double state_duration(const RadioCalibration& cal, TimedState state,
                             double payload_bytes) {
    const bool standby = state == TimedState::standby;
    const auto& curve = standby ? cal.standby_duration_curve : cal.fs_duration_curve;
    return piecewise_linear(curve, payload_bytes,
                            standby ? "states.standby.curve" : "states.fs.curve");
}

}  // namespace lrfhss
