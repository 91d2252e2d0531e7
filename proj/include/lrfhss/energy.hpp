#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lrfhss/calibration.hpp"
#include "lrfhss/format.hpp"
#include "lrfhss/framing.hpp"
#include "lrfhss/toa.hpp"

namespace lrfhss {

/// The eight states a transmission cycles through, in on-air order.
enum class RadioState {
    wake_up = 1,
    standby = 2,
    fs = 3,
    radio_prepare = 4,
    transmission = 5,
    radio_off = 6,
    standby_final = 7,
    sleep = 8,
};

inline constexpr std::size_t kStateCount = 8;

inline std::string_view state_name(RadioState state) {
    switch (state) {
        case RadioState::wake_up: return "wake_up";
        case RadioState::standby: return "standby";
        case RadioState::fs: return "fs";
        case RadioState::radio_prepare: return "radio_prepare";
        case RadioState::transmission: return "transmission";
        case RadioState::radio_off: return "radio_off";
        case RadioState::standby_final: return "standby_final";
        case RadioState::sleep: return "sleep";
    }
    return "unknown";
}

struct TimelineSegment {
    RadioState state = RadioState::wake_up;
    double start_ms = 0.0;
    double duration_ms = 0.0;
    double current_ma = 0.0;
};

/// Current dip while the synthesizer retunes between hops: a triangle from
/// top_ma down to bottom_ma and back over width_ms. Its time-average is the
/// triangle centroid of the two flank currents and the floor.
struct TransitionDip {
    double start_ms = 0.0;
    double width_ms = 0.0;
    double top_ma = 0.0;
    double bottom_ma = 0.0;
    double mean_ma() const { return (2.0 * top_ma + bottom_ma) / 3.0; }
};

/// One full notification period rendered as contiguous constant-current
/// segments, with the hop dips embedded in the transmission segment.
struct StateTimeline {
    std::vector<TimelineSegment> segments{};
    std::vector<TransitionDip> dips{};
    double notification_ms = 0.0;
};

inline double transition_mean_current(double i_tx_ma, double i_off_ma) {
    return (2.0 * i_tx_ma + i_off_ma) / 3.0;
}

namespace detail {

struct ActiveTimings {
    double standby_ms = 0.0;
    double fs_ms = 0.0;
    double toa_ms = 0.0;
    double active_ms = 0.0;
    int transitions = 0;
};

inline ActiveTimings active_timings(int payload_bytes, const DataRateProfile& dr,
                                    const RadioCalibration& cal) {
    ActiveTimings t;
    t.standby_ms = state_duration(cal, TimedState::standby, payload_bytes);
    t.fs_ms = state_duration(cal, TimedState::fs, payload_bytes);
    t.toa_ms = toa_proposed(payload_bytes, dr, cal.transition_time_ms);
    t.transitions = dr.header_replicas + fragment_count(payload_bytes, dr) - 1;
    t.active_ms = cal.wake_up.duration_ms + t.standby_ms + t.fs_ms +
                  cal.radio_prepare.duration_ms + t.toa_ms +
                  cal.radio_off.duration_ms + cal.standby_final_duration_ms;
    return t;
}

[[noreturn]] inline void infeasible_period(double notification_ms, double active_ms) {
    throw DomainError("notification period " + format_number(notification_ms) +
                      " ms is shorter than the active duration " +
                      format_number(active_ms) + " ms; the transmission cannot fit");
}

}  // namespace detail

/// Total duration of the seven active states (everything but sleep).
/// The sum does not use the transmit current, but an uncalibrated transmit
/// power must still be refused.
inline double active_duration(int payload_bytes, const DataRateProfile& dr,
                              double p_tx_dbm, const RadioCalibration& cal) {
    (void)tx_current(cal, p_tx_dbm, dr);
    return detail::active_timings(payload_bytes, dr, cal).active_ms;
}

/// Raw per-state charges plus the hop-dip correction, the two pieces the
/// closed-form average is assembled from.
struct ChargeBreakdown {
    std::array<double, kStateCount> state_charge_ma_ms{};  ///< T_i * I_i, no dip correction
    double transition_drop_ma_ms = 0.0;  ///< charge removed by the hop dips
    double toa_ms = 0.0;
    double active_ms = 0.0;
    double sleep_ms = 0.0;
    double i_tx_ma = 0.0;
    int transitions = 0;
};

inline ChargeBreakdown charge_breakdown(int payload_bytes, const DataRateProfile& dr,
                                        double p_tx_dbm, double notification_ms,
                                        const RadioCalibration& cal) {
    const double i_tx = tx_current(cal, p_tx_dbm, dr);
    const auto t = detail::active_timings(payload_bytes, dr, cal);
    if (notification_ms < t.active_ms) {
        detail::infeasible_period(notification_ms, t.active_ms);
    }
    ChargeBreakdown b;
    b.toa_ms = t.toa_ms;
    b.active_ms = t.active_ms;
    b.sleep_ms = notification_ms - t.active_ms;
    b.i_tx_ma = i_tx;
    b.transitions = t.transitions;
    b.state_charge_ma_ms = {
        cal.wake_up.duration_ms * cal.wake_up.current_ma,
        t.standby_ms * cal.standby_current_ma,
        t.fs_ms * cal.fs_current_ma,
        cal.radio_prepare.duration_ms * cal.radio_prepare.current_ma,
        t.toa_ms * i_tx,
        cal.radio_off.duration_ms * cal.radio_off.current_ma,
        cal.standby_final_duration_ms * cal.standby_current_ma,
        b.sleep_ms * cal.sleep_current_ma,
    };
    b.transition_drop_ma_ms =
        cal.transition_time_ms *
        (i_tx - transition_mean_current(i_tx, cal.radio_off.current_ma)) *
        t.transitions;
    return b;
}

/// Closed-form average current over one notification period: the eight
/// per-state charges minus the dip correction, divided by the period.
inline double average_current(int payload_bytes, const DataRateProfile& dr,
                              double p_tx_dbm, double notification_ms,
                              const RadioCalibration& cal) {
    const ChargeBreakdown b =
        charge_breakdown(payload_bytes, dr, p_tx_dbm, notification_ms, cal);
    double total = 0.0;
    for (const double charge : b.state_charge_ma_ms) {
        total += charge;
    }
    return (total - b.transition_drop_ma_ms) / notification_ms;
}

/// Renders the period as the eight-state timeline. The transmission
/// segment carries one dip per hop change, each sitting exactly at a block
/// boundary of the frame plan.
inline StateTimeline build_state_timeline(int payload_bytes, const DataRateProfile& dr,
                                          double p_tx_dbm, double notification_ms,
                                          const RadioCalibration& cal) {
    const double i_tx = tx_current(cal, p_tx_dbm, dr);
    const auto t = detail::active_timings(payload_bytes, dr, cal);
    if (notification_ms < t.active_ms) {
        detail::infeasible_period(notification_ms, t.active_ms);
    }
    StateTimeline timeline;
    timeline.notification_ms = notification_ms;
    double cursor = 0.0;
    const auto add = [&](RadioState state, double duration_ms, double current_ma) {
        timeline.segments.push_back(TimelineSegment{state, cursor, duration_ms, current_ma});
        cursor += duration_ms;
    };
    add(RadioState::wake_up, cal.wake_up.duration_ms, cal.wake_up.current_ma);
    add(RadioState::standby, t.standby_ms, cal.standby_current_ma);
    add(RadioState::fs, t.fs_ms, cal.fs_current_ma);
    add(RadioState::radio_prepare, cal.radio_prepare.duration_ms,
        cal.radio_prepare.current_ma);
    const double tx_start_ms = cursor;
    add(RadioState::transmission, t.toa_ms, i_tx);
    add(RadioState::radio_off, cal.radio_off.duration_ms, cal.radio_off.current_ma);
    add(RadioState::standby_final, cal.standby_final_duration_ms, cal.standby_current_ma);
    add(RadioState::sleep, notification_ms - t.active_ms, cal.sleep_current_ma);

    const std::vector<int> bits = block_bit_counts(payload_bytes, dr);
    double at_ms = tx_start_ms;
    for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
        at_ms += bits[i] * kPhy.bit_duration_ms();
        timeline.dips.push_back(TransitionDip{at_ms, cal.transition_time_ms, i_tx,
                                              cal.radio_off.current_ma});
        at_ms += cal.transition_time_ms;
    }
    return timeline;
}

/// Numerical route to the average current: walk the rendered timeline and
/// time-weight each piece, treating every dip as the triangle whose mean is
/// the centroid of its flank and floor currents.
inline double average_current_from_timeline(const StateTimeline& timeline) {
    if (timeline.notification_ms <= 0.0) {
        throw DomainError("timeline notification period must be positive");
    }
    double charge_ma_ms = 0.0;
    for (const TimelineSegment& segment : timeline.segments) {
        charge_ma_ms += segment.duration_ms * segment.current_ma;
    }
    for (const TransitionDip& dip : timeline.dips) {
        // The dip replaces the segment's flat-top current over its width.
        charge_ma_ms += dip.width_ms * (dip.mean_ma() - dip.top_ma);
    }
    return charge_ma_ms / timeline.notification_ms;
}

/// Linear battery model: capacity over average draw.
inline double battery_lifetime_hours(double average_current_ma, double capacity_mah) {
    if (average_current_ma <= 0.0) {
        throw DomainError("average current must be positive");
    }
    if (capacity_mah <= 0.0) {
        throw DomainError("battery capacity must be positive");
    }
    return capacity_mah / average_current_ma;
}

/// Everything one configuration yields: the average current, the charge
/// ledger behind it, and (given a capacity) the projected lifetime.
/// The transmission entry of charge_by_state_ma_ms already includes the
/// dip correction, so the entries sum to average_current * notification.
struct EnergyReport {
    DataRate dr = DataRate::DR8;
    int payload_bytes = 0;
    double p_tx_dbm = 0.0;
    double notification_ms = 0.0;
    double toa_ms = 0.0;
    double active_ms = 0.0;
    double average_current_ma = 0.0;
    std::array<double, kStateCount> charge_by_state_ma_ms{};
    double transition_drop_ma_ms = 0.0;
    std::optional<double> battery_mah{};
    std::optional<double> lifetime_hours{};
};

inline EnergyReport make_energy_report(int payload_bytes, const DataRateProfile& dr,
                                       double p_tx_dbm, double notification_ms,
                                       const RadioCalibration& cal,
                                       std::optional<double> battery_mah = std::nullopt) {
    const ChargeBreakdown b =
        charge_breakdown(payload_bytes, dr, p_tx_dbm, notification_ms, cal);
    EnergyReport report;
    report.dr = dr.id;
    report.payload_bytes = payload_bytes;
    report.p_tx_dbm = p_tx_dbm;
    report.notification_ms = notification_ms;
    report.toa_ms = b.toa_ms;
    report.active_ms = b.active_ms;
    report.charge_by_state_ma_ms = b.state_charge_ma_ms;
    report.charge_by_state_ma_ms[static_cast<std::size_t>(RadioState::transmission) - 1] -=
        b.transition_drop_ma_ms;
    report.transition_drop_ma_ms = b.transition_drop_ma_ms;
    double total = 0.0;
    for (const double charge : report.charge_by_state_ma_ms) {
        total += charge;
    }
    report.average_current_ma = total / notification_ms;
    if (battery_mah) {
        report.battery_mah = battery_mah;
        report.lifetime_hours =
            battery_lifetime_hours(report.average_current_ma, *battery_mah);
    }
    return report;
}

enum class SweepDimension { p_tx, payload, period };

/// One swept axis plus fixed values for the other two.
struct SweepRequest {
    SweepDimension dimension = SweepDimension::p_tx;
    double from = 0.0;
    double to = 0.0;
    double step = 1.0;
    DataRate dr = DataRate::DR8;
    int payload_bytes = 0;
    double p_tx_dbm = 0.0;
    double period_s = 0.0;
    std::optional<double> battery_mah{};
};

struct SweepRow {
    DataRate dr = DataRate::DR8;
    int payload_bytes = 0;
    double p_tx_dbm = 0.0;
    double notification_s = 0.0;
    double toa_ms = 0.0;
    double active_ms = 0.0;
    double i_avg_ma = 0.0;
    std::optional<double> lifetime_hours{};
};

/// Evaluates the swept axis sample by sample; rows come back in range
/// order. Every row is an independent pure function of its inputs.
inline std::vector<SweepRow> run_sweep(const SweepRequest& request,
                                       const RadioCalibration& cal) {
    if (request.step <= 0.0) {
        throw DomainError("sweep step must be positive");
    }
    if (request.to < request.from) {
        throw DomainError("sweep range is empty (from > to)");
    }
    if (request.dimension == SweepDimension::payload) {
        for (const double v : {request.from, request.to, request.step}) {
            if (std::abs(v - std::round(v)) > 1e-9) {
                throw DomainError("payload sweeps take whole bytes, got " +
                                  format_number(v));
            }
        }
    }
    const auto samples = static_cast<std::size_t>(
                             std::floor((request.to - request.from) / request.step + 1e-9)) +
                         1;
    std::vector<SweepRow> rows;
    rows.reserve(samples);
    const DataRateProfile profile = profile_for(request.dr);
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = request.from + static_cast<double>(i) * request.step;
        int payload = request.payload_bytes;
        double p_tx = request.p_tx_dbm;
        double period_s = request.period_s;
        switch (request.dimension) {
            case SweepDimension::p_tx: p_tx = x; break;
            case SweepDimension::payload: payload = static_cast<int>(std::lround(x)); break;
            case SweepDimension::period: period_s = x; break;
        }
        const EnergyReport report = make_energy_report(
            payload, profile, p_tx, period_s * 1000.0, cal, request.battery_mah);
        rows.push_back(SweepRow{request.dr, payload, p_tx, period_s, report.toa_ms,
                                report.active_ms, report.average_current_ma,
                                report.lifetime_hours});
    }
    return rows;
}

}  // namespace lrfhss
