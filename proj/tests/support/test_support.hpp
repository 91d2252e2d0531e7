#pragma once

#include <vector>

#include "lrfhss/calibration.hpp"

namespace lrfhss::testing {

// Measured scalar state constants plus synthetic curves covering payloads
// 1..255 bytes and transmit powers 0..22 dBm for both data-rate classes.
// The DR9-class transmit points are deliberately offset from the DR8-class
// ones so cross-class lookups cannot pass unnoticed.
inline RadioCalibration synthetic_calibration() {
    RadioCalibration cal;
    cal.wake_up = {0.4301, 1.9};
    cal.standby_current_ma = 1.229;
    cal.standby_final_duration_ms = 1.044;
    cal.fs_current_ma = 3.7392;
    cal.radio_prepare = {99.67, 2.968};
    cal.radio_off = {9.45, 4.94};
    cal.sleep_current_ma = 0.053;
    cal.transition_time_ms = 0.61;
    cal.pa_switch_threshold_dbm = 14.0;
    cal.standby_duration_curve = {{1.0, 10.0}, {255.0, 40.0}};
    cal.fs_duration_curve = {{1.0, 25.0}, {255.0, 90.0}};
    cal.tx_current_curve = {
        {0.0, DataRate::DR8, 20.0, PowerAmplifier::lpa},
        {7.0, DataRate::DR8, 28.0, PowerAmplifier::lpa},
        {14.0, DataRate::DR8, 42.0, PowerAmplifier::lpa},
        {15.0, DataRate::DR8, 70.0, PowerAmplifier::hpa},
        {22.0, DataRate::DR8, 110.0, PowerAmplifier::hpa},
        {0.0, DataRate::DR9, 19.0, PowerAmplifier::lpa},
        {7.0, DataRate::DR9, 27.0, PowerAmplifier::lpa},
        {14.0, DataRate::DR9, 41.0, PowerAmplifier::lpa},
        {15.0, DataRate::DR9, 68.0, PowerAmplifier::hpa},
        {22.0, DataRate::DR9, 107.0, PowerAmplifier::hpa},
    };
    return cal;
}

// Variant whose standby and fs states take no time at all.
inline RadioCalibration zero_curve_calibration() {
    RadioCalibration cal = synthetic_calibration();
    cal.standby_duration_curve = {{1.0, 0.0}, {255.0, 0.0}};
    cal.fs_duration_curve = {{1.0, 0.0}, {255.0, 0.0}};
    return cal;
}

// Variant with a flat transmit current for both classes across 0..14 dBm.
inline RadioCalibration flat_tx_calibration(double i_tx_ma) {
    RadioCalibration cal = synthetic_calibration();
    cal.tx_current_curve = {
        {0.0, DataRate::DR8, i_tx_ma, PowerAmplifier::lpa},
        {14.0, DataRate::DR8, i_tx_ma, PowerAmplifier::lpa},
        {0.0, DataRate::DR9, i_tx_ma, PowerAmplifier::lpa},
        {14.0, DataRate::DR9, i_tx_ma, PowerAmplifier::lpa},
    };
    return cal;
}

inline std::vector<double> tx_knots_dbm() { return {0.0, 7.0, 14.0, 15.0, 22.0}; }

}  // namespace lrfhss::testing
