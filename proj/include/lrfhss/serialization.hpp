#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "lrfhss/energy.hpp"
#include "lrfhss/format.hpp"
#include "lrfhss/framing.hpp"
#include "lrfhss/toa.hpp"

namespace lrfhss {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const FramePlan& plan) {
    ordered_json blocks = ordered_json::array();
    for (const Block& block : plan.blocks) {
        blocks.push_back({{"kind", std::string(to_string(block.kind))},
                          {"bits", block.bits},
                          {"duration_ms", block.duration_ms},
                          {"channel", block.channel}});
    }
    return ordered_json{{"dr", std::string(to_string(plan.dr.id))},
                        {"payload_bytes", plan.payload_bytes},
                        {"encoded_payload_bits", plan.encoded_payload_bits},
                        {"total_payload_bits", plan.total_payload_bits},
                        {"total_bits", plan.total_bits},
                        {"fragments", plan.fragments},
                        {"transitions", plan.transitions},
                        {"n_channels", plan.n_channels},
                        {"seed", plan.seed},
                        {"blocks", std::move(blocks)}};
}

inline std::string frame_plan_csv(const FramePlan& plan) {
    std::string out = "index,kind,bits,duration_ms,channel\n";
    for (std::size_t i = 0; i < plan.blocks.size(); ++i) {
        const Block& block = plan.blocks[i];
        out += std::to_string(i) + "," + std::string(to_string(block.kind)) + "," +
               std::to_string(block.bits) + "," + format_number(block.duration_ms) + "," +
               std::to_string(block.channel) + "\n";
    }
    return out;
}

inline std::string comparison_csv(std::span<const ToaComparisonRow> rows) {
    std::string out = "L,dr,toa_proposed_ms,toa_model1_ms,toa_model2_ms,delta1_ms,delta2_ms\n";
    for (const ToaComparisonRow& row : rows) {
        out += std::to_string(row.payload_bytes) + "," + std::string(to_string(row.dr)) +
               "," + format_number(row.proposed_ms) + "," + format_number(row.model_i_ms) +
               "," + format_number(row.model_ii_ms) + "," + format_number(row.delta_i_ms) +
               "," + format_number(row.delta_ii_ms) + "\n";
    }
    return out;
}

inline ordered_json to_json(std::span<const ToaComparisonRow> rows) {
    ordered_json out = ordered_json::array();
    for (const ToaComparisonRow& row : rows) {
        out.push_back({{"L", row.payload_bytes},
                       {"dr", std::string(to_string(row.dr))},
                       {"toa_proposed_ms", row.proposed_ms},
                       {"toa_model1_ms", row.model_i_ms},
                       {"toa_model2_ms", row.model_ii_ms},
                       {"delta1_ms", row.delta_i_ms},
                       {"delta2_ms", row.delta_ii_ms}});
    }
    return out;
}

inline ordered_json to_json(const EnergyReport& report) {
    ordered_json charges;
    for (std::size_t i = 0; i < kStateCount; ++i) {
        charges[std::string(state_name(static_cast<RadioState>(i + 1)))] =
            report.charge_by_state_ma_ms[i];
    }
    ordered_json out{{"dr", std::string(to_string(report.dr))},
                     {"payload_bytes", report.payload_bytes},
                     {"p_tx_dbm", report.p_tx_dbm},
                     {"notification_ms", report.notification_ms},
                     {"toa_ms", report.toa_ms},
                     {"t_active_ms", report.active_ms},
                     {"average_current_ma", report.average_current_ma},
                     {"charge_by_state_ma_ms", std::move(charges)},
                     {"transition_drop_ma_ms", report.transition_drop_ma_ms}};
    if (report.battery_mah) {
        out["battery_mah"] = *report.battery_mah;
        out["lifetime_h"] = *report.lifetime_hours;
    }
    return out;
}

inline std::string energy_report_text(const EnergyReport& report) {
    std::string out;
    out += "dr: " + std::string(to_string(report.dr)) + "\n";
    out += "payload_bytes: " + std::to_string(report.payload_bytes) + "\n";
    out += "p_tx_dbm: " + format_number(report.p_tx_dbm) + "\n";
    out += "notification_ms: " + format_number(report.notification_ms) + "\n";
    out += "toa_ms: " + format_number(report.toa_ms) + "\n";
    out += "t_active_ms: " + format_number(report.active_ms) + "\n";
    out += "average_current_ma: " + format_number(report.average_current_ma) + "\n";
    for (std::size_t i = 0; i < kStateCount; ++i) {
        out += "charge_ma_ms." +
               std::string(state_name(static_cast<RadioState>(i + 1))) + ": " +
               format_number(report.charge_by_state_ma_ms[i]) + "\n";
    }
    out += "transition_drop_ma_ms: " + format_number(report.transition_drop_ma_ms) + "\n";
    if (report.battery_mah) {
        out += "battery_mah: " + format_number(*report.battery_mah) + "\n";
        out += "lifetime_h: " + format_number(*report.lifetime_hours) + "\n";
    }
    return out;
}

inline std::string sweep_csv(std::span<const SweepRow> rows) {
    std::string out =
        "dr,payload_bytes,p_tx_dbm,notification_s,toa_ms,t_active_ms,i_avg_ma,lifetime_h\n";
    for (const SweepRow& row : rows) {
        out += std::string(to_string(row.dr)) + "," + std::to_string(row.payload_bytes) +
               "," + format_number(row.p_tx_dbm) + "," + format_number(row.notification_s) +
               "," + format_number(row.toa_ms) + "," + format_number(row.active_ms) + "," +
               format_number(row.i_avg_ma) + ",";
        if (row.lifetime_hours) {
            out += format_number(*row.lifetime_hours);
        }
        out += "\n";
    }
    return out;
}

inline ordered_json to_json(std::span<const SweepRow> rows) {
    ordered_json out = ordered_json::array();
    for (const SweepRow& row : rows) {
        ordered_json entry{{"dr", std::string(to_string(row.dr))},
                           {"payload_bytes", row.payload_bytes},
                           {"p_tx_dbm", row.p_tx_dbm},
                           {"notification_s", row.notification_s},
                           {"toa_ms", row.toa_ms},
                           {"t_active_ms", row.active_ms},
                           {"i_avg_ma", row.i_avg_ma}};
        entry["lifetime_h"] = row.lifetime_hours ? ordered_json(*row.lifetime_hours)
                                                 : ordered_json(nullptr);
        out.push_back(std::move(entry));
    }
    return out;
}

inline ordered_json to_json(const StateTimeline& timeline) {
    ordered_json segments = ordered_json::array();
    for (const TimelineSegment& segment : timeline.segments) {
        segments.push_back({{"state", static_cast<int>(segment.state)},
                            {"name", std::string(state_name(segment.state))},
                            {"start_ms", segment.start_ms},
                            {"duration_ms", segment.duration_ms},
                            {"current_ma", segment.current_ma}});
    }
    ordered_json dips = ordered_json::array();
    for (const TransitionDip& dip : timeline.dips) {
        dips.push_back({{"start_ms", dip.start_ms},
                        {"width_ms", dip.width_ms},
                        {"top_ma", dip.top_ma},
                        {"bottom_ma", dip.bottom_ma},
                        {"mean_ma", dip.mean_ma()}});
    }
    return ordered_json{{"notification_ms", timeline.notification_ms},
                        {"segments", std::move(segments)},
                        {"dips", std::move(dips)}};
}

inline std::string timeline_csv(const StateTimeline& timeline) {
    std::string out = "kind,state,name,start_ms,duration_ms,current_ma\n";
    for (const TimelineSegment& segment : timeline.segments) {
        out += "segment," + std::to_string(static_cast<int>(segment.state)) + "," +
               std::string(state_name(segment.state)) + "," +
               format_number(segment.start_ms) + "," + format_number(segment.duration_ms) +
               "," + format_number(segment.current_ma) + "\n";
    }
    for (const TransitionDip& dip : timeline.dips) {
        out += "dip,,transition," + format_number(dip.start_ms) + "," +
               format_number(dip.width_ms) + "," + format_number(dip.mean_ma()) + "\n";
    }
    return out;
}

}  // namespace lrfhss
