#pragma once

#include <vector>

#include "lrfhss/framing.hpp"

namespace lrfhss {

namespace detail {

// 6*CR is integral for the supported code rates: 2 for DR8-class, 4 for
// DR9-class. Both baseline models step fragments in these byte units.
inline int fragment_byte_step(const DataRateProfile& dr) {
    return 6 * dr.code_rate.numerator / dr.code_rate.denominator;
}

}  // namespace detail

/// Transition-aware Time-on-Air: every encoded bit at the fixed bit rate,
/// plus one hop transition between consecutive blocks.
inline double toa_proposed(int payload_bytes, const DataRateProfile& dr,
                           double transition_ms) {
    if (transition_ms < 0.0) {
        throw DomainError("transition time must be non-negative");
    }
    const int encoded = encoded_payload_bits(payload_bytes, dr);
    const int n_fragments = fragment_count(payload_bytes, dr);
    const int total_bits = kPhy.header_bits * dr.header_replicas + encoded +
                           kPhy.preamble_bits_per_fragment * n_fragments;
    const int transitions = dr.header_replicas + n_fragments - 1;
    return total_bits * kPhy.bit_duration_ms() + transition_ms * transitions;
}

/// Baseline that assumes every fragment takes the full 102.4 ms slot.
/// Piecewise constant in the payload length (sawtooth against the other
/// models).
inline double toa_model_i(int payload_bytes, const DataRateProfile& dr) {
    detail::check_payload_range(payload_bytes);
    validate(dr);
    const int step = detail::fragment_byte_step(dr);
    const int full_fragments = (payload_bytes + 3 + step - 1) / step;
    return dr.header_replicas * kPhy.header_duration_ms() +
           kPhy.fragment_duration_ms() * full_fragments;
}

/// Baseline with a fractional fragment count, reproduced as published:
/// no ceiling, no preamble or overhead bits, no transitions. It therefore
/// never exceeds the transition-aware model.
inline double toa_model_ii(int payload_bytes, const DataRateProfile& dr) {
    detail::check_payload_range(payload_bytes);
    validate(dr);
    const double fractional_fragments =
        static_cast<double>(payload_bytes + kPhy.crc_bytes) /
        detail::fragment_byte_step(dr);
    return dr.header_replicas * kPhy.header_duration_ms() +
           fractional_fragments * kPhy.fragment_duration_ms();
}

/// Frame-plan route to the same number: sums the explicit per-block
/// durations. Cross-checks toa_proposed, which never builds a plan.
inline double toa_from_frame_plan(const FramePlan& plan, double transition_ms) {
    if (transition_ms < 0.0) {
        throw DomainError("transition time must be non-negative");
    }
    double on_air_ms = 0.0;
    for (const Block& block : plan.blocks) {
        on_air_ms += block.duration_ms;
    }
    return on_air_ms + transition_ms * plan.transitions;
}

struct ToaComparisonRow {
    int payload_bytes = 0;
    DataRate dr = DataRate::DR8;
    double proposed_ms = 0.0;
    double model_i_ms = 0.0;
    double model_ii_ms = 0.0;
    double delta_i_ms = 0.0;   ///< model_i - proposed
    double delta_ii_ms = 0.0;  ///< model_ii - proposed
};

/// One row per payload length in [from, to].
inline std::vector<ToaComparisonRow> compare_models(int from, int to,
                                                    const DataRateProfile& dr,
                                                    double transition_ms) {
    detail::check_payload_range(from);
    detail::check_payload_range(to);
    if (from > to) {
        throw DomainError("payload range is empty (from > to)");
    }
    std::vector<ToaComparisonRow> rows;
    rows.reserve(static_cast<std::size_t>(to - from + 1));
    for (int payload = from; payload <= to; ++payload) {
        ToaComparisonRow row;
        row.payload_bytes = payload;
        row.dr = dr.id;
        row.proposed_ms = toa_proposed(payload, dr, transition_ms);
        row.model_i_ms = toa_model_i(payload, dr);
        row.model_ii_ms = toa_model_ii(payload, dr);
        row.delta_i_ms = row.model_i_ms - row.proposed_ms;
        row.delta_ii_ms = row.model_ii_ms - row.proposed_ms;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace lrfhss
