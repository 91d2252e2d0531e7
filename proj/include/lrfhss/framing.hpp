#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lrfhss/constants.hpp"
#include "lrfhss/datarate.hpp"
#include "lrfhss/errors.hpp"

namespace lrfhss {

enum class BlockKind { header, fragment };

inline std::string_view to_string(BlockKind kind) {
    return kind == BlockKind::header ? "header" : "fragment";
}

/// One on-air unit: a header replica or a payload fragment, sent on a
/// single OBW channel.
struct Block {
    BlockKind kind = BlockKind::header;
    int bits = 0;
    double duration_ms = 0.0;
    std::uint32_t channel = 0;
    bool operator==(const Block&) const = default;
};

/// OBW hop grid: how many subchannels the transmitter hops across and the
/// seed of the hop-sequence generator.
struct HopGrid {
    std::uint32_t n_channels = 0;
    std::uint64_t seed = 0;
    bool operator==(const HopGrid&) const = default;
};

/// Complete on-air layout of one uplink: header replicas first, then the
/// FEC-sized payload fragments, with a hop channel per block.
struct FramePlan {
    DataRateProfile dr{};
    int payload_bytes = 0;
    int encoded_payload_bits = 0;  ///< payload + CRC after FEC, plus encoder overhead
    int total_payload_bits = 0;    ///< encoded payload plus per-fragment preambles
    int total_bits = 0;            ///< headers + total payload
    int fragments = 0;
    int transitions = 0;  ///< hop changes: one fewer than the block count
    std::uint32_t n_channels = 0;
    std::uint64_t seed = 0;
    std::vector<Block> blocks{};
};

namespace detail {

inline void check_payload_range(int payload_bytes) {
    if (payload_bytes < kPhy.min_payload_bytes || payload_bytes > kPhy.max_payload_bytes) {
        throw DomainError("payload must be between " +
                          std::to_string(kPhy.min_payload_bytes) + " and " +
                          std::to_string(kPhy.max_payload_bytes) + " bytes, got " +
                          std::to_string(payload_bytes));
    }
}

}  // namespace detail

/// Bits left after appending the CRC, coding at the profile's rate, and
/// adding the encoder overhead. Exact integer arithmetic; the supported
/// code rates always divide evenly, the ceiling guards reserved ones.
inline int encoded_payload_bits(int payload_bytes, const DataRateProfile& dr) {
    detail::check_payload_range(payload_bytes);
    validate(dr);
    const int info_bits = 8 * (payload_bytes + kPhy.crc_bytes);
    const int num = dr.code_rate.numerator;
    const int den = dr.code_rate.denominator;
    const int coded_bits = (info_bits * den + num - 1) / num;
    return coded_bits + kPhy.overhead_bits;
}

inline int fragment_count(int payload_bytes, const DataRateProfile& dr) {
    const int bits = encoded_payload_bits(payload_bytes, dr);
    return (bits + kPhy.fragment_payload_bits - 1) / kPhy.fragment_payload_bits;
}

/// Per-block bit counts in transmit order: N_H headers, then fragments of
/// 48 payload bits + 2 preamble bits each, the last carrying whatever
/// payload bits remain (plus its preamble).
inline std::vector<int> block_bit_counts(int payload_bytes, const DataRateProfile& dr) {
    const int encoded = encoded_payload_bits(payload_bytes, dr);
    const int n_fragments = fragment_count(payload_bytes, dr);
    std::vector<int> bits;
    bits.reserve(static_cast<std::size_t>(dr.header_replicas + n_fragments));
    for (int i = 0; i < dr.header_replicas; ++i) {
        bits.push_back(kPhy.header_bits);
    }
    int remaining = encoded;
    for (int i = 0; i < n_fragments; ++i) {
        const int carried = remaining < kPhy.fragment_payload_bits
                                ? remaining
                                : kPhy.fragment_payload_bits;
        bits.push_back(carried + kPhy.preamble_bits_per_fragment);
        remaining -= carried;
    }
    return bits;
}

/// Deterministic hop sequence: every index in [0, n_channels), no two
/// consecutive indices equal, identical output for identical (seed, grid).
/// This is a behavioral stand-in, not the vendor hop algorithm.
inline std::vector<std::uint32_t> generate_hop_sequence(std::size_t n_blocks,
                                                        const HopGrid& grid) {
    if (n_blocks == 0) {
        throw DomainError("hop sequence needs at least one block");
    }
    if (grid.n_channels < 2) {
        throw DomainError("hop grid needs at least 2 channels, got " +
                          std::to_string(grid.n_channels));
    }
    // xorshift64*; the all-zero state is a fixed point, so remap seed 0.
    std::uint64_t state = grid.seed != 0 ? grid.seed : 0x9E3779B97F4A7C15ULL;
    const auto next_channel = [&state, &grid] {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        const std::uint64_t word = state * 0x2545F4914F6CDD1DULL;
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(word) * grid.n_channels) >> 64);
    };
    std::vector<std::uint32_t> sequence;
    sequence.reserve(n_blocks);
    sequence.push_back(next_channel());
    while (sequence.size() < n_blocks) {
        const std::uint32_t channel = next_channel();
        if (channel == sequence.back()) {
            continue;
        }
        sequence.push_back(channel);
    }
    return sequence;
}

inline FramePlan build_frame_plan(int payload_bytes, const DataRateProfile& dr,
                                  const HopGrid& grid) {
    const std::vector<int> bits = block_bit_counts(payload_bytes, dr);
    const std::vector<std::uint32_t> channels = generate_hop_sequence(bits.size(), grid);

    FramePlan plan;
    plan.dr = dr;
    plan.payload_bytes = payload_bytes;
    plan.encoded_payload_bits = encoded_payload_bits(payload_bytes, dr);
    plan.fragments = fragment_count(payload_bytes, dr);
    plan.total_payload_bits =
        plan.encoded_payload_bits + kPhy.preamble_bits_per_fragment * plan.fragments;
    plan.total_bits = kPhy.header_bits * dr.header_replicas + plan.total_payload_bits;
    plan.transitions = dr.header_replicas + plan.fragments - 1;
    plan.n_channels = grid.n_channels;
    plan.seed = grid.seed;
    plan.blocks.reserve(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const BlockKind kind = i < static_cast<std::size_t>(dr.header_replicas)
                                   ? BlockKind::header
                                   : BlockKind::fragment;
        plan.blocks.push_back(
            Block{kind, bits[i], bits[i] * kPhy.bit_duration_ms(), channels[i]});
    }
    return plan;
}

}  // namespace lrfhss
