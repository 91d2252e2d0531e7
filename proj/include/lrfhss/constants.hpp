#pragma once

namespace lrfhss {

/// Physical-layer bit accounting shared by every model. The GMSK uplink
/// runs at a fixed instantaneous bit rate, so every duration in the library
/// reduces to a bit count times the bit duration.
struct PhyConstants {
    double bit_rate_bps = 488.28125;     ///< instantaneous bit rate R_b
    int header_bits = 114;               ///< encoded bits per header replica
    int fragment_payload_bits = 48;      ///< payload-carrying bits per fragment
    int preamble_bits_per_fragment = 2;  ///< preamble bits prepended to each hop
    int fragment_bits = 50;              ///< full fragment: 48 payload + 2 preamble
    int crc_bytes = 2;                   ///< CRC appended to the payload before FEC
    int overhead_bits = 6;               ///< encoder overhead added after FEC
    int min_payload_bytes = 1;
    int max_payload_bytes = 255;

    constexpr double bit_duration_ms() const { return 1000.0 / bit_rate_bps; }

    /// 114 bits at R_b: 233.472 ms.
    constexpr double header_duration_ms() const {
        return header_bits * bit_duration_ms();
    }

    /// 50 bits at R_b: 102.4 ms. The fixed fragment duration used by the
    /// published baseline models.
    constexpr double fragment_duration_ms() const {
        return fragment_bits * bit_duration_ms();
    }
};

inline constexpr PhyConstants kPhy{};

}  // namespace lrfhss
