#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lrfhss/errors.hpp"

namespace lrfhss {

/// LR-FHSS data rates. DR8..DR11 are the ETSI labels, DR5_US/DR6_US the
/// FCC ones. DR10/DR11 and the US rates alias the DR8/DR9 configurations.
enum class DataRate { DR8, DR9, DR10, DR11, DR5_US, DR6_US };

/// Exact rational code rate so bit accounting divides without rounding.
struct CodeRate {
    int numerator = 1;
    int denominator = 1;
    bool operator==(const CodeRate&) const = default;
};

inline constexpr CodeRate kCodeRateOneThird{1, 3};
inline constexpr CodeRate kCodeRateTwoThirds{2, 3};

struct DataRateProfile {
    DataRate id = DataRate::DR8;
    CodeRate code_rate = kCodeRateOneThird;
    int header_replicas = 3;  ///< N_H, set by the data rate
    bool operator==(const DataRateProfile&) const = default;
};

constexpr DataRate canonical(DataRate id) {
    switch (id) {
        case DataRate::DR8:
        case DataRate::DR10:
        case DataRate::DR5_US:
            return DataRate::DR8;
        case DataRate::DR9:
        case DataRate::DR11:
        case DataRate::DR6_US:
            return DataRate::DR9;
    }
    return DataRate::DR8;
}

/// DR8-class rates code at 1/3 with three header replicas; DR9-class rates
/// code at 2/3 with two.
constexpr DataRateProfile profile_for(DataRate id) {
    if (canonical(id) == DataRate::DR8) {
        return DataRateProfile{id, kCodeRateOneThird, 3};
    }
    return DataRateProfile{id, kCodeRateTwoThirds, 2};
}

inline std::string_view to_string(DataRate id) {
    switch (id) {
        case DataRate::DR8: return "DR8";
        case DataRate::DR9: return "DR9";
        case DataRate::DR10: return "DR10";
        case DataRate::DR11: return "DR11";
        case DataRate::DR5_US: return "DR5US";
        case DataRate::DR6_US: return "DR6US";
    }
    return "DR8";
}

inline std::optional<DataRate> parse_data_rate(std::string_view name) {
    if (name == "DR8") return DataRate::DR8;
    if (name == "DR9") return DataRate::DR9;
    if (name == "DR10") return DataRate::DR10;
    if (name == "DR11") return DataRate::DR11;
    if (name == "DR5US" || name == "DR5_US") return DataRate::DR5_US;
    if (name == "DR6US" || name == "DR6_US") return DataRate::DR6_US;
    return std::nullopt;
}

/// Rejects profiles whose fields disagree with their id. The 1/2 and 5/6
/// code rates exist on the wire format but are reserved and unsupported.
inline void validate(const DataRateProfile& dr) {
    const bool one_third = dr.code_rate == kCodeRateOneThird;
    const bool two_thirds = dr.code_rate == kCodeRateTwoThirds;
    if (!one_third && !two_thirds) {
        throw DomainError("code rate " + std::to_string(dr.code_rate.numerator) + "/" +
                          std::to_string(dr.code_rate.denominator) +
                          " is unsupported (reserved)");
    }
    if (dr != profile_for(dr.id)) {
        const auto expected = profile_for(dr.id);
        throw DomainError(std::string(to_string(dr.id)) + " implies code rate " +
                          std::to_string(expected.code_rate.numerator) + "/" +
                          std::to_string(expected.code_rate.denominator) + " and " +
                          std::to_string(expected.header_replicas) + " header replicas");
    }
}

}  // namespace lrfhss
