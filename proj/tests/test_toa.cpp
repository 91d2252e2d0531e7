#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lrfhss/serialization.hpp"
#include "lrfhss/toa.hpp"

using namespace lrfhss;

namespace {

const DataRateProfile kDr8 = profile_for(DataRate::DR8);
const DataRateProfile kDr9 = profile_for(DataRate::DR9);

bool close_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("transition-aware ToA matches hand-derived values") {
    // 10 bytes DR8: 650 bits * 2.048 ms + 0.61 ms * 9 transitions.
    CHECK(close_abs(toa_proposed(10, kDr8, 0.61), 1336.69, 1e-9));
    // 15 bytes DR8 without transitions: 774 bits * 2.048 ms.
    CHECK(close_abs(toa_proposed(15, kDr8, 0.0), 1585.152, 1e-9));
}

TEST_CASE("ToA is affine in the transition time with slope N_T") {
    for (const auto& dr : {kDr8, kDr9}) {
        for (const int payload : {1, 10, 15, 65, 255}) {
            const int transitions =
                dr.header_replicas + fragment_count(payload, dr) - 1;
            const double base = toa_proposed(payload, dr, 0.0);
            CHECK(close_abs(toa_proposed(payload, dr, 0.61) - base, 0.61 * transitions,
                            1e-9));
            CHECK(close_abs(toa_proposed(payload, dr, 2.0) - base, 2.0 * transitions,
                            1e-9));
        }
    }
    CHECK_THROWS_AS(toa_proposed(10, kDr8, -0.1), DomainError);
}

TEST_CASE("fixed-slot baseline matches hand-derived values") {
    // 3 * 233.472 + 7 * 102.4 and 2 * 233.472 + 4 * 102.4.
    CHECK(close_abs(toa_model_i(10, kDr8), 1417.216, 1e-9));
    CHECK(close_abs(toa_model_i(10, kDr9), 876.544, 1e-9));
}

TEST_CASE("fixed-slot baseline plateaus between byte steps") {
    CHECK(toa_model_i(10, kDr8) == toa_model_i(11, kDr8));
    CHECK(toa_model_i(10, kDr9) == toa_model_i(11, kDr9));
    CHECK(toa_model_i(12, kDr9) == toa_model_i(13, kDr9));
}

TEST_CASE("fractional-fragment baseline matches hand-derived values") {
    // 700.416 + 6 * 102.4 and 466.944 + 3 * 102.4.
    CHECK(close_abs(toa_model_ii(10, kDr8), 1314.816, 1e-9));
    CHECK(close_abs(toa_model_ii(10, kDr9), 774.144, 1e-9));
}

TEST_CASE("fractional-fragment payload term is linear in payload+2") {
    // Doubling payload+2 doubles the payload term.
    const double header_dr8 = 3 * 233.472;
    const double term10 = toa_model_ii(10, kDr8) - header_dr8;
    const double term22 = toa_model_ii(22, kDr8) - header_dr8;
    CHECK(close_abs(term22, 2.0 * term10, 1e-9));
}

TEST_CASE("closed form and frame-plan route agree for every length") {
    for (const auto& dr : {kDr8, kDr9}) {
        for (int payload = 1; payload <= 255; ++payload) {
            const auto plan = build_frame_plan(payload, dr, HopGrid{35, 5});
            for (const double tt : {0.0, 0.61}) {
                const double closed = toa_proposed(payload, dr, tt);
                const double from_plan = toa_from_frame_plan(plan, tt);
                REQUIRE(std::abs(closed - from_plan) <= 1e-9 * closed);
            }
        }
    }
}

TEST_CASE("two-block plan sums its own durations") {
    const auto plan = build_frame_plan(1, kDr9, HopGrid{8, 1});  // 2 headers + 1 fragment
    double expected = 0.0;
    for (const auto& block : plan.blocks) {
        expected += block.bits * 2.048;
    }
    CHECK(close_abs(toa_from_frame_plan(plan, 0.0), expected, 1e-9));
    CHECK(close_abs(toa_from_frame_plan(plan, 0.7) - toa_from_frame_plan(plan, 0.0),
                    0.7 * plan.transitions, 1e-12));
}

TEST_CASE("the fractional baseline never exceeds the transition-aware model") {
    for (const auto& dr : {kDr8, kDr9}) {
        for (int payload = 1; payload <= 255; ++payload) {
            CHECK(toa_model_ii(payload, dr) <= toa_proposed(payload, dr, 0.0));
            CHECK(toa_model_ii(payload, dr) <= toa_proposed(payload, dr, 0.61));
        }
    }
}

TEST_CASE("fixed-slot baseline jumps by exactly one slot every M bytes") {
    for (const auto& dr : {kDr8, kDr9}) {
        const int step = dr.code_rate == kCodeRateOneThird ? 2 : 4;
        for (int payload = 10; payload < 65; ++payload) {
            const double jump = toa_model_i(payload + 1, dr) - toa_model_i(payload, dr);
            if ((payload + 3) % step == 0) {
                CHECK(close_abs(jump, 102.4, 1e-9));
            } else {
                CHECK(close_abs(jump, 0.0, 1e-9));
            }
        }
    }
}

TEST_CASE("all three models are non-decreasing in the payload length") {
    for (const auto& dr : {kDr8, kDr9}) {
        for (int payload = 1; payload < 255; ++payload) {
            CHECK(toa_proposed(payload + 1, dr, 0.61) >= toa_proposed(payload, dr, 0.61));
            CHECK(toa_model_i(payload + 1, dr) >= toa_model_i(payload, dr));
            CHECK(toa_model_ii(payload + 1, dr) >= toa_model_ii(payload, dr));
        }
    }
}

TEST_CASE("model comparison emits one row per payload length") {
    const auto rows = compare_models(10, 65, kDr8, 0.61);
    REQUIRE(rows.size() == 56);
    for (const auto& row : rows) {
        CHECK(close_abs(row.delta_i_ms, row.model_i_ms - row.proposed_ms, 1e-12));
        CHECK(close_abs(row.delta_ii_ms, row.model_ii_ms - row.proposed_ms, 1e-12));
        CHECK(row.model_ii_ms <= row.proposed_ms);
    }
    CHECK(rows.front().payload_bytes == 10);
    CHECK(rows.back().payload_bytes == 65);

    const auto single = compare_models(10, 10, kDr8, 0.61);
    REQUIRE(single.size() == 1);
    CHECK(close_abs(single[0].proposed_ms, 1336.69, 1e-9));

    // Pure computation: a rerun reproduces the table exactly.
    const auto rows_again = compare_models(10, 65, kDr8, 0.61);
    REQUIRE(rows_again.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].proposed_ms == rows_again[i].proposed_ms);
        CHECK(rows[i].model_i_ms == rows_again[i].model_i_ms);
        CHECK(rows[i].model_ii_ms == rows_again[i].model_ii_ms);
    }

    CHECK_THROWS_AS(compare_models(20, 10, kDr8, 0.61), DomainError);
}

TEST_CASE("comparison CSV carries the pinned column header") {
    const auto rows = compare_models(10, 12, kDr8, 0.61);
    const auto csv = comparison_csv(rows);
    CHECK(csv.rfind("L,dr,toa_proposed_ms,toa_model1_ms,toa_model2_ms,delta1_ms,delta2_ms\n",
                    0) == 0);
    CHECK(csv.find("10,DR8,1336.69,1417.216,1314.816,") != std::string::npos);
}
