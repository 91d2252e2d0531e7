#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lrfhss/calibration_io.hpp"
#include "support/test_support.hpp"

using namespace lrfhss;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::string bundled_calibration_path() {
    return std::string(LRFHSS_SOURCE_DIR) + "/data/table4.json";
}

// Rewrites one location of the bundled document, then re-serializes it.
template <typename Mutate>
std::string mutated_document(Mutate&& mutate) {
    auto doc = nlohmann::ordered_json::parse(read_file(bundled_calibration_path()));
    mutate(doc);
    return doc.dump();
}

}  // namespace

TEST_CASE("the bundled calibration carries the measured state constants") {
    const RadioCalibration cal = load_calibration(read_file(bundled_calibration_path()));
    CHECK(cal.wake_up.duration_ms == 0.4301);
    CHECK(cal.wake_up.current_ma == 1.9);
    CHECK(cal.standby_current_ma == 1.229);
    CHECK(cal.fs_current_ma == 3.7392);
    CHECK(cal.radio_prepare.duration_ms == 99.67);
    CHECK(cal.radio_prepare.current_ma == 2.968);
    CHECK(cal.radio_off.duration_ms == 9.45);
    CHECK(cal.radio_off.current_ma == 4.94);
    CHECK(cal.standby_final_duration_ms == 1.044);
    CHECK(cal.sleep_current_ma == 0.053);
    CHECK(cal.transition_time_ms == 0.61);
    CHECK(cal.pa_switch_threshold_dbm == 14.0);
}

TEST_CASE("the bundled calibration equals the in-code synthetic one") {
    CHECK(load_calibration(read_file(bundled_calibration_path())) ==
          testing::synthetic_calibration());
}

TEST_CASE("serialize/load round-trips field-for-field") {
    const RadioCalibration cal = testing::synthetic_calibration();
    CHECK(load_calibration(serialize_calibration(cal)) == cal);

    RadioCalibration odd = cal;
    odd.transition_time_ms = 0.6100000000001;
    odd.pa_switch_threshold_dbm = 14.25;
    odd.tx_current_curve[3].i_tx_ma = 69.9999999999;
    CHECK(load_calibration(serialize_calibration(odd)) == odd);
}

TEST_CASE("a missing pa_switch_threshold_dbm defaults to 14") {
    const std::string doc = mutated_document(
        [](nlohmann::ordered_json& j) { j.erase("pa_switch_threshold_dbm"); });
    CHECK(load_calibration(doc).pa_switch_threshold_dbm == 14.0);
}

TEST_CASE("malformed documents are rejected with the offending field named") {
    SUBCASE("not JSON at all") {
        CHECK_THROWS_AS(load_calibration("not json {"), ParseError);
    }
    SUBCASE("top level must be an object") {
        CHECK_THROWS_AS(load_calibration("[1, 2, 3]"), ParseError);
    }
    SUBCASE("missing transition_time_ms") {
        const auto doc = mutated_document(
            [](nlohmann::ordered_json& j) { j.erase("transition_time_ms"); });
        CHECK_THROWS_WITH_AS(load_calibration(doc), doctest::Contains("transition_time_ms"),
                             ParseError);
    }
    SUBCASE("unknown top-level key") {
        const auto doc =
            mutated_document([](nlohmann::ordered_json& j) { j["extra"] = 1; });
        CHECK_THROWS_WITH_AS(load_calibration(doc), doctest::Contains("unknown key 'extra'"),
                             ParseError);
    }
    SUBCASE("unknown state key") {
        const auto doc = mutated_document(
            [](nlohmann::ordered_json& j) { j["states"]["rx"] = {{"current_ma", 10.0}}; });
        CHECK_THROWS_WITH_AS(load_calibration(doc), doctest::Contains("unknown key 'rx'"),
                             ParseError);
    }
    SUBCASE("standby takes a curve, not a scalar duration") {
        const auto doc = mutated_document([](nlohmann::ordered_json& j) {
            j["states"]["standby"]["duration_ms"] = 12.0;
        });
        CHECK_THROWS_WITH_AS(load_calibration(doc),
                             doctest::Contains("unknown key 'duration_ms'"), ParseError);
    }
    SUBCASE("missing state") {
        const auto doc = mutated_document(
            [](nlohmann::ordered_json& j) { j["states"].erase("sleep"); });
        CHECK_THROWS_WITH_AS(load_calibration(doc), doctest::Contains("'sleep'"), ParseError);
    }
    SUBCASE("curve entries must be number pairs") {
        const auto doc = mutated_document([](nlohmann::ordered_json& j) {
            j["states"]["fs"]["curve"] = {{1.0, 25.0, 3.0}};
        });
        CHECK_THROWS_WITH_AS(load_calibration(doc), doctest::Contains("states.fs.curve"),
                             ParseError);
    }
    SUBCASE("tx points reject unknown keys") {
        const auto doc = mutated_document(
            [](nlohmann::ordered_json& j) { j["tx_current"][0]["note"] = "x"; });
        CHECK_THROWS_WITH_AS(load_calibration(doc), doctest::Contains("tx_current[0]"),
                             ParseError);
    }
    SUBCASE("tx points reject unknown amplifier tags") {
        const auto doc = mutated_document(
            [](nlohmann::ordered_json& j) { j["tx_current"][0]["pa"] = "XPA"; });
        CHECK_THROWS_WITH_AS(load_calibration(doc), doctest::Contains("'LPA' or 'HPA'"),
                             ParseError);
    }
    SUBCASE("tx points reject unknown data rates") {
        const auto doc = mutated_document(
            [](nlohmann::ordered_json& j) { j["tx_current"][0]["dr"] = "DR7"; });
        CHECK_THROWS_WITH_AS(load_calibration(doc), doctest::Contains("unknown data rate"),
                             ParseError);
    }
    SUBCASE("unsupported schema version") {
        const auto doc =
            mutated_document([](nlohmann::ordered_json& j) { j["schema_version"] = 2; });
        CHECK_THROWS_WITH_AS(load_calibration(doc), doctest::Contains("schema_version"),
                             ParseError);
    }
    SUBCASE("numbers must be numbers") {
        const auto doc = mutated_document([](nlohmann::ordered_json& j) {
            j["states"]["wake_up"]["duration_ms"] = "0.43";
        });
        CHECK_THROWS_WITH_AS(load_calibration(doc), doctest::Contains("expected a number"),
                             ParseError);
    }
}

TEST_CASE("value invariants surface through loading as validation errors") {
    const auto doc = mutated_document(
        [](nlohmann::ordered_json& j) { j["states"]["sleep"]["current_ma"] = 0.0; });
    CHECK_THROWS_WITH_AS(load_calibration(doc), doctest::Contains("currents must be positive"),
                         ValidationError);
}
