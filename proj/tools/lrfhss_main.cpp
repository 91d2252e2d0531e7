// lrfhss: airtime, frame-plan, and current-consumption calculations for
// LR-FHSS uplinks, emitted as plot-ready CSV/JSON. Exit codes: 0 success,
// 1 model/calibration error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lrfhss/lrfhss.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

[[noreturn]] void usage_fail(const std::string& message) {
    // CLI11 cannot express every cross-flag rule; route the rest here.
    throw CLI::ValidationError(message);
}

lrfhss::DataRateProfile profile_from_flag(const std::string& name) {
    const auto dr = lrfhss::parse_data_rate(name);
    if (!dr) {
        usage_fail("unknown data rate '" + name + "'");
    }
    return lrfhss::profile_for(*dr);
}

lrfhss::RadioCalibration load_calibration_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw lrfhss::Error("cannot open calibration file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return lrfhss::load_calibration(text.str());
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw lrfhss::Error("cannot open output file '" + out_path + "'");
    }
    out << text;
}

std::string json_text(const lrfhss::ordered_json& value) { return value.dump(2) + "\n"; }

struct ToaOptions {
    std::string dr;
    int payload = 0;
    double tt_ms = 0.61;
    std::string format = "text";
    std::string out;
};

int run_toa(const ToaOptions& opt) {
    const auto profile = profile_from_flag(opt.dr);
    const double proposed = lrfhss::toa_proposed(opt.payload, profile, opt.tt_ms);
    const double model1 = lrfhss::toa_model_i(opt.payload, profile);
    const double model2 = lrfhss::toa_model_ii(opt.payload, profile);
    if (opt.format == "json") {
        lrfhss::ordered_json doc{{"dr", std::string(lrfhss::to_string(profile.id))},
                                 {"payload_bytes", opt.payload},
                                 {"tt_ms", opt.tt_ms},
                                 {"toa_proposed_ms", proposed},
                                 {"toa_model1_ms", model1},
                                 {"toa_model2_ms", model2}};
        write_output(json_text(doc), opt.out);
    } else {
        std::string text;
        text += "dr: " + std::string(lrfhss::to_string(profile.id)) + "\n";
        text += "payload_bytes: " + std::to_string(opt.payload) + "\n";
        text += "tt_ms: " + lrfhss::format_number(opt.tt_ms) + "\n";
        text += "toa_proposed_ms: " + lrfhss::format_number(proposed) + "\n";
        text += "toa_model1_ms: " + lrfhss::format_number(model1) + "\n";
        text += "toa_model2_ms: " + lrfhss::format_number(model2) + "\n";
        write_output(text, opt.out);
    }
    return kExitOk;
}

struct CompareOptions {
    std::string dr;
    int from = 0;
    int to = 0;
    double tt_ms = 0.61;
    std::string format = "csv";
    std::string out;
};

int run_compare(const CompareOptions& opt) {
    if (opt.from > opt.to) {
        usage_fail("--from must not exceed --to");
    }
    const auto rows =
        lrfhss::compare_models(opt.from, opt.to, profile_from_flag(opt.dr), opt.tt_ms);
    if (opt.format == "json") {
        write_output(json_text(lrfhss::to_json(std::span(rows))), opt.out);
    } else {
        write_output(lrfhss::comparison_csv(rows), opt.out);
    }
    return kExitOk;
}

struct FrameOptions {
    std::string dr;
    int payload = 0;
    std::uint32_t channels = 35;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out;
};

int run_frame(const FrameOptions& opt) {
    const auto plan = lrfhss::build_frame_plan(opt.payload, profile_from_flag(opt.dr),
                                               lrfhss::HopGrid{opt.channels, opt.seed});
    if (opt.format == "csv") {
        write_output(lrfhss::frame_plan_csv(plan), opt.out);
    } else {
        write_output(json_text(lrfhss::to_json(plan)), opt.out);
    }
    return kExitOk;
}

struct EnergyOptions {
    std::string cal;
    std::string dr;
    int payload = 0;
    double p_tx_dbm = 0.0;
    double period_s = 0.0;
    std::optional<double> battery_mah;
    std::optional<double> tt_ms;
    bool timeline = false;
    std::string format = "text";
    std::string out;
};

int run_energy(const EnergyOptions& opt) {
    auto cal = load_calibration_file(opt.cal);
    if (opt.tt_ms) {
        cal.transition_time_ms = *opt.tt_ms;
        lrfhss::validate(cal);
    }
    const auto profile = profile_from_flag(opt.dr);
    const double notification_ms = opt.period_s * 1000.0;
    if (opt.timeline) {
        const auto timeline = lrfhss::build_state_timeline(opt.payload, profile,
                                                           opt.p_tx_dbm, notification_ms, cal);
        if (opt.format == "csv") {
            write_output(lrfhss::timeline_csv(timeline), opt.out);
        } else {
            write_output(json_text(lrfhss::to_json(timeline)), opt.out);
        }
        return kExitOk;
    }
    if (opt.format == "csv") {
        usage_fail("energy reports support --format text or json (csv is for --timeline)");
    }
    const auto report = lrfhss::make_energy_report(opt.payload, profile, opt.p_tx_dbm,
                                                   notification_ms, cal, opt.battery_mah);
    if (opt.format == "json") {
        write_output(json_text(lrfhss::to_json(report)), opt.out);
    } else {
        write_output(lrfhss::energy_report_text(report), opt.out);
    }
    return kExitOk;
}

struct SweepOptions {
    std::string cal;
    std::string dimension;
    double from = 0.0;
    double to = 0.0;
    double step = 1.0;
    std::string dr;
    std::optional<int> payload;
    std::optional<double> p_tx_dbm;
    std::optional<double> period_s;
    std::optional<double> battery_mah;
    std::optional<double> tt_ms;
    std::string format = "csv";
    std::string out;
};

int run_sweep(const SweepOptions& opt) {
    auto cal = load_calibration_file(opt.cal);
    if (opt.tt_ms) {
        cal.transition_time_ms = *opt.tt_ms;
        lrfhss::validate(cal);
    }
    lrfhss::SweepRequest request;
    request.dr = profile_from_flag(opt.dr).id;
    request.from = opt.from;
    request.to = opt.to;
    request.step = opt.step;
    request.battery_mah = opt.battery_mah;
    const auto need = [&](const char* flag, const auto& value) {
        if (!value) {
            usage_fail(std::string(flag) + " is required for this sweep dimension");
        }
        return *value;
    };
    if (opt.dimension == "ptx") {
        request.dimension = lrfhss::SweepDimension::p_tx;
        request.payload_bytes = need("--payload", opt.payload);
        request.period_s = need("--period", opt.period_s);
    } else if (opt.dimension == "payload") {
        request.dimension = lrfhss::SweepDimension::payload;
        request.p_tx_dbm = need("--ptx", opt.p_tx_dbm);
        request.period_s = need("--period", opt.period_s);
        if (opt.from < 1 || opt.to > 255) {
            usage_fail("payload sweep bounds must be within 1..255 bytes");
        }
    } else {
        request.dimension = lrfhss::SweepDimension::period;
        request.payload_bytes = need("--payload", opt.payload);
        request.p_tx_dbm = need("--ptx", opt.p_tx_dbm);
        if (opt.from <= 0) {
            usage_fail("period sweep bounds must be positive seconds");
        }
    }
    const auto rows = lrfhss::run_sweep(request, cal);
    if (opt.format == "json") {
        write_output(json_text(lrfhss::to_json(std::span(rows))), opt.out);
    } else {
        write_output(lrfhss::sweep_csv(rows), opt.out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LR-FHSS airtime, frame-plan, and current-consumption calculator"};
    app.require_subcommand(1);

    const std::vector<std::string> dr_names{"DR8", "DR9", "DR10", "DR11", "DR5US", "DR6US"};
    const auto dr_check = CLI::IsMember(dr_names);
    const auto format_check = CLI::IsMember({"text", "json", "csv"});

    ToaOptions toa_opt;
    auto* toa_cmd = app.add_subcommand("toa", "Time-on-Air under all three models");
    toa_cmd->add_option("--dr", toa_opt.dr, "data rate")->required()->check(dr_check);
    toa_cmd->add_option("--payload", toa_opt.payload, "payload length in bytes")
        ->required()
        ->check(CLI::Range(1, 255));
    toa_cmd->add_option("--tt", toa_opt.tt_ms, "hop transition time in ms (default 0.61)")
        ->check(CLI::NonNegativeNumber);
    toa_cmd->add_option("--format", toa_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    toa_cmd->add_option("--out", toa_opt.out, "write to file instead of stdout");

    CompareOptions compare_opt;
    auto* compare_cmd =
        app.add_subcommand("compare", "model-comparison table over a payload range");
    compare_cmd->add_option("--dr", compare_opt.dr, "data rate")->required()->check(dr_check);
    compare_cmd->add_option("--from", compare_opt.from, "first payload length (bytes)")
        ->required()
        ->check(CLI::Range(1, 255));
    compare_cmd->add_option("--to", compare_opt.to, "last payload length (bytes)")
        ->required()
        ->check(CLI::Range(1, 255));
    compare_cmd->add_option("--tt", compare_opt.tt_ms, "hop transition time in ms")
        ->check(CLI::NonNegativeNumber);
    compare_cmd->add_option("--format", compare_opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    compare_cmd->add_option("--out", compare_opt.out, "write to file instead of stdout");

    FrameOptions frame_opt;
    auto* frame_cmd = app.add_subcommand("frame", "frame plan with hop-channel assignment");
    frame_cmd->add_option("--dr", frame_opt.dr, "data rate")->required()->check(dr_check);
    frame_cmd->add_option("--payload", frame_opt.payload, "payload length in bytes")
        ->required()
        ->check(CLI::Range(1, 255));
    frame_cmd->add_option("--channels", frame_opt.channels, "OBW channels in the grid")
        ->check(CLI::Range(2u, 1000000u));
    frame_cmd->add_option("--seed", frame_opt.seed, "hop-sequence generator seed");
    frame_cmd->add_option("--format", frame_opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    frame_cmd->add_option("--out", frame_opt.out, "write to file instead of stdout");

    EnergyOptions energy_opt;
    auto* energy_cmd =
        app.add_subcommand("energy", "average current and lifetime for one configuration");
    energy_cmd->add_option("--cal", energy_opt.cal, "calibration file (JSON)")
        ->envname("LRFHSS_CAL")
        ->required();
    energy_cmd->add_option("--dr", energy_opt.dr, "data rate")->required()->check(dr_check);
    energy_cmd->add_option("--payload", energy_opt.payload, "payload length in bytes")
        ->required()
        ->check(CLI::Range(1, 255));
    energy_cmd->add_option("--ptx", energy_opt.p_tx_dbm, "transmit power in dBm")->required();
    energy_cmd->add_option("--period", energy_opt.period_s, "notification period in seconds")
        ->required()
        ->check(CLI::PositiveNumber);
    energy_cmd->add_option("--battery", energy_opt.battery_mah, "battery capacity in mAh")
        ->check(CLI::PositiveNumber);
    energy_cmd
        ->add_option("--tt", energy_opt.tt_ms,
                     "override the calibration's hop transition time (ms)")
        ->check(CLI::NonNegativeNumber);
    energy_cmd->add_flag("--timeline", energy_opt.timeline,
                         "emit the per-state timeline instead of the report");
    energy_cmd->add_option("--format", energy_opt.format, "text, json, or csv (timeline)")
        ->check(format_check);
    energy_cmd->add_option("--out", energy_opt.out, "write to file instead of stdout");

    SweepOptions sweep_opt;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "energy table over transmit power, payload, or period");
    sweep_cmd->add_option("--cal", sweep_opt.cal, "calibration file (JSON)")
        ->envname("LRFHSS_CAL")
        ->required();
    sweep_cmd->add_option("--dimension", sweep_opt.dimension, "ptx, payload, or period")
        ->required()
        ->check(CLI::IsMember({"ptx", "payload", "period"}));
    sweep_cmd->add_option("--from", sweep_opt.from, "first sample")->required();
    sweep_cmd->add_option("--to", sweep_opt.to, "last sample")->required();
    sweep_cmd->add_option("--step", sweep_opt.step, "sample step (default 1)")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--dr", sweep_opt.dr, "data rate")->required()->check(dr_check);
    sweep_cmd->add_option("--payload", sweep_opt.payload, "fixed payload length (bytes)")
        ->check(CLI::Range(1, 255));
    sweep_cmd->add_option("--ptx", sweep_opt.p_tx_dbm, "fixed transmit power (dBm)");
    sweep_cmd->add_option("--period", sweep_opt.period_s, "fixed notification period (s)")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--battery", sweep_opt.battery_mah, "battery capacity in mAh")
        ->check(CLI::PositiveNumber);
    sweep_cmd
        ->add_option("--tt", sweep_opt.tt_ms,
                     "override the calibration's hop transition time (ms)")
        ->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--format", sweep_opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--out", sweep_opt.out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
        if (*toa_cmd) return run_toa(toa_opt);
        if (*compare_cmd) return run_compare(compare_opt);
        if (*frame_cmd) return run_frame(frame_opt);
        if (*energy_cmd) return run_energy(energy_opt);
        if (*sweep_cmd) return run_sweep(sweep_opt);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsageError;
    } catch (const lrfhss::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitUsageError;
}
