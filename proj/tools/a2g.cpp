// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: simulate / timing / doppler / report.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "a2g/channel.hpp"
#include "a2g/nrtiming.hpp"
#include "a2g/report.hpp"
#include "a2g/scenario.hpp"
#include "a2g/simengine.hpp"
#include "a2g/units.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success, 1 usage, 2 config, 3 runtime.
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::string default_out_dir() {
    if (const char* env = std::getenv("A2G_OUT_DIR")) {
        return env;
    }
    return "a2g_out";
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void write_manifest(const std::string& out_dir, const std::string& scenario_path,
                    const std::vector<std::string>& overrides, std::uint64_t seed) {
    nlohmann::json manifest;
    manifest["scenario"] = scenario_path;
    manifest["output_dir"] = out_dir;
    manifest["timestamp"] = timestamp_utc();
    manifest["tool_version"] = kVersion;
    manifest["effective_seed"] = seed;
    manifest["overrides"] = overrides;
    const auto path = std::filesystem::path(out_dir) / "manifest.json";
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    f << manifest.dump(2) << "\n";
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_dir,
                 const std::vector<std::string>& overrides, int threads, bool serial) {
    a2g::Scenario scenario = a2g::load_scenario(scenario_path);
    for (const std::string& o : overrides) {
        a2g::apply_override(scenario, o);
    }
    std::filesystem::create_directories(out_dir);
    write_manifest(out_dir, scenario_path, overrides, scenario.seed);
    {
        // Effective configuration next to the results, for exact reruns.
        std::ofstream f(std::filesystem::path(out_dir) / "effective.scn");
        f << a2g::serialize_scenario(scenario);
    }
    const a2g::SimEngine engine(scenario);
    const a2g::RunResult result = serial ? engine.run_serial() : engine.run(threads);
    const auto files = a2g::write_result_files(out_dir, result.samples);
    std::cout << "wrote " << files.size() + 2 << " files to " << out_dir << "\n";
    return 0;
}

int cmd_timing(double radius_m, const std::vector<int>& mus, double overhead,
               const std::string& csv_path) {
    using namespace a2g;
    const double rtt = round_trip_time_ms(radius_m);
    const double gp = guard_period_ms(radius_m);
    const double period = min_tdd_period_ms(gp, overhead);

    std::printf("cell radius %.1f km: round trip %.4f ms, guard period %.4f ms, "
                "min TDD period %.4f ms at %.0f%% overhead\n",
                radius_m / 1e3, rtt, gp, period, overhead * 100.0);
    std::printf("%-4s %-9s %-10s %-10s %-10s %-8s %-9s %-12s %s\n", "mu", "scs_kHz", "slot_ms",
                "rtt_ms", "ta_max_ms", "ta_ok", "gp_slots", "dl/gp/ul", "k1_required");

    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) {
            throw std::runtime_error("cannot write " + csv_path);
        }
        csv << "radius,mu,rtt_ms,ta_limit_ms,feasible,gp_ms,min_period_ms,k1_required\n";
    }

    for (int mu : mus) {
        const Numerology num = make_numerology(mu);
        const TaFeasibility ta = ta_feasible(mu, radius_m);
        const double ta_limit = max_initial_timing_advance_ms(mu);
        // Example pattern at this numerology: fill the minimum TDD period,
        // guard slots covering the round trip, remaining slots split 2:1
        // downlink to uplink.
        const int n_slots = std::max(1, static_cast<int>(std::llround(
                                            std::ceil(period / num.slot_duration_ms()))));
        const int n_gp = static_cast<int>(std::ceil(gp / num.slot_duration_ms() - 1e-9));
        int k1 = 0;
        int n_dl = n_slots;
        int n_ul = 0;
        if (n_gp < n_slots) {
            const int remaining = n_slots - n_gp;
            n_ul = remaining / 3;
            n_dl = remaining - n_ul;
            if (n_ul > 0) {
                const TddPattern pattern =
                    build_pattern(num, n_dl, std::max(n_gp, 1), n_ul, radius_m);
                k1 = required_k1(pattern).worst_case;
            }
        }
        std::printf("%-4d %-9.0f %-10.4f %-10.4f %-10.4f %-8s %-9d %2d/%d/%-6d %d%s\n", mu,
                    num.scs_khz(), num.slot_duration_ms(), rtt, ta_limit,
                    ta.feasible ? "yes" : "no", n_gp, n_dl, n_gp, n_ul, k1,
                    k1 > kNrMaxK1 ? " (exceeds NR limit 15)" : "");
        if (csv.is_open()) {
            char row[256];
            std::snprintf(row, sizeof(row), "%.3f,%d,%.6f,%.6f,%d,%.6f,%.6f,%d\n", radius_m, mu,
                          rtt, ta_limit, ta.feasible ? 1 : 0, gp, period, k1);
            csv << row;
        }
    }
    return 0;
}

int cmd_doppler(double speed_mps, const std::vector<double>& carriers) {
    std::printf("speed %.1f m/s (%.1f km/h)\n", speed_mps, speed_mps * 3.6);
    std::printf("%-14s %-14s %-10s %-14s %-16s\n", "carrier_Hz", "dl_shift_Hz", "ppm",
                "ul_raw_Hz", "ul_precomp_Hz");
    for (double c : carriers) {
        const a2g::DopplerBudget d = a2g::doppler(speed_mps, c);
        const a2g::Precompensation p = a2g::uplink_precompensation(d.shift_dl_hz);
        std::printf("%-14.6g %-14.3f %-10.4f %-14.3f %-16.3f\n", c, d.shift_dl_hz, d.shift_ppm,
                    d.shift_ul_raw_hz, p.adjustment_hz);
    }
    return 0;
}

int cmd_report(const std::string& raw_path, const std::string& out_dir) {
    std::ifstream in(raw_path);
    if (!in) {
        throw std::runtime_error("cannot open " + raw_path);
    }
    const auto samples = a2g::read_raw_csv(in);
    if (samples.empty()) {
        throw std::runtime_error("no samples in " + raw_path);
    }
    std::filesystem::create_directories(out_dir);
    const auto files = a2g::write_result_files(out_dir, samples);
    std::cout << "wrote " << files.size() << " files to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"5G NR air-to-ground network simulator and feasibility calculators"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Run a Monte Carlo study from a scenario file");
    std::string scenario_path;
    std::string out_dir = default_out_dir();
    std::vector<std::string> overrides;
    int threads = 0;
    bool serial = false;
    sim->add_option("--scenario", scenario_path, "Scenario file (.scn)")->required();
    sim->add_option("--out", out_dir, "Output directory");
    sim->add_option("--set", overrides, "Override a scenario key, e.g. --set isd=160000");
    sim->add_option("--threads", threads, "Worker count (0 = OpenMP default)");
    sim->add_flag("--serial", serial, "Use the serial reference engine");

    // timing
    auto* timing = app.add_subcommand("timing", "NR timing feasibility for a cell radius");
    std::string radius_text = "300km";
    std::vector<int> mus{0, 1, 2, 3, 4};
    double overhead = 0.10;
    std::string timing_csv;
    timing->add_option("--radius", radius_text, "Cell radius (m, or with km suffix)");
    timing->add_option("--mu", mus, "Numerology indices to tabulate")
        ->check(CLI::Range(0, 4));
    timing->add_option("--overhead", overhead, "Max guard-period overhead fraction")
        ->check(CLI::Range(1e-6, 1.0));
    timing->add_option("--csv", timing_csv, "Also write a machine-readable CSV here");

    // doppler
    auto* dop = app.add_subcommand("doppler", "Doppler shifts and uplink pre-compensation");
    std::string speed_text = "1200km/h";
    std::string carriers_text = "700e6,3.5e9,28e9";
    dop->add_option("--speed", speed_text, "UE speed (m/s, or with km/h suffix)");
    dop->add_option("--carriers", carriers_text, "Comma-separated carriers (Hz, MHz/GHz ok)");

    // report
    auto* rep = app.add_subcommand("report", "Re-summarize an existing raw sample CSV");
    std::string raw_path;
    std::string report_out = default_out_dir();
    rep->add_option("--raw", raw_path, "Raw samples.csv from a previous run")->required();
    rep->add_option("--out", report_out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (sim->parsed()) {
            return cmd_simulate(scenario_path, out_dir, overrides, threads, serial);
        }
        if (timing->parsed()) {
            const double radius = a2g::parse_length_m(radius_text);
            if (radius < 0.0) {
                throw a2g::ScenarioError("radius must be >= 0");
            }
            return cmd_timing(radius, mus, overhead, timing_csv);
        }
        if (dop->parsed()) {
            const double speed = a2g::parse_speed_mps(speed_text);
            if (speed < 0.0) {
                throw a2g::ScenarioError("speed must be >= 0");
            }
            return cmd_doppler(speed, a2g::parse_frequency_list_hz(carriers_text));
        }
        if (rep->parsed()) {
            return cmd_report(raw_path, report_out);
        }
    } catch (const a2g::ScenarioError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
