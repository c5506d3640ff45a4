// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "a2g/antenna.hpp"

namespace a2g {

enum class Band { Low, Mid, High };

std::string to_string(Band b);
Band band_from_string(std::string_view name);  // throws on unknown name

/// Per-band study parameters: carrier, FDD bandwidth per direction, ground
/// station array, and the fixed beam-grid size.
struct BandPreset {
    Band name = Band::Low;
    double carrier_frequency_hz = 700e6;
    double bandwidth_per_direction_hz = 10e6;
    AntennaArrayConfig array;
    int beams_per_cell = 1;
};

/// low: 700 MHz / 10 MHz / (2,2,2) / 1 beam
/// mid: 3.5 GHz / 100 MHz / (4,4,2) / 4 beams
/// high: 28 GHz / 400 MHz / (8,8,2) / 64 beams
BandPreset preset(Band name);
BandPreset preset(std::string_view name);

enum class SteeringMode { GridOfBeams, GenieLocation };

std::string to_string(SteeringMode m);
SteeringMode steering_mode_from_string(std::string_view s);

/// SINR-to-rate mapping and fading knobs. Truncated Shannon with a
/// processor-sharing load factor; lognormal shadowing disabled by default.
struct LinkModel {
    double alpha = 0.75;
    double se_max = 4.6;  // bit/s/Hz
    double sinr_min_db = -10.0;
    double sharing_factor = 1.0;
    double shadowing_sigma_db = 0.0;
};

/// Full parameterization of one study.
struct Scenario {
    BandPreset band;
    double isd_m = 80e3;
    int rings = 2;
    double gs_antenna_height_m = 35.0;
    double aircraft_altitude_m = 12e3;
    bool wrap = true;
    double gs_total_tx_power_w = 80.0;
    double ue_tx_power_w = 0.2;
    int ue_antenna_count = 2;
    double gs_noise_figure_db = 5.0;
    double ue_noise_figure_db = 9.0;
    LinkModel link;
    std::vector<double> ru_levels{0.003, 0.2, 0.79, 1.0};
    int n_drops = 10000;
    std::uint64_t seed = 1;
    SteeringMode steering_mode = SteeringMode::GridOfBeams;
};

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws ScenarioError naming the violated invariant.
void validate(const Scenario& s);

/// Plain-text scenario format: [band] / [deployment] / [radio] / [simulation]
/// sections with key = value lines, SI units, '#' comments. Unknown keys are
/// rejected; errors carry line numbers.
Scenario parse_scenario(std::istream& in, const std::string& name = "<stream>");
Scenario load_scenario(const std::string& path);

/// Canonical serialization; re-parsing yields a field-identical Scenario.
std::string serialize_scenario(const Scenario& s);

/// Apply a single "key=value" override (the CLI --set flag).
void apply_override(Scenario& s, const std::string& assignment);

}  // namespace a2g
