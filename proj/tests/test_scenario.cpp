// SPDX-License-Identifier: Apache-2.0
#include <sstream>

#include "doctest.h"

#include "a2g/scenario.hpp"

using namespace a2g;

TEST_CASE("band presets carry the study values exactly") {
    const BandPreset low = preset("low");
    CHECK(low.carrier_frequency_hz == 700e6);
    CHECK(low.bandwidth_per_direction_hz == 10e6);
    CHECK(low.array.m_rows == 2);
    CHECK(low.array.n_cols == 2);
    CHECK(low.array.polarizations == 2);
    CHECK(low.beams_per_cell == 1);

    const BandPreset mid = preset("mid");
    CHECK(mid.carrier_frequency_hz == 3.5e9);
    CHECK(mid.bandwidth_per_direction_hz == 100e6);
    CHECK(mid.array.m_rows == 4);
    CHECK(mid.array.n_cols == 4);
    CHECK(mid.beams_per_cell == 4);

    const BandPreset high = preset("high");
    CHECK(high.carrier_frequency_hz == 28e9);
    CHECK(high.bandwidth_per_direction_hz == 400e6);
    CHECK(high.array.m_rows == 8);
    CHECK(high.array.n_cols == 8);
    CHECK(high.beams_per_cell == 64);

    // element constants shared by all presets
    for (const char* name : {"low", "mid", "high"}) {
        const AntennaArrayConfig& a = preset(name).array;
        CHECK(a.element_max_gain_dbi == 8.0);
        CHECK(a.beamwidth_3db_deg == 65.0);
        CHECK(a.sla_v_db == 30.0);
        CHECK(a.a_max_db == 30.0);
        CHECK(a.element_spacing_v == 0.5);
        CHECK(a.element_spacing_h == 0.5);
    }

    CHECK_THROWS(preset("ultra"));
}

TEST_CASE("parse a minimal scenario with study defaults") {
    std::istringstream in(R"(
# low-band study
[band]
name = low
[deployment]
isd = 80000
rings = 2
)");
    const Scenario s = parse_scenario(in, "test.scn");
    CHECK(s.band.name == Band::Low);
    CHECK(s.isd_m == 80000.0);
    CHECK(s.rings == 2);
    CHECK(s.gs_antenna_height_m == 35.0);
    CHECK(s.aircraft_altitude_m == 12000.0);
    CHECK(s.gs_total_tx_power_w == 80.0);
    CHECK(s.ue_tx_power_w == 0.2);
    CHECK(s.ue_antenna_count == 2);
    // unstated by the study; documented defaults
    CHECK(s.gs_noise_figure_db == 5.0);
    CHECK(s.ue_noise_figure_db == 9.0);
}

TEST_CASE("validation failures carry the violated invariant") {
    std::istringstream bad_ru(R"(
[band]
name = low
[simulation]
ru_levels = 0.5, 1.5
)");
    CHECK_THROWS_WITH(parse_scenario(bad_ru, "t"), doctest::Contains("ru out of [0,1]"));

    std::istringstream bad_alt(R"(
[band]
name = low
[deployment]
aircraft_altitude = 30
)");
    CHECK_THROWS_WITH(parse_scenario(bad_alt, "t"), doctest::Contains("aircraft_altitude"));
}

TEST_CASE("parse errors name the offending line") {
    std::istringstream unknown_key(R"(
[deployment]
isd = 80000
tilt = 10
)");
    CHECK_THROWS_WITH(parse_scenario(unknown_key, "cfg.scn"),
                      doctest::Contains("cfg.scn:4"));

    std::istringstream no_eq("[band]\nname low\n");
    CHECK_THROWS_WITH(parse_scenario(no_eq, "cfg.scn"), doctest::Contains("cfg.scn:2"));

    std::istringstream bad_section("[groundstations]\nfoo = 1\n");
    CHECK_THROWS(parse_scenario(bad_section, "cfg.scn"));

    std::istringstream orphan("isd = 80000\n");
    CHECK_THROWS_WITH(parse_scenario(orphan, "cfg.scn"), doctest::Contains("outside any section"));
}

TEST_CASE("serialize / parse round trip is field-identical") {
    Scenario s;
    s.band = preset(Band::Mid);
    s.isd_m = 123456.789;
    s.rings = 3;
    s.aircraft_altitude_m = 10500.0;
    s.ru_levels = {0.0031, 0.25, 1.0};
    s.n_drops = 777;
    s.seed = 0xdeadbeefULL;
    s.steering_mode = SteeringMode::GenieLocation;
    s.link.sharing_factor = 0.8;
    s.link.shadowing_sigma_db = 4.0;
    s.band.array.element_spacing_h = 0.7;

    std::istringstream in(serialize_scenario(s));
    const Scenario t = parse_scenario(in, "roundtrip");
    CHECK(serialize_scenario(t) == serialize_scenario(s));
    CHECK(t.isd_m == s.isd_m);
    CHECK(t.ru_levels == s.ru_levels);
    CHECK(t.seed == s.seed);
    CHECK(t.steering_mode == s.steering_mode);
    CHECK(t.band.array.element_spacing_h == s.band.array.element_spacing_h);
}

TEST_CASE("overrides") {
    Scenario s;
    apply_override(s, "isd=160000");
    CHECK(s.isd_m == 160000.0);
    apply_override(s, "steering_mode=genie_location");
    CHECK(s.steering_mode == SteeringMode::GenieLocation);
    apply_override(s, "name=high");
    CHECK(s.band.beams_per_cell == 64);
    CHECK_THROWS(apply_override(s, "unknown_key=1"));
    CHECK_THROWS(apply_override(s, "no_equals"));
    CHECK_THROWS(apply_override(s, "n_drops=0"));
}
