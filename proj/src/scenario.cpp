// SPDX-License-Identifier: Apache-2.0
#include "a2g/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace a2g {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& ctx) {
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ScenarioError(ctx + ": not a number: '" + v + "'");
    }
    if (pos != v.size()) {
        throw ScenarioError(ctx + ": trailing characters in number: '" + v + "'");
    }
    return out;
}

int parse_int(const std::string& v, const std::string& ctx) {
    const double d = parse_double(v, ctx);
    const int i = static_cast<int>(std::llround(d));
    if (d != static_cast<double>(i)) {
        throw ScenarioError(ctx + ": expected an integer: '" + v + "'");
    }
    return i;
}

std::uint64_t parse_u64(const std::string& v, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        const std::uint64_t out = std::stoull(v, &pos);
        if (pos != v.size()) {
            throw std::invalid_argument("trailing");
        }
        return out;
    } catch (const std::exception&) {
        throw ScenarioError(ctx + ": expected an unsigned integer: '" + v + "'");
    }
}

bool parse_bool(const std::string& v, const std::string& ctx) {
    if (v == "true" || v == "1") {
        return true;
    }
    if (v == "false" || v == "0") {
        return false;
    }
    throw ScenarioError(ctx + ": expected true/false: '" + v + "'");
}

std::vector<double> parse_list(const std::string& v, const std::string& ctx) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(parse_double(item, ctx));
        }
    }
    if (out.empty()) {
        throw ScenarioError(ctx + ": empty list");
    }
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Applies one key in its section; throws ScenarioError on unknown keys.
void set_key(Scenario& s, const std::string& section, const std::string& key,
             const std::string& value, const std::string& ctx) {
    if (section == "band") {
        AntennaArrayConfig& a = s.band.array;
        if (key == "name") {
            s.band = preset(value);
        } else if (key == "carrier_frequency") {
            s.band.carrier_frequency_hz = parse_double(value, ctx);
        } else if (key == "bandwidth_per_direction") {
            s.band.bandwidth_per_direction_hz = parse_double(value, ctx);
        } else if (key == "beams_per_cell") {
            s.band.beams_per_cell = parse_int(value, ctx);
        } else if (key == "m_rows") {
            a.m_rows = parse_int(value, ctx);
        } else if (key == "n_cols") {
            a.n_cols = parse_int(value, ctx);
        } else if (key == "polarizations") {
            a.polarizations = parse_int(value, ctx);
        } else if (key == "element_spacing_v") {
            a.element_spacing_v = parse_double(value, ctx);
        } else if (key == "element_spacing_h") {
            a.element_spacing_h = parse_double(value, ctx);
        } else if (key == "element_max_gain") {
            a.element_max_gain_dbi = parse_double(value, ctx);
        } else if (key == "beamwidth_3db") {
            a.beamwidth_3db_deg = parse_double(value, ctx);
        } else if (key == "sla_v") {
            a.sla_v_db = parse_double(value, ctx);
        } else if (key == "a_max") {
            a.a_max_db = parse_double(value, ctx);
        } else {
            throw ScenarioError(ctx + ": unknown key '" + key + "' in [band]");
        }
    } else if (section == "deployment") {
        if (key == "isd") {
            s.isd_m = parse_double(value, ctx);
        } else if (key == "rings") {
            s.rings = parse_int(value, ctx);
        } else if (key == "gs_antenna_height") {
            s.gs_antenna_height_m = parse_double(value, ctx);
        } else if (key == "aircraft_altitude") {
            s.aircraft_altitude_m = parse_double(value, ctx);
        } else if (key == "wrap") {
            s.wrap = parse_bool(value, ctx);
        } else {
            throw ScenarioError(ctx + ": unknown key '" + key + "' in [deployment]");
        }
    } else if (section == "radio") {
        if (key == "gs_total_tx_power") {
            s.gs_total_tx_power_w = parse_double(value, ctx);
        } else if (key == "ue_tx_power") {
            s.ue_tx_power_w = parse_double(value, ctx);
        } else if (key == "ue_antenna_count") {
            s.ue_antenna_count = parse_int(value, ctx);
        } else if (key == "gs_noise_figure") {
            s.gs_noise_figure_db = parse_double(value, ctx);
        } else if (key == "ue_noise_figure") {
            s.ue_noise_figure_db = parse_double(value, ctx);
        } else if (key == "alpha") {
            s.link.alpha = parse_double(value, ctx);
        } else if (key == "se_max") {
            s.link.se_max = parse_double(value, ctx);
        } else if (key == "sinr_min") {
            s.link.sinr_min_db = parse_double(value, ctx);
        } else if (key == "sharing_factor") {
            s.link.sharing_factor = parse_double(value, ctx);
        } else if (key == "shadowing_sigma") {
            s.link.shadowing_sigma_db = parse_double(value, ctx);
        } else {
            throw ScenarioError(ctx + ": unknown key '" + key + "' in [radio]");
        }
    } else if (section == "simulation") {
        if (key == "ru_levels") {
            s.ru_levels = parse_list(value, ctx);
        } else if (key == "n_drops") {
            s.n_drops = parse_int(value, ctx);
        } else if (key == "seed") {
            s.seed = parse_u64(value, ctx);
        } else if (key == "steering_mode") {
            s.steering_mode = steering_mode_from_string(value);
        } else {
            throw ScenarioError(ctx + ": unknown key '" + key + "' in [simulation]");
        }
    } else {
        throw ScenarioError(ctx + ": unknown section [" + section + "]");
    }
}

// Section a bare --set key belongs to, for error reporting and reuse of
// set_key.
std::string section_of(const std::string& key) {
    static const struct {
        const char* section;
        const char* keys[16];
    } kMap[] = {
        {"band",
         {"name", "carrier_frequency", "bandwidth_per_direction", "beams_per_cell", "m_rows",
          "n_cols", "polarizations", "element_spacing_v", "element_spacing_h", "element_max_gain",
          "beamwidth_3db", "sla_v", "a_max", nullptr}},
        {"deployment", {"isd", "rings", "gs_antenna_height", "aircraft_altitude", "wrap", nullptr}},
        {"radio",
         {"gs_total_tx_power", "ue_tx_power", "ue_antenna_count", "gs_noise_figure",
          "ue_noise_figure", "alpha", "se_max", "sinr_min", "sharing_factor", "shadowing_sigma",
          nullptr}},
        {"simulation", {"ru_levels", "n_drops", "seed", "steering_mode", nullptr}},
    };
    for (const auto& entry : kMap) {
        for (const char* const* k = entry.keys; *k != nullptr; ++k) {
            if (key == *k) {
                return entry.section;
            }
        }
    }
    throw ScenarioError("unknown scenario key '" + key + "'");
}

}  // namespace

std::string to_string(Band b) {
    switch (b) {
        case Band::Low:
            return "low";
        case Band::Mid:
            return "mid";
        case Band::High:
            return "high";
    }
    return "low";
}

Band band_from_string(std::string_view name) {
    if (name == "low") {
        return Band::Low;
    }
    if (name == "mid") {
        return Band::Mid;
    }
    if (name == "high") {
        return Band::High;
    }
    throw ScenarioError("unknown band name '" + std::string(name) + "'");
}

std::string to_string(SteeringMode m) {
    return m == SteeringMode::GridOfBeams ? "grid_of_beams" : "genie_location";
}

SteeringMode steering_mode_from_string(std::string_view s) {
    if (s == "grid_of_beams") {
        return SteeringMode::GridOfBeams;
    }
    if (s == "genie_location") {
        return SteeringMode::GenieLocation;
    }
    throw ScenarioError("unknown steering_mode '" + std::string(s) + "'");
}

BandPreset preset(Band name) {
    BandPreset p;
    p.name = name;
    switch (name) {
        case Band::Low:
            p.carrier_frequency_hz = 700e6;
            p.bandwidth_per_direction_hz = 10e6;
            p.array.m_rows = 2;
            p.array.n_cols = 2;
            p.beams_per_cell = 1;
            break;
        case Band::Mid:
            p.carrier_frequency_hz = 3.5e9;
            p.bandwidth_per_direction_hz = 100e6;
            p.array.m_rows = 4;
            p.array.n_cols = 4;
            p.beams_per_cell = 4;
            break;
        case Band::High:
            p.carrier_frequency_hz = 28e9;
            p.bandwidth_per_direction_hz = 400e6;
            p.array.m_rows = 8;
            p.array.n_cols = 8;
            p.beams_per_cell = 64;
            break;
    }
    p.array.polarizations = 2;
    return p;
}

BandPreset preset(std::string_view name) { return preset(band_from_string(name)); }

void validate(const Scenario& s) {
    if (s.isd_m <= 0.0) {
        throw ScenarioError("validation: isd must be > 0");
    }
    if (s.rings < 0) {
        throw ScenarioError("validation: rings must be >= 0");
    }
    if (s.aircraft_altitude_m <= s.gs_antenna_height_m) {
        throw ScenarioError("validation: aircraft_altitude must exceed gs_antenna_height");
    }
    for (double ru : s.ru_levels) {
        if (ru < 0.0 || ru > 1.0) {
            throw ScenarioError("validation: ru out of [0,1]");
        }
    }
    if (s.n_drops < 1) {
        throw ScenarioError("validation: n_drops must be >= 1");
    }
    if (s.gs_total_tx_power_w <= 0.0 || s.ue_tx_power_w <= 0.0) {
        throw ScenarioError("validation: transmit powers must be > 0");
    }
    if (s.ue_antenna_count < 1) {
        throw ScenarioError("validation: ue_antenna_count must be >= 1");
    }
    const AntennaArrayConfig& a = s.band.array;
    if (a.m_rows < 1 || a.n_cols < 1) {
        throw ScenarioError("validation: array dimensions must be >= 1");
    }
    if (a.polarizations != 1 && a.polarizations != 2) {
        throw ScenarioError("validation: polarizations must be 1 or 2");
    }
    if (a.element_spacing_v <= 0.0 || a.element_spacing_h <= 0.0) {
        throw ScenarioError("validation: element spacings must be > 0");
    }
    if (s.band.carrier_frequency_hz <= 0.0 || s.band.bandwidth_per_direction_hz <= 0.0) {
        throw ScenarioError("validation: carrier and bandwidth must be > 0");
    }
    if (s.band.beams_per_cell < 1) {
        throw ScenarioError("validation: beams_per_cell must be >= 1");
    }
    if (s.link.sharing_factor < 0.0 || s.link.sharing_factor > 1.0) {
        throw ScenarioError("validation: sharing_factor out of [0,1]");
    }
    if (s.link.shadowing_sigma_db < 0.0) {
        throw ScenarioError("validation: shadowing_sigma must be >= 0");
    }
}

Scenario parse_scenario(std::istream& in, const std::string& name) {
    Scenario s;
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::string ctx = name + ":" + std::to_string(lineno);
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ScenarioError(ctx + ": malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ScenarioError(ctx + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) {
            throw ScenarioError(ctx + ": key outside any section");
        }
        set_key(s, section, key, value, ctx);
    }
    validate(s);
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ScenarioError("cannot open scenario file '" + path + "'");
    }
    return parse_scenario(in, path);
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream out;
    const AntennaArrayConfig& a = s.band.array;
    out << "[band]\n";
    out << "name = " << to_string(s.band.name) << "\n";
    out << "carrier_frequency = " << fmt(s.band.carrier_frequency_hz) << "\n";
    out << "bandwidth_per_direction = " << fmt(s.band.bandwidth_per_direction_hz) << "\n";
    out << "beams_per_cell = " << s.band.beams_per_cell << "\n";
    out << "m_rows = " << a.m_rows << "\n";
    out << "n_cols = " << a.n_cols << "\n";
    out << "polarizations = " << a.polarizations << "\n";
    out << "element_spacing_v = " << fmt(a.element_spacing_v) << "\n";
    out << "element_spacing_h = " << fmt(a.element_spacing_h) << "\n";
    out << "element_max_gain = " << fmt(a.element_max_gain_dbi) << "\n";
    out << "beamwidth_3db = " << fmt(a.beamwidth_3db_deg) << "\n";
    out << "sla_v = " << fmt(a.sla_v_db) << "\n";
    out << "a_max = " << fmt(a.a_max_db) << "\n";
    out << "\n[deployment]\n";
    out << "isd = " << fmt(s.isd_m) << "\n";
    out << "rings = " << s.rings << "\n";
    out << "gs_antenna_height = " << fmt(s.gs_antenna_height_m) << "\n";
    out << "aircraft_altitude = " << fmt(s.aircraft_altitude_m) << "\n";
    out << "wrap = " << (s.wrap ? "true" : "false") << "\n";
    out << "\n[radio]\n";
    out << "gs_total_tx_power = " << fmt(s.gs_total_tx_power_w) << "\n";
    out << "ue_tx_power = " << fmt(s.ue_tx_power_w) << "\n";
    out << "ue_antenna_count = " << s.ue_antenna_count << "\n";
    out << "gs_noise_figure = " << fmt(s.gs_noise_figure_db) << "\n";
    out << "ue_noise_figure = " << fmt(s.ue_noise_figure_db) << "\n";
    out << "alpha = " << fmt(s.link.alpha) << "\n";
    out << "se_max = " << fmt(s.link.se_max) << "\n";
    out << "sinr_min = " << fmt(s.link.sinr_min_db) << "\n";
    out << "sharing_factor = " << fmt(s.link.sharing_factor) << "\n";
    out << "shadowing_sigma = " << fmt(s.link.shadowing_sigma_db) << "\n";
    out << "\n[simulation]\n";
    out << "ru_levels = ";
    for (std::size_t i = 0; i < s.ru_levels.size(); ++i) {
        out << (i ? ", " : "") << fmt(s.ru_levels[i]);
    }
    out << "\n";
    out << "n_drops = " << s.n_drops << "\n";
    out << "seed = " << s.seed << "\n";
    out << "steering_mode = " << to_string(s.steering_mode) << "\n";
    return out.str();
}

void apply_override(Scenario& s, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw ScenarioError("override must be key=value: '" + assignment + "'");
    }
    const std::string key = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    set_key(s, section_of(key), key, value, "--set " + key);
    validate(s);
}

}  // namespace a2g
