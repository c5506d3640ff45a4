// SPDX-License-Identifier: Apache-2.0
#include "a2g/units.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace a2g {

namespace {

struct Unit {
    const char* suffix;
    double scale;
};

double parse_with_units(const std::string& text, const Unit* units, std::size_t n_units,
                        const char* what) {
    std::string s = text;
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    if (s.empty()) {
        throw std::invalid_argument(std::string("empty ") + what);
    }
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
    }
    std::string suffix = s.substr(pos);
    suffix.erase(0, suffix.find_first_not_of(" \t"));
    if (suffix.empty()) {
        return value;  // SI base unit
    }
    for (std::size_t i = 0; i < n_units; ++i) {
        if (suffix == units[i].suffix) {
            return value * units[i].scale;
        }
    }
    throw std::invalid_argument(std::string("unknown unit suffix '") + suffix + "' in " + what +
                                ": '" + text + "'");
}

}  // namespace

double parse_speed_mps(const std::string& text) {
    static const Unit units[] = {{"km/h", 1.0 / 3.6}, {"m/s", 1.0}};
    return parse_with_units(text, units, 2, "speed");
}

double parse_frequency_hz(const std::string& text) {
    static const Unit units[] = {{"GHz", 1e9}, {"MHz", 1e6}, {"kHz", 1e3}, {"Hz", 1.0}};
    return parse_with_units(text, units, 4, "frequency");
}

double parse_length_m(const std::string& text) {
    static const Unit units[] = {{"km", 1e3}, {"m", 1.0}};
    return parse_with_units(text, units, 2, "length");
}

std::vector<double> parse_frequency_list_hz(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(parse_frequency_hz(item));
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("empty frequency list");
    }
    return out;
}

}  // namespace a2g
