// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace a2g {

/// "1200km/h" -> 333.33 m/s; plain numbers are m/s.
double parse_speed_mps(const std::string& text);

/// "700MHz", "3.5GHz", "700e6" -> Hz.
double parse_frequency_hz(const std::string& text);

/// "300km", "300e3" -> m.
double parse_length_m(const std::string& text);

/// Comma-separated frequencies.
std::vector<double> parse_frequency_list_hz(const std::string& text);

}  // namespace a2g
