// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace a2g {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

struct LinkBudget {
    double tx_power_dbm{};
    double tx_gain_dbi{};
    double rx_gain_dbi{};
    double path_loss_db{};
    double rx_power_dbm{};
};

LinkBudget make_link_budget(double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi,
                            double path_loss_db);

/// Friis free-space loss: 20*log10(4*pi*d*f/c). Throws on non-positive input.
double free_space_path_loss_db(double distance_m, double carrier_hz);

/// Thermal noise floor -174 dBm/Hz plus bandwidth and noise figure.
double noise_power_dbm(double bandwidth_hz, double noise_figure_db);

struct DopplerBudget {
    double speed_mps{};
    double carrier_hz{};
    double shift_dl_hz{};          // downlink shift magnitude
    double shift_ppm{};
    double shift_ul_raw_hz{};      // uplink shift before any compensation
    double shift_ul_residual_hz{}; // residual after pre-compensation
};

/// Doppler at the given radial speed. The uplink raw shift is twice the
/// downlink shift; the residual assumes ideal pre-compensation.
DopplerBudget doppler(double speed_mps, double carrier_hz);

struct Precompensation {
    double adjustment_hz{};
    double residual_hz{};
};

/// UE transmit-frequency adjustment that zeroes the uplink shift seen at the
/// ground station, given the shift the UE observed in the downlink.
Precompensation uplink_precompensation(double observed_dl_shift_hz);

inline double watts_to_dbm(double w);
inline double dbm_to_mw(double dbm);
inline double db_to_linear(double db);
inline double linear_to_db(double lin);

}  // namespace a2g

#include <cmath>

namespace a2g {

inline double watts_to_dbm(double w) { return 10.0 * std::log10(w * 1000.0); }
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace a2g
