// SPDX-License-Identifier: Apache-2.0
#include "a2g/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace a2g {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

LinkBudget make_link_budget(double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi,
                            double path_loss_db) {
    LinkBudget b;
    b.tx_power_dbm = tx_power_dbm;
    b.tx_gain_dbi = tx_gain_dbi;
    b.rx_gain_dbi = rx_gain_dbi;
    b.path_loss_db = path_loss_db;
    b.rx_power_dbm = tx_power_dbm + tx_gain_dbi + rx_gain_dbi - path_loss_db;
    return b;
}

double free_space_path_loss_db(double distance_m, double carrier_hz) {
    if (distance_m <= 0.0) {
        throw std::invalid_argument("free_space_path_loss_db: distance must be > 0");
    }
    if (carrier_hz <= 0.0) {
        throw std::invalid_argument("free_space_path_loss_db: carrier must be > 0");
    }
    return 20.0 * std::log10(4.0 * kPi * distance_m * carrier_hz / kSpeedOfLight);
}

double noise_power_dbm(double bandwidth_hz, double noise_figure_db) {
    if (bandwidth_hz <= 0.0) {
        throw std::invalid_argument("noise_power_dbm: bandwidth must be > 0");
    }
    return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

DopplerBudget doppler(double speed_mps, double carrier_hz) {
    if (speed_mps < 0.0) {
        throw std::invalid_argument("doppler: speed must be >= 0");
    }
    DopplerBudget d;
    d.speed_mps = speed_mps;
    d.carrier_hz = carrier_hz;
    d.shift_dl_hz = speed_mps / kSpeedOfLight * carrier_hz;
    d.shift_ppm = speed_mps / kSpeedOfLight * 1e6;
    d.shift_ul_raw_hz = 2.0 * d.shift_dl_hz;
    d.shift_ul_residual_hz = 0.0;
    return d;
}

Precompensation uplink_precompensation(double observed_dl_shift_hz) {
    Precompensation p;
    p.adjustment_hz = -2.0 * observed_dl_shift_hz;
    p.residual_hz = 2.0 * observed_dl_shift_hz + p.adjustment_hz;
    return p;
}

}  // namespace a2g
