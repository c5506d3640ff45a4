// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "a2g/geometry.hpp"

namespace a2g {

/// (M, N, P) uniform planar array laid flat facing the sky, with the
/// TR 38.901 single-element pattern constants.
struct AntennaArrayConfig {
    int m_rows = 2;
    int n_cols = 2;
    int polarizations = 2;              // P in {1, 2}
    double element_spacing_v = 0.5;     // wavelengths, row pitch
    double element_spacing_h = 0.5;     // wavelengths, column pitch
    double element_max_gain_dbi = 8.0;
    double beamwidth_3db_deg = 65.0;
    double sla_v_db = 30.0;
    double a_max_db = 30.0;
};

struct Beam {
    double steer_zenith_offset{};  // radians from boresight (zenith)
    double steer_azimuth{};        // radians
    int index{};
};

/// Element gain in dBi at the given direction. The vertical cut uses the
/// off-boresight angle, the horizontal cut the azimuth, both quadratic with
/// the usual sidelobe floors.
double element_gain_dbi(double zenith_offset, double azimuth, const AntennaArrayConfig& cfg);

/// Array-factor power in dB for phase-only conventional beamforming weights
/// normalized to preserve transmit power. Equals 10*log10(M*N) when the
/// observation matches the steering direction.
double array_factor_db(double obs_zenith, double obs_azimuth, double steer_zenith,
                       double steer_azimuth, const AntennaArrayConfig& cfg);

/// Total beam gain: element gain at the observation direction plus the array
/// factor of the steered beam.
double beam_gain_dbi(double obs_zenith, double obs_azimuth, const Beam& beam,
                     const AntennaArrayConfig& cfg);

/// Equal-area partition of the hexagonal cell footprint into n pieces
/// (sqrt(n) x sqrt(n) strip slicing). n must be 1 or a perfect square.
std::vector<Polygon> beam_grid_cells(int n_beams, double isd);

/// Fixed grid of beams covering one hexagonal cell footprint at the aircraft
/// altitude plane. Aim points are centroids of an equal-area partition of the
/// hexagon (sqrt(n) x sqrt(n) slicing); n = 1 degenerates to a single beam at
/// the cell centroid. aim_height is altitude minus site antenna height.
std::vector<Beam> beam_grid(int n_beams, double isd, double aim_height);

}  // namespace a2g
