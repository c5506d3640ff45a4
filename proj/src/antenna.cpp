// SPDX-License-Identifier: Apache-2.0
#include "a2g/antenna.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "a2g/geometry.hpp"

namespace a2g {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAfFloorDb = -120.0;

double rad2deg(double r) { return r * 180.0 / kPi; }

// Bisect for the x cut that puts `target` area of poly to its left.
double find_cut(const Polygon& poly, Vec2 normal, double lo, double hi, double target) {
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double a = polygon_area(clip_halfplane(poly, normal, mid));
        if (a < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double element_gain_dbi(double zenith_offset, double azimuth, const AntennaArrayConfig& cfg) {
    const double theta = rad2deg(zenith_offset);
    double phi = rad2deg(azimuth);
    phi = std::remainder(phi, 360.0);  // [-180, 180]
    const double bw = cfg.beamwidth_3db_deg;
    const double att_v = std::min(12.0 * (theta / bw) * (theta / bw), cfg.sla_v_db);
    const double att_h = std::min(12.0 * (phi / bw) * (phi / bw), cfg.a_max_db);
    return cfg.element_max_gain_dbi - std::min(att_v + att_h, cfg.a_max_db);
}

double array_factor_db(double obs_zenith, double obs_azimuth, double steer_zenith,
                       double steer_azimuth, const AntennaArrayConfig& cfg) {
    const double dux =
        std::sin(obs_zenith) * std::cos(obs_azimuth) - std::sin(steer_zenith) * std::cos(steer_azimuth);
    const double duy =
        std::sin(obs_zenith) * std::sin(obs_azimuth) - std::sin(steer_zenith) * std::sin(steer_azimuth);
    // Columns along x (pitch element_spacing_h), rows along y (element_spacing_v);
    // the sums are separable.
    std::complex<double> sx{0.0, 0.0};
    for (int n = 0; n < cfg.n_cols; ++n) {
        const double ph = 2.0 * kPi * cfg.element_spacing_h * n * dux;
        sx += std::complex<double>(std::cos(ph), std::sin(ph));
    }
    std::complex<double> sy{0.0, 0.0};
    for (int m = 0; m < cfg.m_rows; ++m) {
        const double ph = 2.0 * kPi * cfg.element_spacing_v * m * duy;
        sy += std::complex<double>(std::cos(ph), std::sin(ph));
    }
    const double power = std::norm(sx) * std::norm(sy) / (cfg.m_rows * cfg.n_cols);
    if (power <= std::pow(10.0, kAfFloorDb / 10.0)) {
        return kAfFloorDb;
    }
    return 10.0 * std::log10(power);
}

double beam_gain_dbi(double obs_zenith, double obs_azimuth, const Beam& beam,
                     const AntennaArrayConfig& cfg) {
    return element_gain_dbi(obs_zenith, obs_azimuth, cfg) +
           array_factor_db(obs_zenith, obs_azimuth, beam.steer_zenith_offset, beam.steer_azimuth, cfg);
}

std::vector<Polygon> beam_grid_cells(int n_beams, double isd) {
    if (n_beams < 1) {
        throw std::invalid_argument("beam_grid: n_beams must be >= 1");
    }
    const Polygon hex = hex_cell_polygon(isd);
    if (n_beams == 1) {
        return {hex};
    }
    const int k = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n_beams))));
    if (k * k != n_beams) {
        throw std::invalid_argument("beam_grid: n_beams must be a perfect square");
    }
    const double total = polygon_area(hex);
    const double rmax = isd / std::sqrt(3.0) + 1.0;

    std::vector<Polygon> cells;
    cells.reserve(n_beams);
    double x_lo = -rmax;
    for (int col = 0; col < k; ++col) {
        const double x_hi = (col == k - 1)
                                ? rmax
                                : find_cut(hex, {1.0, 0.0}, -rmax, rmax, total * (col + 1) / k);
        Polygon strip = clip_halfplane(hex, {-1.0, 0.0}, -x_lo);  // x >= x_lo
        strip = clip_halfplane(strip, {1.0, 0.0}, x_hi);          // x <= x_hi
        const double strip_area = polygon_area(strip);
        double y_lo = -rmax;
        for (int row = 0; row < k; ++row) {
            const double y_hi = (row == k - 1)
                                    ? rmax
                                    : find_cut(strip, {0.0, 1.0}, -rmax, rmax,
                                               strip_area * (row + 1) / k);
            Polygon piece = clip_halfplane(strip, {0.0, -1.0}, -y_lo);
            piece = clip_halfplane(piece, {0.0, 1.0}, y_hi);
            cells.push_back(std::move(piece));
            y_lo = y_hi;
        }
        x_lo = x_hi;
    }
    return cells;
}

std::vector<Beam> beam_grid(int n_beams, double isd, double aim_height) {
    if (aim_height <= 0.0) {
        throw std::invalid_argument("beam_grid: aim_height must be > 0");
    }
    if (n_beams == 1) {
        return {Beam{0.0, 0.0, 0}};
    }
    const auto cells = beam_grid_cells(n_beams, isd);
    std::vector<Beam> beams;
    beams.reserve(n_beams);
    for (const Polygon& piece : cells) {
        const Vec2 c = polygon_centroid(piece);
        Beam b;
        b.steer_zenith_offset = std::atan2(std::hypot(c.x, c.y), aim_height);
        b.steer_azimuth = std::atan2(c.y, c.x);
        b.index = static_cast<int>(beams.size());
        beams.push_back(b);
    }
    return beams;
}

}  // namespace a2g
