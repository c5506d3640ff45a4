// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <random>
#include <vector>

namespace a2g {

struct Vec2 {
    double x{};
    double y{};
};

struct SitePosition {
    double x{};
    double y{};
    double z{};  // antenna height above ground
};

struct AircraftPosition {
    double x{};
    double y{};
    double z{};  // altitude
    double heading{};
    double speed{};
};

/// Link geometry between a sky-facing array and an aircraft.
/// zenith_offset is measured from the up-pointing boresight.
struct LinkGeometry {
    double slant_range{};
    double zenith_offset{};  // radians
    double azimuth{};        // radians, atan2 convention
};

// --- convex polygon helpers -------------------------------------------------

using Polygon = std::vector<Vec2>;

double polygon_area(const Polygon& poly);
Vec2 polygon_centroid(const Polygon& poly);

// Keep the part of poly with normal.p <= c (Sutherland-Hodgman against one
// half-plane).
Polygon clip_halfplane(const Polygon& poly, Vec2 normal, double c);

// Voronoi cell of one site in a triangular lattice with spacing isd:
// a regular hexagon around the origin with apothem isd/2.
Polygon hex_cell_polygon(double isd);

// --- hexagonal multi-site layout --------------------------------------------

/// Hexagonal grid of ground stations with optional wrap-around.
///
/// Sites live on a triangular lattice with spacing isd; rings counts the hex
/// rings around the center site, giving 1 + 3r(r+1) sites. Wrap-around uses
/// the 7-image cluster translation scheme so edge sites see realistic
/// interference.
class HexLayout {
  public:
    HexLayout(double isd, int rings, double site_height, bool wrap = true);

    const std::vector<SitePosition>& sites() const { return sites_; }
    double isd() const { return isd_; }
    int rings() const { return rings_; }
    bool wrapped() const { return wrap_; }

    /// The six nonzero cluster translations (valid regardless of wrap mode).
    const std::array<Vec2, 6>& translations() const { return images_; }

    /// Radius of a box guaranteed to contain the coverage region.
    double region_bound() const { return bound_; }

    /// True if (x, y) lies in the wrapped coverage region (the Voronoi cell
    /// of the cluster lattice around the origin).
    bool contains(double x, double y) const;

    /// Geometry of the shortest image of the aircraft as seen from the site.
    /// With wrap disabled only the direct image is considered.
    LinkGeometry link(const SitePosition& site, const AircraftPosition& ac) const;

  private:
    double isd_;
    int rings_;
    bool wrap_;
    double bound_;
    std::vector<SitePosition> sites_;
    std::array<Vec2, 6> images_;
};

/// Direct (unwrapped) geometry from site to aircraft.
LinkGeometry direct_link(const SitePosition& site, const AircraftPosition& ac);

/// Site positions for a hex grid: 1 + 3r(r+1) sites, center at the origin,
/// minimum pairwise horizontal distance isd.
std::vector<SitePosition> hex_layout(double isd, int rings, double site_height = 0.0);

/// One aircraft position uniform over the layout's coverage region at the
/// given altitude.
AircraftPosition drop_one(const HexLayout& layout, double altitude, std::mt19937_64& rng);

std::vector<AircraftPosition> drop_aircraft(const HexLayout& layout, double altitude, int n,
                                            std::mt19937_64& rng);

}  // namespace a2g
