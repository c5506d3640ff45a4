// SPDX-License-Identifier: Apache-2.0
#include "a2g/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace a2g {

namespace {

constexpr double kPi = 3.14159265358979323846;

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double norm2(Vec2 a) { return dot(a, a); }

}  // namespace

double polygon_area(const Polygon& poly) {
    double twice = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        twice += a.x * b.y - b.x * a.y;
    }
    return std::abs(twice) / 2.0;
}

Vec2 polygon_centroid(const Polygon& poly) {
    double twice = 0.0;
    double cx = 0.0;
    double cy = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        const double cross = a.x * b.y - b.x * a.y;
        twice += cross;
        cx += (a.x + b.x) * cross;
        cy += (a.y + b.y) * cross;
    }
    if (twice == 0.0) {
        throw std::invalid_argument("polygon_centroid: degenerate polygon");
    }
    return {cx / (3.0 * twice), cy / (3.0 * twice)};
}

Polygon clip_halfplane(const Polygon& poly, Vec2 normal, double c) {
    Polygon out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        const double da = dot(normal, a) - c;
        const double db = dot(normal, b) - c;
        if (da <= 0.0) {
            out.push_back(a);
        }
        if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
            const double t = da / (da - db);
            out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    return out;
}

Polygon hex_cell_polygon(double isd) {
    const double r = isd / std::sqrt(3.0);
    Polygon poly;
    poly.reserve(6);
    for (int k = 0; k < 6; ++k) {
        const double ang = kPi / 6.0 + k * kPi / 3.0;
        poly.push_back({r * std::cos(ang), r * std::sin(ang)});
    }
    return poly;
}

std::vector<SitePosition> hex_layout(double isd, int rings, double site_height) {
    if (isd <= 0.0) {
        throw std::invalid_argument("hex_layout: isd must be > 0");
    }
    if (rings < 0) {
        throw std::invalid_argument("hex_layout: rings must be >= 0");
    }
    const Vec2 a1{isd, 0.0};
    const Vec2 a2{isd / 2.0, isd * std::sqrt(3.0) / 2.0};
    std::vector<SitePosition> sites;
    for (int i = -rings; i <= rings; ++i) {
        for (int j = -rings; j <= rings; ++j) {
            if (std::max({std::abs(i), std::abs(j), std::abs(i + j)}) > rings) {
                continue;
            }
            sites.push_back({i * a1.x + j * a2.x, i * a1.y + j * a2.y, site_height});
        }
    }
    // Stable ids: center first, then by distance and angle.
    std::sort(sites.begin(), sites.end(), [](const SitePosition& a, const SitePosition& b) {
        const double ra = std::hypot(a.x, a.y);
        const double rb = std::hypot(b.x, b.y);
        if (ra != rb) {
            return ra < rb;
        }
        return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
    });
    return sites;
}

HexLayout::HexLayout(double isd, int rings, double site_height, bool wrap)
    : isd_(isd), rings_(rings), wrap_(wrap), sites_(hex_layout(isd, rings, site_height)) {
    const Vec2 a1{isd, 0.0};
    const Vec2 a2{isd / 2.0, isd * std::sqrt(3.0) / 2.0};
    const int r = rings;
    // Cluster of 1+3r(r+1) cells repeats with basis T1 = (r+1)a1 + r*a2 and
    // its 60-degree rotation T2.
    const Vec2 t1{(r + 1) * a1.x + r * a2.x, (r + 1) * a1.y + r * a2.y};
    const Vec2 t2{-r * a1.x + (2 * r + 1) * a2.x, -r * a1.y + (2 * r + 1) * a2.y};
    const Vec2 t3{t2.x - t1.x, t2.y - t1.y};
    images_ = {t1, t2, t3, Vec2{-t1.x, -t1.y}, Vec2{-t2.x, -t2.y}, Vec2{-t3.x, -t3.y}};
    bound_ = 0.0;
    for (const Vec2& t : images_) {
        bound_ = std::max(bound_, std::hypot(t.x, t.y));
    }
}

bool HexLayout::contains(double x, double y) const {
    const Vec2 p{x, y};
    const double d0 = norm2(p);
    for (const Vec2& t : images_) {
        const Vec2 q{x - t.x, y - t.y};
        if (norm2(q) < d0 - 1e-9 * isd_ * isd_) {
            return false;
        }
    }
    return true;
}

LinkGeometry direct_link(const SitePosition& site, const AircraftPosition& ac) {
    const double dx = ac.x - site.x;
    const double dy = ac.y - site.y;
    const double dz = ac.z - site.z;
    const double dh = std::hypot(dx, dy);
    LinkGeometry g;
    g.slant_range = std::hypot(dh, dz);
    g.zenith_offset = std::atan2(dh, dz);
    g.azimuth = std::atan2(dy, dx);
    return g;
}

LinkGeometry HexLayout::link(const SitePosition& site, const AircraftPosition& ac) const {
    LinkGeometry best = direct_link(site, ac);
    if (!wrap_) {
        return best;
    }
    for (const Vec2& t : images_) {
        AircraftPosition img = ac;
        img.x += t.x;
        img.y += t.y;
        const LinkGeometry g = direct_link(site, img);
        if (g.slant_range < best.slant_range) {
            best = g;
        }
    }
    return best;
}

AircraftPosition drop_one(const HexLayout& layout, double altitude, std::mt19937_64& rng) {
    const double bound = layout.region_bound();
    std::uniform_real_distribution<double> u(-bound, bound);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const double x = u(rng);
        const double y = u(rng);
        if (layout.contains(x, y)) {
            return {x, y, altitude, 0.0, 0.0};
        }
    }
    throw std::runtime_error("drop_one: rejection sampling failed");
}

std::vector<AircraftPosition> drop_aircraft(const HexLayout& layout, double altitude, int n,
                                            std::mt19937_64& rng) {
    if (n < 1) {
        throw std::invalid_argument("drop_aircraft: n must be >= 1");
    }
    std::vector<AircraftPosition> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        out.push_back(drop_one(layout, altitude, rng));
    }
    return out;
}

}  // namespace a2g
