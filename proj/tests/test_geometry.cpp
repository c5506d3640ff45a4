// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"

#include "a2g/geometry.hpp"
#include "a2g/rng.hpp"

using namespace a2g;

namespace {

double min_pairwise_distance(const std::vector<SitePosition>& sites) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sites.size(); ++i) {
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
            best = std::min(best, std::hypot(sites[i].x - sites[j].x, sites[i].y - sites[j].y));
        }
    }
    return best;
}

}  // namespace

TEST_CASE("hex layout site counts and spacing") {
    for (int r = 0; r <= 5; ++r) {
        const auto sites = hex_layout(80e3, r);
        CHECK(static_cast<int>(sites.size()) == 1 + 3 * r * (r + 1));
    }
    const auto sites = hex_layout(80e3, 2, 35.0);
    CHECK(sites.size() == 19);
    CHECK(min_pairwise_distance(sites) == doctest::Approx(80e3));
    // center site at origin, all at antenna height
    CHECK(sites[0].x == doctest::Approx(0.0));
    CHECK(sites[0].y == doctest::Approx(0.0));
    for (const auto& s : sites) {
        CHECK(s.z == 35.0);
    }
}

TEST_CASE("hex layout degenerate and tiny cases") {
    const auto one = hex_layout(80e3, 0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].x == 0.0);
    CHECK(one[0].y == 0.0);

    // brute-force pairwise oracle at isd = 1
    const auto seven = hex_layout(1.0, 1);
    REQUIRE(seven.size() == 7);
    CHECK(min_pairwise_distance(seven) == doctest::Approx(1.0));

    CHECK_THROWS(hex_layout(0.0, 2));
    CHECK_THROWS(hex_layout(80e3, -1));
}

TEST_CASE("direct link geometry") {
    SitePosition site{0, 0, 35};

    SUBCASE("aircraft overhead") {
        AircraftPosition ac{0, 0, 12000};
        const auto g = direct_link(site, ac);
        CHECK(g.zenith_offset == doctest::Approx(0.0));
        CHECK(g.slant_range == doctest::Approx(12000 - 35));
    }
    SUBCASE("pythagoras at d = 3000") {
        AircraftPosition ac{3000, 0, 12000};
        const auto g = direct_link(site, ac);
        CHECK(g.slant_range == doctest::Approx(std::sqrt(3000.0 * 3000.0 + 11965.0 * 11965.0)));
        CHECK(g.zenith_offset == doctest::Approx(std::atan2(3000.0, 11965.0)));
        CHECK(g.azimuth == doctest::Approx(0.0));
    }
    SUBCASE("zenith offset monotone in horizontal distance") {
        double prev = -1.0;
        for (double d = 0.0; d <= 50e3; d += 5e3) {
            AircraftPosition ac{d, 0, 12000};
            const double z = direct_link(site, ac).zenith_offset;
            CHECK(z > prev);
            prev = z;
        }
    }
}

TEST_CASE("wrap distance: symmetric, never exceeds direct, matches image scan") {
    const HexLayout layout(80e3, 2, 35.0);
    auto rng = make_stream(7, 0);
    std::uniform_real_distribution<double> u(-200e3, 200e3);
    for (int i = 0; i < 500; ++i) {
        const SitePosition site = layout.sites()[i % layout.sites().size()];
        const AircraftPosition ac{u(rng), u(rng), 12000};
        const auto g = layout.link(site, ac);
        CHECK(g.slant_range <= direct_link(site, ac).slant_range + 1e-9);

        // brute-force scan over all 7 translation images
        double best = std::numeric_limits<double>::infinity();
        best = std::min(best, direct_link(site, ac).slant_range);
        for (const Vec2& t : layout.translations()) {
            AircraftPosition img = ac;
            img.x += t.x;
            img.y += t.y;
            best = std::min(best, direct_link(site, img).slant_range);
        }
        CHECK(g.slant_range == doctest::Approx(best));

        // symmetry of the shortest-image range: swap roles via a site placed
        // at the aircraft ground position and an aircraft above the site
        const SitePosition swapped_site{ac.x, ac.y, site.z};
        const AircraftPosition swapped_ac{site.x, site.y, ac.z};
        CHECK(layout.link(swapped_site, swapped_ac).slant_range == doctest::Approx(g.slant_range));
    }
}

TEST_CASE("wrap shortens distances near the region edge") {
    const HexLayout layout(80e3, 2, 35.0);
    // An outer-ring site along +x and an aircraft near the opposite edge of
    // the region: the wrapped image is far closer than the direct path.
    const auto& sites = layout.sites();
    const auto far_site = std::max_element(sites.begin(), sites.end(),
                                           [](const auto& a, const auto& b) { return a.x < b.x; });
    const AircraftPosition opposite{-far_site->x - 30e3, -20e3, 12000};
    CHECK(layout.link(*far_site, opposite).slant_range <
          0.5 * direct_link(*far_site, opposite).slant_range);
}

TEST_CASE("aircraft drops: deterministic, uniform, fixed altitude") {
    const HexLayout layout(80e3, 2, 35.0);
    auto rng1 = make_stream(123, 9);
    auto rng2 = make_stream(123, 9);
    const auto a = drop_aircraft(layout, 12000, 1000, rng1);
    const auto b = drop_aircraft(layout, 12000, 1000, rng2);
    REQUIRE(a.size() == 1000);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == b[i].x);
        CHECK(a[i].y == b[i].y);
        CHECK(a[i].z == 12000.0);
        CHECK(layout.contains(a[i].x, a[i].y));
    }

    // empirical mean within 3 standard errors of the centroid (origin);
    // region radius bounds the per-coordinate sigma
    double mx = 0.0;
    double my = 0.0;
    for (const auto& p : a) {
        mx += p.x;
        my += p.y;
    }
    mx /= a.size();
    my /= a.size();
    const double sigma_bound = layout.region_bound() / std::sqrt(3.0);
    const double se3 = 3.0 * sigma_bound / std::sqrt(static_cast<double>(a.size()));
    CHECK(std::abs(mx) < se3);
    CHECK(std::abs(my) < se3);
}

TEST_CASE("polygon helpers") {
    const Polygon square{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    CHECK(polygon_area(square) == doctest::Approx(4.0));
    const Vec2 c = polygon_centroid(square);
    CHECK(c.x == doctest::Approx(1.0));
    CHECK(c.y == doctest::Approx(1.0));

    const Polygon half = clip_halfplane(square, {1.0, 0.0}, 1.0);  // x <= 1
    CHECK(polygon_area(half) == doctest::Approx(2.0));

    const Polygon hex = hex_cell_polygon(80e3);
    CHECK(polygon_area(hex) == doctest::Approx(std::sqrt(3.0) / 2.0 * 80e3 * 80e3));
}
