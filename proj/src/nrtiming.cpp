// SPDX-License-Identifier: Apache-2.0
#include "a2g/nrtiming.hpp"

#include <algorithm>
#include <stdexcept>

#include "a2g/channel.hpp"

namespace a2g {

namespace {
// Design radii are quoted to the nearest km (300 km is c * 2 ms / 2 =
// 299.79 km), so feasibility comparisons carry a small relative slack.
constexpr double kTimingSlack = 0.01;
}  // namespace

Numerology make_numerology(int mu) {
    if (mu < 0 || mu > 4) {
        throw std::invalid_argument("make_numerology: mu must be in 0..4");
    }
    return Numerology{mu};
}

int TddPattern::count(SlotKind k) const {
    return static_cast<int>(std::count(slots.begin(), slots.end(), k));
}

double round_trip_time_ms(double cell_radius_m) {
    if (cell_radius_m < 0.0) {
        throw std::invalid_argument("round_trip_time_ms: radius must be >= 0");
    }
    return 2.0 * cell_radius_m / kSpeedOfLight * 1e3;
}

double max_initial_timing_advance_ms(int mu) {
    return make_numerology(mu).slot_duration_ms() * 2.0;  // 2^-mu * 2 ms
}

TaFeasibility ta_feasible(int mu, double cell_radius_m) {
    const double limit = max_initial_timing_advance_ms(mu);
    const double rtt = round_trip_time_ms(cell_radius_m);
    return {limit * (1.0 + kTimingSlack) >= rtt, limit - rtt};
}

double guard_period_ms(double cell_radius_m) { return round_trip_time_ms(cell_radius_m); }

double min_tdd_period_ms(double gp_ms, double max_overhead) {
    if (gp_ms < 0.0) {
        throw std::invalid_argument("min_tdd_period_ms: gp must be >= 0");
    }
    if (max_overhead <= 0.0 || max_overhead > 1.0) {
        throw std::invalid_argument("min_tdd_period_ms: max_overhead must be in (0,1]");
    }
    return gp_ms / max_overhead;
}

TddPattern build_pattern(Numerology num, int n_dl, int n_gp, int n_ul,
                         std::optional<double> cell_radius_m) {
    if (n_dl < 0 || n_gp < 0 || n_ul < 0) {
        throw std::invalid_argument("build_pattern: slot counts must be >= 0");
    }
    if (n_dl + n_gp + n_ul < 1) {
        throw std::invalid_argument("build_pattern: pattern must be non-empty");
    }
    if (n_dl > 0 && n_ul > 0 && n_gp < 1) {
        throw std::invalid_argument("build_pattern: DL-to-UL transition needs a guard slot");
    }
    if (cell_radius_m) {
        const double gp_span = n_gp * num.slot_duration_ms();
        const double needed = guard_period_ms(*cell_radius_m);
        if (gp_span * (1.0 + kTimingSlack) < needed) {
            throw std::invalid_argument("build_pattern: guard insufficient for cell radius");
        }
    }
    TddPattern p;
    p.numerology = num;
    p.slots.reserve(n_dl + n_gp + n_ul);
    p.slots.insert(p.slots.end(), n_dl, SlotKind::DL);
    p.slots.insert(p.slots.end(), n_gp, SlotKind::GP);
    p.slots.insert(p.slots.end(), n_ul, SlotKind::UL);
    return p;
}

K1Requirement required_k1(const TddPattern& pattern) {
    int first_dl = -1;
    int last_ul = -1;
    for (int i = 0; i < static_cast<int>(pattern.slots.size()); ++i) {
        if (pattern.slots[i] == SlotKind::DL && first_dl < 0) {
            first_dl = i;
        }
        if (pattern.slots[i] == SlotKind::UL) {
            last_ul = i;
        }
    }
    if (first_dl < 0 || last_ul < 0) {
        throw std::invalid_argument("required_k1: pattern needs both DL and UL slots");
    }
    // Secondary statistic: each DL slot paired with the earliest UL slot at or
    // after it (wrapping to the next period).
    const int n = static_cast<int>(pattern.slots.size());
    int earliest = 0;
    for (int d = 0; d < n; ++d) {
        if (pattern.slots[d] != SlotKind::DL) {
            continue;
        }
        for (int off = 1; off <= 2 * n; ++off) {
            if (pattern.slots[(d + off) % n] == SlotKind::UL) {
                earliest = std::max(earliest, off);
                break;
            }
        }
    }
    K1Requirement r;
    r.worst_case = last_ul - first_dl;
    r.earliest_reachable = earliest;
    r.feasible = r.worst_case <= kNrMaxK1;
    return r;
}

double dl_ul_ratio(const TddPattern& pattern) {
    const int ul = pattern.count(SlotKind::UL);
    if (ul == 0) {
        throw std::invalid_argument("dl_ul_ratio: pattern has no UL slots");
    }
    return static_cast<double>(pattern.count(SlotKind::DL)) / ul;
}

double cell_traversal_time_s(double cell_radius_m, double speed_mps) {
    if (cell_radius_m < 0.0) {
        throw std::invalid_argument("cell_traversal_time_s: radius must be >= 0");
    }
    if (speed_mps <= 0.0) {
        throw std::invalid_argument("cell_traversal_time_s: speed must be > 0");
    }
    return 2.0 * cell_radius_m / speed_mps;
}

}  // namespace a2g
