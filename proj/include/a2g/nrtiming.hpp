// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

namespace a2g {

/// NR numerology: SCS = 15 * 2^mu kHz, slot = 2^-mu ms, mu in 0..4.
struct Numerology {
    int mu{};

    double scs_khz() const { return 15.0 * (1 << mu); }
    double slot_duration_ms() const { return 1.0 / (1 << mu); }
};

Numerology make_numerology(int mu);  // throws if mu outside 0..4

enum class SlotKind { DL, GP, UL };

/// Ordered DL/GP/UL slot sequence with its numerology.
struct TddPattern {
    Numerology numerology;
    std::vector<SlotKind> slots;

    double period_ms() const { return slots.size() * numerology.slot_duration_ms(); }
    int count(SlotKind k) const;
};

double round_trip_time_ms(double cell_radius_m);

double max_initial_timing_advance_ms(int mu);

struct TaFeasibility {
    bool feasible{};
    double margin_ms{};
};

/// Can the initial timing-advance range cover the round trip at this radius?
TaFeasibility ta_feasible(int mu, double cell_radius_m);

/// Guard period needed to absorb the round-trip delay at the cell edge.
double guard_period_ms(double cell_radius_m);

/// Shortest TDD period keeping the guard-period overhead at or below
/// max_overhead.
double min_tdd_period_ms(double gp_ms, double max_overhead);

/// Canonical DL-block / GP-block / UL-block pattern. When a radius is given,
/// the GP span must cover guard_period_ms(radius).
TddPattern build_pattern(Numerology num, int n_dl, int n_gp, int n_ul,
                         std::optional<double> cell_radius_m = std::nullopt);

inline constexpr int kNrMaxK1 = 15;

struct K1Requirement {
    int worst_case{};          // last UL slot index minus first DL slot index
    int earliest_reachable{};  // max over DL slots of distance to the next UL slot
    bool feasible{};           // worst_case <= kNrMaxK1
};

K1Requirement required_k1(const TddPattern& pattern);

double dl_ul_ratio(const TddPattern& pattern);

/// Worst-case (diameter chord) time to cross a cell.
double cell_traversal_time_s(double cell_radius_m, double speed_mps);

}  // namespace a2g
