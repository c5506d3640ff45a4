// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "a2g/antenna.hpp"
#include "a2g/geometry.hpp"
#include "a2g/scenario.hpp"

namespace a2g {

enum class Direction { DL, UL };

std::string to_string(Direction d);

/// One Monte Carlo measurement.
struct LinkSample {
    std::int64_t drop_id{};
    Direction direction = Direction::DL;
    double ru{};
    int serving_site{};
    int serving_beam{};
    double snr_db{};
    double sinr_db{};
    double throughput_bps{};
};

struct PercentileReport {
    Direction direction = Direction::DL;
    double ru{};
    std::map<int, double> percentiles;  // q in {5, 50, 90, 99, 100}
};

struct RunResult {
    std::vector<LinkSample> samples;
    std::vector<PercentileReport> sinr_reports;
    std::vector<PercentileReport> throughput_reports;
};

/// Nearest-rank percentile on the sorted sample; q = 0 gives the minimum,
/// q = 100 the maximum. Throws on an empty sample.
double percentile(std::vector<double> samples, double q);

/// Truncated-Shannon user rate with processor-sharing load scaling:
/// (1 - ru * sharing) * bw * min(alpha * log2(1 + sinr), se_max), zero below
/// the outage threshold.
double throughput_bps(double sinr_db, double bandwidth_hz, double ru, const LinkModel& link);

/// Monte Carlo snapshot engine behind the SINR/throughput studies.
///
/// Every drop derives its randomness from (seed, drop_id) counters, so runs
/// are reproducible independent of worker count, and interference draws are
/// coupled across RU levels (raising RU only adds interferers).
class SimEngine {
  public:
    explicit SimEngine(Scenario scenario);

    const Scenario& scenario() const { return scenario_; }
    const HexLayout& layout() const { return layout_; }
    const std::vector<Beam>& beams() const { return beams_; }

    /// Strongest-received-power association over (site, beam); ties broken by
    /// the lowest (site, beam) pair. In genie steering mode all beams tie, so
    /// the beam id is 0.
    std::pair<int, int> serve(const AircraftPosition& ac) const;

    AircraftPosition drop_position(std::int64_t drop_id) const;

    LinkSample snapshot(std::int64_t drop_id, const AircraftPosition& ac,
                        std::pair<int, int> serving, double ru, Direction dir) const;

    /// Full study: n_drops samples per (direction, ru) pair plus percentile
    /// reports. n_threads = 0 uses the OpenMP default; run_serial() is the
    /// reference implementation the parallel path is checked against.
    RunResult run(int n_threads = 0) const;
    RunResult run_serial() const;

  private:
    void simulate_drop(std::int64_t drop_id, std::vector<LinkSample>& out) const;
    RunResult finalize(std::vector<LinkSample> samples) const;

    double dl_gain_dbi(const LinkGeometry& geom, const Beam& steer) const;

    Scenario scenario_;
    HexLayout layout_;
    std::vector<Beam> beams_;
    double gs_tx_dbm_;
    double ue_tx_dbm_;
    double dl_noise_dbm_;
    double ul_noise_dbm_;
    double combining_db_;
};

}  // namespace a2g
