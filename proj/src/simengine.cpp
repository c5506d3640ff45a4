// SPDX-License-Identifier: Apache-2.0
#include "a2g/simengine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "a2g/channel.hpp"
#include "a2g/rng.hpp"

namespace a2g {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Substream tags appended to (seed, drop_id).
constexpr std::uint64_t kStreamPosition = 0;
constexpr std::uint64_t kStreamDl = 1;
constexpr std::uint64_t kStreamUl = 2;

const int kReportQuantiles[] = {5, 50, 90, 99, 100};

bool point_in_hex(double x, double y, double isd) {
    const double apothem = isd / 2.0;
    for (int k = 0; k < 6; ++k) {
        const double ang = k * kPi / 3.0;
        if (x * std::cos(ang) + y * std::sin(ang) > apothem + 1e-9) {
            return false;
        }
    }
    return true;
}

// Uniform point in the hexagonal cell footprint around the origin.
Vec2 uniform_in_hex(double isd, std::mt19937_64& rng) {
    const double r = isd / std::sqrt(3.0);
    std::uniform_real_distribution<double> u(-r, r);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const double x = u(rng);
        const double y = u(rng);
        if (point_in_hex(x, y, isd)) {
            return {x, y};
        }
    }
    throw std::runtime_error("uniform_in_hex: rejection sampling failed");
}

}  // namespace

std::string to_string(Direction d) { return d == Direction::DL ? "DL" : "UL"; }

double percentile(std::vector<double> samples, double q) {
    if (samples.empty()) {
        throw std::invalid_argument("percentile: empty sample list");
    }
    if (q < 0.0 || q > 100.0) {
        throw std::invalid_argument("percentile: q must be in [0,100]");
    }
    std::sort(samples.begin(), samples.end());
    const auto n = static_cast<std::int64_t>(samples.size());
    std::int64_t rank = static_cast<std::int64_t>(std::ceil(q / 100.0 * n));
    rank = std::clamp<std::int64_t>(rank, 1, n);
    return samples[rank - 1];
}

double throughput_bps(double sinr_db, double bandwidth_hz, double ru, const LinkModel& link) {
    if (bandwidth_hz <= 0.0) {
        throw std::invalid_argument("throughput_bps: bandwidth must be > 0");
    }
    if (ru < 0.0 || ru > 1.0) {
        throw std::invalid_argument("throughput_bps: ru out of [0,1]");
    }
    if (sinr_db < link.sinr_min_db) {
        return 0.0;
    }
    const double se = std::min(link.alpha * std::log2(1.0 + db_to_linear(sinr_db)), link.se_max);
    const double share = std::max(1.0 - ru * link.sharing_factor, 0.0);
    return share * bandwidth_hz * se;
}

SimEngine::SimEngine(Scenario scenario)
    : scenario_(std::move(scenario)),
      layout_(scenario_.isd_m, scenario_.rings, scenario_.gs_antenna_height_m, scenario_.wrap),
      beams_(beam_grid(scenario_.band.beams_per_cell, scenario_.isd_m,
                       scenario_.aircraft_altitude_m - scenario_.gs_antenna_height_m)) {
    validate(scenario_);
    // Beams within a cell time-share the resources, so a scheduled beam
    // radiates the full site power and at most one beam per site is active in
    // a snapshot.
    gs_tx_dbm_ = watts_to_dbm(scenario_.gs_total_tx_power_w);
    ue_tx_dbm_ = watts_to_dbm(scenario_.ue_tx_power_w);
    dl_noise_dbm_ =
        noise_power_dbm(scenario_.band.bandwidth_per_direction_hz, scenario_.ue_noise_figure_db);
    ul_noise_dbm_ =
        noise_power_dbm(scenario_.band.bandwidth_per_direction_hz, scenario_.gs_noise_figure_db);
    combining_db_ = 10.0 * std::log10(static_cast<double>(scenario_.ue_antenna_count));
}

double SimEngine::dl_gain_dbi(const LinkGeometry& geom, const Beam& steer) const {
    return beam_gain_dbi(geom.zenith_offset, geom.azimuth, steer, scenario_.band.array);
}

std::pair<int, int> SimEngine::serve(const AircraftPosition& ac) const {
    const auto& sites = layout_.sites();
    if (sites.empty()) {
        throw std::runtime_error("serve: no sites");
    }
    const bool genie = scenario_.steering_mode == SteeringMode::GenieLocation;
    int best_site = 0;
    int best_beam = 0;
    double best_rx = -1e300;
    for (int s = 0; s < static_cast<int>(sites.size()); ++s) {
        const LinkGeometry geom = layout_.link(sites[s], ac);
        const double pl = free_space_path_loss_db(geom.slant_range, scenario_.band.carrier_frequency_hz);
        if (genie) {
            const Beam aimed{geom.zenith_offset, geom.azimuth, 0};
            const double rx = gs_tx_dbm_ + dl_gain_dbi(geom, aimed) - pl;
            if (rx > best_rx) {
                best_rx = rx;
                best_site = s;
                best_beam = 0;
            }
            continue;
        }
        for (const Beam& b : beams_) {
            const double rx = gs_tx_dbm_ + dl_gain_dbi(geom, b) - pl;
            if (rx > best_rx) {
                best_rx = rx;
                best_site = s;
                best_beam = b.index;
            }
        }
    }
    return {best_site, best_beam};
}

AircraftPosition SimEngine::drop_position(std::int64_t drop_id) const {
    auto rng = make_stream(scenario_.seed, static_cast<std::uint64_t>(drop_id), kStreamPosition);
    return drop_one(layout_, scenario_.aircraft_altitude_m, rng);
}

LinkSample SimEngine::snapshot(std::int64_t drop_id, const AircraftPosition& ac,
                               std::pair<int, int> serving, double ru, Direction dir) const {
    if (ru < 0.0 || ru > 1.0) {
        throw std::invalid_argument("snapshot: ru out of [0,1]");
    }
    const auto& sites = layout_.sites();
    const bool genie = scenario_.steering_mode == SteeringMode::GenieLocation;
    const double carrier = scenario_.band.carrier_frequency_hz;
    const double sigma = scenario_.link.shadowing_sigma_db;
    const int n_sites = static_cast<int>(sites.size());
    const int n_beams = static_cast<int>(beams_.size());

    auto rng = make_stream(scenario_.seed, static_cast<std::uint64_t>(drop_id),
                           dir == Direction::DL ? kStreamDl : kStreamUl);
    std::uniform_real_distribution<double> unif01(0.0, 1.0);
    std::uniform_int_distribution<int> beam_pick(0, n_beams - 1);
    std::normal_distribution<double> shadow(0.0, sigma > 0.0 ? sigma : 1.0);
    auto draw_shadow = [&]() { return sigma > 0.0 ? shadow(rng) : 0.0; };

    const LinkGeometry serv_geom = layout_.link(sites[serving.first], ac);
    const Beam serv_steer = genie ? Beam{serv_geom.zenith_offset, serv_geom.azimuth, 0}
                                  : beams_[serving.second];
    const double serv_pl = free_space_path_loss_db(serv_geom.slant_range, carrier);

    double signal_dbm = 0.0;
    double noise_dbm = 0.0;
    if (dir == Direction::DL) {
        signal_dbm =
            gs_tx_dbm_ + dl_gain_dbi(serv_geom, serv_steer) + combining_db_ - serv_pl + draw_shadow();
        noise_dbm = dl_noise_dbm_;
    } else {
        signal_dbm = ue_tx_dbm_ + dl_gain_dbi(serv_geom, serv_steer) - serv_pl + draw_shadow();
        noise_dbm = ul_noise_dbm_;
    }

    // Interference: one candidate transmission per co-channel cell, active
    // with probability ru. Every random draw happens unconditionally and in
    // fixed site order, so the same drop stream at a higher RU level keeps
    // all existing interferers and only adds new ones.
    double interference_mw = 0.0;
    for (int t = 0; t < n_sites; ++t) {
        const double activity = unif01(rng);
        if (dir == Direction::DL) {
            Beam steer{};
            if (genie) {
                const Vec2 aim = uniform_in_hex(scenario_.isd_m, rng);
                const double aim_h = scenario_.aircraft_altitude_m - scenario_.gs_antenna_height_m;
                steer.steer_zenith_offset = std::atan2(std::hypot(aim.x, aim.y), aim_h);
                steer.steer_azimuth = std::atan2(aim.y, aim.x);
            } else {
                steer = beams_[beam_pick(rng)];
            }
            const double sh = draw_shadow();
            if (t == serving.first || activity >= ru) {
                continue;
            }
            const LinkGeometry geom = layout_.link(sites[t], ac);
            const double pl = free_space_path_loss_db(geom.slant_range, carrier);
            interference_mw +=
                dbm_to_mw(gs_tx_dbm_ + dl_gain_dbi(geom, steer) + combining_db_ - pl + sh);
        } else {
            const Vec2 offset = uniform_in_hex(scenario_.isd_m, rng);
            const double sh = draw_shadow();
            if (t == serving.first || activity >= ru) {
                continue;
            }
            AircraftPosition interferer;
            interferer.x = sites[t].x + offset.x;
            interferer.y = sites[t].y + offset.y;
            interferer.z = scenario_.aircraft_altitude_m;
            const LinkGeometry geom = layout_.link(sites[serving.first], interferer);
            const double pl = free_space_path_loss_db(geom.slant_range, carrier);
            interference_mw += dbm_to_mw(ue_tx_dbm_ + dl_gain_dbi(geom, serv_steer) - pl + sh);
        }
    }

    const double signal_mw = dbm_to_mw(signal_dbm);
    const double noise_mw = dbm_to_mw(noise_dbm);
    LinkSample sample;
    sample.drop_id = drop_id;
    sample.direction = dir;
    sample.ru = ru;
    sample.serving_site = serving.first;
    sample.serving_beam = serving.second;
    sample.snr_db = signal_dbm - noise_dbm;
    sample.sinr_db = linear_to_db(signal_mw / (interference_mw + noise_mw));
    sample.throughput_bps =
        throughput_bps(sample.sinr_db, scenario_.band.bandwidth_per_direction_hz, ru, scenario_.link);
    return sample;
}

void SimEngine::simulate_drop(std::int64_t drop_id, std::vector<LinkSample>& out) const {
    const AircraftPosition ac = drop_position(drop_id);
    const auto serving = serve(ac);
    const auto n_ru = static_cast<std::int64_t>(scenario_.ru_levels.size());
    const std::int64_t n_drops = scenario_.n_drops;
    for (int d = 0; d < 2; ++d) {
        const Direction dir = d == 0 ? Direction::DL : Direction::UL;
        for (std::int64_t r = 0; r < n_ru; ++r) {
            const std::int64_t idx = (d * n_ru + r) * n_drops + drop_id;
            out[idx] = snapshot(drop_id, ac, serving, scenario_.ru_levels[r], dir);
        }
    }
}

RunResult SimEngine::finalize(std::vector<LinkSample> samples) const {
    RunResult result;
    const auto n_ru = static_cast<std::int64_t>(scenario_.ru_levels.size());
    const std::int64_t n_drops = scenario_.n_drops;
    for (int d = 0; d < 2; ++d) {
        const Direction dir = d == 0 ? Direction::DL : Direction::UL;
        for (std::int64_t r = 0; r < n_ru; ++r) {
            const std::int64_t base = (d * n_ru + r) * n_drops;
            std::vector<double> sinr(n_drops);
            std::vector<double> tput(n_drops);
            for (std::int64_t i = 0; i < n_drops; ++i) {
                sinr[i] = samples[base + i].sinr_db;
                tput[i] = samples[base + i].throughput_bps;
            }
            PercentileReport ps{dir, scenario_.ru_levels[r], {}};
            PercentileReport pt{dir, scenario_.ru_levels[r], {}};
            for (int q : kReportQuantiles) {
                ps.percentiles[q] = percentile(sinr, q);
                pt.percentiles[q] = percentile(tput, q);
            }
            result.sinr_reports.push_back(std::move(ps));
            result.throughput_reports.push_back(std::move(pt));
        }
    }
    result.samples = std::move(samples);
    return result;
}

RunResult SimEngine::run_serial() const {
    std::vector<LinkSample> samples(2 * scenario_.ru_levels.size() * scenario_.n_drops);
    for (std::int64_t drop = 0; drop < scenario_.n_drops; ++drop) {
        simulate_drop(drop, samples);
    }
    return finalize(std::move(samples));
}

RunResult SimEngine::run(int n_threads) const {
    std::vector<LinkSample> samples(2 * scenario_.ru_levels.size() * scenario_.n_drops);
    const std::int64_t n = scenario_.n_drops;
#ifdef _OPENMP
    if (n_threads > 0) {
#pragma omp parallel for schedule(static) num_threads(n_threads)
        for (std::int64_t drop = 0; drop < n; ++drop) {
            simulate_drop(drop, samples);
        }
    } else {
#pragma omp parallel for schedule(static)
        for (std::int64_t drop = 0; drop < n; ++drop) {
            simulate_drop(drop, samples);
        }
    }
#else
    (void)n_threads;
    for (std::int64_t drop = 0; drop < n; ++drop) {
        simulate_drop(drop, samples);
    }
#endif
    return finalize(std::move(samples));
}

}  // namespace a2g
