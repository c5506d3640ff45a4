// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "a2g/simengine.hpp"

namespace a2g {

/// Raw sample CSV, header:
/// drop_id,direction,ru,serving_site,serving_beam,snr_db,sinr_db,throughput_bps
void write_raw_csv(std::ostream& out, const std::vector<LinkSample>& samples);
std::vector<LinkSample> read_raw_csv(std::istream& in);

/// Summary CSV, header: direction,ru,p5,p50,p90,p99,max
void write_summary_csv(std::ostream& out, const std::vector<PercentileReport>& reports);

/// Sorted (value, cumulative_fraction) pairs for one (direction, ru) slice.
void write_cdf(std::ostream& out, std::vector<double> values);

/// Percentile reports recomputed from raw samples (the `report` subcommand).
struct Summary {
    std::vector<PercentileReport> sinr_reports;
    std::vector<PercentileReport> throughput_reports;
};
Summary summarize(const std::vector<LinkSample>& samples);

/// Writes samples.csv, summary_sinr.csv, summary_throughput.csv, and per
/// (direction, ru) CDF dumps into out_dir. Returns the written file names.
std::vector<std::string> write_result_files(const std::string& out_dir,
                                            const std::vector<LinkSample>& samples);

}  // namespace a2g
