// SPDX-License-Identifier: Apache-2.0
#include "a2g/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace a2g {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string ru_tag(double ru) { return fmt("%g", ru); }

Direction direction_from_string(const std::string& s) {
    if (s == "DL") {
        return Direction::DL;
    }
    if (s == "UL") {
        return Direction::UL;
    }
    throw std::runtime_error("bad direction in CSV: '" + s + "'");
}

// Group keys in first-seen order.
std::vector<std::pair<Direction, double>> slice_keys(const std::vector<LinkSample>& samples) {
    std::vector<std::pair<Direction, double>> keys;
    for (const LinkSample& s : samples) {
        const std::pair<Direction, double> k{s.direction, s.ru};
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
            keys.push_back(k);
        }
    }
    return keys;
}

}  // namespace

void write_raw_csv(std::ostream& out, const std::vector<LinkSample>& samples) {
    out << "drop_id,direction,ru,serving_site,serving_beam,snr_db,sinr_db,throughput_bps\n";
    for (const LinkSample& s : samples) {
        out << s.drop_id << ',' << to_string(s.direction) << ',' << ru_tag(s.ru) << ','
            << s.serving_site << ',' << s.serving_beam << ',' << fmt("%.6f", s.snr_db) << ','
            << fmt("%.6f", s.sinr_db) << ',' << fmt("%.3f", s.throughput_bps) << '\n';
    }
}

std::vector<LinkSample> read_raw_csv(std::istream& in) {
    std::vector<LinkSample> samples;
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("raw CSV: empty file");
    }
    if (line.rfind("drop_id,", 0) != 0) {
        throw std::runtime_error("raw CSV: unexpected header");
    }
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 8) {
            throw std::runtime_error("raw CSV line " + std::to_string(lineno) +
                                     ": expected 8 fields");
        }
        LinkSample s;
        s.drop_id = std::stoll(fields[0]);
        s.direction = direction_from_string(fields[1]);
        s.ru = std::stod(fields[2]);
        s.serving_site = std::stoi(fields[3]);
        s.serving_beam = std::stoi(fields[4]);
        s.snr_db = std::stod(fields[5]);
        s.sinr_db = std::stod(fields[6]);
        s.throughput_bps = std::stod(fields[7]);
        samples.push_back(s);
    }
    return samples;
}

void write_summary_csv(std::ostream& out, const std::vector<PercentileReport>& reports) {
    out << "direction,ru,p5,p50,p90,p99,max\n";
    for (const PercentileReport& r : reports) {
        out << to_string(r.direction) << ',' << ru_tag(r.ru);
        for (int q : {5, 50, 90, 99, 100}) {
            out << ',' << fmt("%.6f", r.percentiles.at(q));
        }
        out << '\n';
    }
}

void write_cdf(std::ostream& out, std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("write_cdf: empty values");
    }
    std::sort(values.begin(), values.end());
    out << "value,cumulative_fraction\n";
    const double n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << fmt("%.6f", values[i]) << ',' << fmt("%.8f", (i + 1) / n) << '\n';
    }
}

Summary summarize(const std::vector<LinkSample>& samples) {
    Summary summary;
    for (const auto& [dir, ru] : slice_keys(samples)) {
        std::vector<double> sinr;
        std::vector<double> tput;
        for (const LinkSample& s : samples) {
            if (s.direction == dir && s.ru == ru) {
                sinr.push_back(s.sinr_db);
                tput.push_back(s.throughput_bps);
            }
        }
        PercentileReport ps{dir, ru, {}};
        PercentileReport pt{dir, ru, {}};
        for (int q : {5, 50, 90, 99, 100}) {
            ps.percentiles[q] = percentile(sinr, q);
            pt.percentiles[q] = percentile(tput, q);
        }
        summary.sinr_reports.push_back(std::move(ps));
        summary.throughput_reports.push_back(std::move(pt));
    }
    return summary;
}

std::vector<std::string> write_result_files(const std::string& out_dir,
                                            const std::vector<LinkSample>& samples) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::vector<std::string> written;
    auto open = [&](const std::string& name) {
        const fs::path p = fs::path(out_dir) / name;
        std::ofstream f(p);
        if (!f) {
            throw std::runtime_error("cannot write " + p.string());
        }
        written.push_back(name);
        return f;
    };

    {
        auto f = open("samples.csv");
        write_raw_csv(f, samples);
    }
    const Summary summary = summarize(samples);
    {
        auto f = open("summary_sinr.csv");
        write_summary_csv(f, summary.sinr_reports);
    }
    {
        auto f = open("summary_throughput.csv");
        write_summary_csv(f, summary.throughput_reports);
    }
    for (const auto& [dir, ru] : slice_keys(samples)) {
        std::vector<double> sinr;
        std::vector<double> tput;
        for (const LinkSample& s : samples) {
            if (s.direction == dir && s.ru == ru) {
                sinr.push_back(s.sinr_db);
                tput.push_back(s.throughput_bps);
            }
        }
        {
            auto f = open("cdf_sinr_" + to_string(dir) + "_ru" + ru_tag(ru) + ".csv");
            write_cdf(f, std::move(sinr));
        }
        {
            auto f = open("cdf_throughput_" + to_string(dir) + "_ru" + ru_tag(ru) + ".csv");
            write_cdf(f, std::move(tput));
        }
    }
    return written;
}

}  // namespace a2g
