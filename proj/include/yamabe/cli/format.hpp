#pragma once

#include <span>
#include <string>
#include <vector>

#include "yamabe/flow/run.hpp"

namespace yamabe::cli {

// Shortest-safe decimal form: printf "%.17g", always with '.' as separator.
std::string format_number(double x);

// Shortest decimal that reads back to the same double; used for column names
// and config files.
std::string format_shortest(double x);

// Writes `contents` to `path` through a temporary file in the same directory
// followed by a rename, creating parent directories as needed.
void atomic_write(const std::string& path, const std::string& contents);

// series.csv: t,sigma_tilde,volume,F2,F3,v_at_x1,dt,mass_frac_<x0>...
std::string series_csv(std::span<const flow::TimeSeriesRecord> records,
                       std::span<const double> cutoffs);

// Inverse of series_csv; returns the cutoffs named in the header.
std::vector<flow::TimeSeriesRecord> parse_series_csv(const std::string& text,
                                                     std::vector<double>* cutoffs = nullptr);

// snap_<t>.csv with t printed to 8 decimals.
std::string snapshot_name(double t);

// Two columns x,v with a header line.
std::string profile_csv(std::span<const double> x, std::span<const double> v);

}  // namespace yamabe::cli
