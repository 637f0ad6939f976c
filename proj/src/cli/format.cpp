#include "yamabe/cli/format.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "yamabe/error.hpp"

namespace yamabe::cli {

namespace fs = std::filesystem;

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  // Guard against locales with a decimal comma.
  for (char* p = buf; *p; ++p)
    if (*p == ',') *p = '.';
  return buf;
}

std::string format_shortest(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void atomic_write(const std::string& path, const std::string& contents) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw Error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

std::string series_csv(std::span<const flow::TimeSeriesRecord> records,
                       std::span<const double> cutoffs) {
  std::string out = "t,sigma_tilde,volume,F2,F3,v_at_x1,dt";
  for (double c : cutoffs) out += ",mass_frac_" + format_shortest(c);
  out += '\n';
  for (const auto& r : records) {
    out += format_number(r.t);
    for (double x : {r.sigma_tilde, r.volume, r.F2, r.F3, r.v_at_x1, r.dt_used})
      out += "," + format_number(x);
    for (double m : r.mass_fractions) out += "," + format_number(m);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

double to_double(const std::string& s, std::size_t lineno) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw InputError("series.csv:" + std::to_string(lineno) + ": bad number '" + s + "'");
  return x;
}

}  // namespace

std::vector<flow::TimeSeriesRecord> parse_series_csv(const std::string& text,
                                                     std::vector<double>* cutoffs) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InputError("series.csv is empty");
  const auto header = split(line);
  static const std::vector<std::string> fixed = {"t",  "sigma_tilde", "volume", "F2",
                                                 "F3", "v_at_x1",     "dt"};
  if (header.size() < fixed.size() || !std::equal(fixed.begin(), fixed.end(), header.begin()))
    throw InputError("series.csv: unexpected header '" + line + "'");
  std::vector<double> cuts;
  const std::string prefix = "mass_frac_";
  for (std::size_t j = fixed.size(); j < header.size(); ++j) {
    if (header[j].rfind(prefix, 0) != 0)
      throw InputError("series.csv: unexpected column '" + header[j] + "'");
    cuts.push_back(to_double(header[j].substr(prefix.size()), 1));
  }
  std::vector<flow::TimeSeriesRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != header.size())
      throw InputError("series.csv:" + std::to_string(lineno) + ": wrong number of fields");
    flow::TimeSeriesRecord r;
    r.t = to_double(f[0], lineno);
    r.sigma_tilde = to_double(f[1], lineno);
    r.volume = to_double(f[2], lineno);
    r.F2 = to_double(f[3], lineno);
    r.F3 = to_double(f[4], lineno);
    r.v_at_x1 = to_double(f[5], lineno);
    r.dt_used = to_double(f[6], lineno);
    for (std::size_t j = fixed.size(); j < f.size(); ++j)
      r.mass_fractions.push_back(to_double(f[j], lineno));
    out.push_back(std::move(r));
  }
  if (cutoffs) *cutoffs = std::move(cuts);
  return out;
}

std::string snapshot_name(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snap_%.8f.csv", t);
  return buf;
}

std::string profile_csv(std::span<const double> x, std::span<const double> v) {
  std::string out = "x,v\n";
  for (std::size_t i = 0; i < x.size(); ++i) out += format_number(x[i]) + "," + format_number(v[i]) + "\n";
  return out;
}

}  // namespace yamabe::cli
