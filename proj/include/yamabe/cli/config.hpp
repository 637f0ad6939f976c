#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "yamabe/flow/run.hpp"
#include "yamabe/geometry/grid.hpp"
#include "yamabe/variational/quotient.hpp"

namespace yamabe::cli {

struct ModelConfig {
  variational::QuotientModel type = variational::QuotientModel::eguchi_hanson;
  double a = 1.0;  // eguchi-hanson
  int n = 4;       // sphere
  bool operator==(const ModelConfig&) const = default;
};

struct GridConfig {
  std::size_t n_cells = 256;
  geometry::Grading grading = geometry::Grading::uniform;
  double ratio = geometry::RadialGrid::default_ratio;
  bool operator==(const GridConfig&) const = default;
};

struct TimeConfig {
  double t_end = 0.02;
  double safety = 0.4;
  int renorm_every = 20;
  double snapshot_every = 0.005;
  double volume_target = flow::default_volume_target;
  bool operator==(const TimeConfig&) const = default;
};

struct InitConfig {
  std::string type = "constant";  // constant | file
  std::optional<double> value;    // constant only; empty = volume-normalized
  std::string path;               // file only
  double noise = 0.0;             // relative Gaussian perturbation, seeded by --seed
  bool operator==(const InitConfig&) const = default;
};

struct DiagnosticsConfig {
  std::vector<double> cutoffs = {0.1};
  std::vector<double> f_p_exponents = {2.0, 3.0};
  bool operator==(const DiagnosticsConfig&) const = default;
};

struct OutputConfig {
  std::string dir = "out";
  bool operator==(const OutputConfig&) const = default;
};

struct YamabeConfig {
  int max_iterations = 2000;
  double tolerance = 1e-6;
  bool operator==(const YamabeConfig&) const = default;
};

struct EigenConfig {
  int max_iterations = 20000;
  double tolerance = 1e-9;
  // Average scalar curvature compared against lambda1 (n - 1); empty = the
  // average scalar curvature of the metric itself.
  std::optional<double> sigma_inf;
  bool operator==(const EigenConfig&) const = default;
};

struct ScenarioConfig {
  ModelConfig model;
  GridConfig grid;
  TimeConfig time;
  InitConfig init;
  DiagnosticsConfig diagnostics;
  OutputConfig output;
  YamabeConfig yamabe;
  EigenConfig eigen;
  bool operator==(const ScenarioConfig&) const = default;

  // Throws InputError for out-of-range fields.
  void validate() const;

  flow::FlowConfig flow_config() const;
};

// INI text with the sections [model] [grid] [time] [init] [diagnostics]
// [output] [yamabe] [eigen]. Unknown sections or keys, malformed numbers and
// duplicate keys are InputErrors.
ScenarioConfig parse_config(std::istream& in, const std::string& source = "<config>");
ScenarioConfig load_config(const std::string& path);

// Emits every field; parse_config(dump_config(c)) == c.
std::string dump_config(const ScenarioConfig& c);

}  // namespace yamabe::cli
