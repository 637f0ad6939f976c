#pragma once

#include <vector>

#include "yamabe/diagnostics/monitors.hpp"

namespace yamabe::diagnostics {

struct CutoffSample {
  double t = 0.0;
  double x0 = 0.0;
  double fraction = 0.0;
};

struct DichotomyInputs {
  double s0_plus_norm = 0.0;  // ||(S_0)_+||_{L^2} of the initial metric
  double sigma0 = 0.0;        // unit-volume average scalar curvature at t = 0
  double sigma_inf = 0.0;     // unit-volume sigma at the last available time
  double Y = 0.0;
  double Y_local = 0.0;
  int n = 4;
  // Concentration flags evaluated on successive profiles, with their times.
  std::vector<std::pair<double, ConcentrationFlag>> flags;
};

struct DichotomyReport {
  bool small_energy_ok = false;
  bool low_average_ok = false;
  int max_bubble_count = 0;
  bool concentration_detected = false;
  std::vector<CutoffSample> concentration_cutoff_history;
};

// Concentration is reported if the last evaluated profile is flagged.
DichotomyReport assess_dichotomy(const DichotomyInputs& in);

}  // namespace yamabe::diagnostics
