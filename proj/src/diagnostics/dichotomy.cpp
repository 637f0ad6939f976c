#include "yamabe/diagnostics/dichotomy.hpp"

namespace yamabe::diagnostics {

DichotomyReport assess_dichotomy(const DichotomyInputs& in) {
  DichotomyReport r;
  r.small_energy_ok = small_energy_test(in.s0_plus_norm, in.Y_local);
  r.low_average_ok = low_average_test(in.sigma0, in.Y, in.Y_local, in.n);
  r.max_bubble_count = max_bubble_count(in.sigma_inf, in.Y_local, in.n);
  for (const auto& [t, flag] : in.flags)
    for (std::size_t j = 0; j < flag.cutoffs.size(); ++j)
      r.concentration_cutoff_history.push_back({t, flag.cutoffs[j], flag.fractions[j]});
  r.concentration_detected = !in.flags.empty() && in.flags.back().second.detected;
  return r;
}

}  // namespace yamabe::diagnostics
